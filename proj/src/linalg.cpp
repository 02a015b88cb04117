#include "valconv/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "valconv/errors.hpp"

namespace valconv {

Vec Vec::unit(const Field& k, std::size_t d, std::size_t i) {
  Vec v = zeros(k, d);
  v[i] = k.one();
  return v;
}

bool Vec::is_zero() const {
  return std::all_of(x_.begin(), x_.end(), [](const FieldElem& e) { return e.is_zero(); });
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("vector addition");
  Vec out = a;
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] += b[i];
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("vector subtraction");
  Vec out = a;
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] -= b[i];
  return out;
}

Vec operator*(const FieldElem& s, const Vec& v) {
  Vec out = v;
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = s * v[i];
  return out;
}

Vec Vec::operator-() const {
  Vec out = *this;
  for (auto& e : out.x_) e = -e;
  return out;
}

Mat Mat::identity(const Field& k, std::size_t n) {
  Mat m(n, n, k.zero());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = k.one();
  return m;
}

Mat Mat::from_columns(const Field& k, std::size_t rows, std::span<const Vec> cols) {
  Mat m(rows, cols.size(), k.zero());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].dim() != rows) throw DimensionMismatch("Mat::from_columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Mat Mat::from_rows(std::span<const Vec> rows) {
  if (rows.empty()) return Mat();
  Mat m(rows.size(), rows[0].dim(), FieldElem());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].dim() != m.cols()) throw DimensionMismatch("Mat::from_rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vec Mat::column(std::size_t c) const {
  std::vector<FieldElem> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return Vec(std::move(out));
}

Vec Mat::row(std::size_t r) const {
  return Vec(std::vector<FieldElem>(a_.begin() + static_cast<long>(r * cols_),
                                    a_.begin() + static_cast<long>((r + 1) * cols_)));
}

Vec operator*(const Mat& m, const Vec& v) {
  if (m.cols() != v.dim()) throw DimensionMismatch("matrix-vector product");
  std::vector<FieldElem> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    FieldElem acc;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero() && !v[c].is_zero()) acc += m(r, c) * v[c];
    out[r] = acc;
  }
  return Vec(std::move(out));
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product");
  Mat out(a.rows(), b.cols(), FieldElem());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) {
      FieldElem acc;
      for (std::size_t i = 0; i < a.cols(); ++i)
        if (!a(r, i).is_zero() && !b(i, c).is_zero()) acc += a(r, i) * b(i, c);
      out(r, c) = acc;
    }
  return out;
}

ValExt vval(const Field& k, const Vec& v) {
  ValExt best = ValExt::infinity();
  for (std::size_t i = 0; i < v.dim(); ++i) best = std::min(best, k.val(v[i]));
  return best;
}

Echelon rref(Mat a) {
  Echelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    // The reduced form is unique, so any nonzero pivot works; the smallest
    // one limits coefficient growth.
    std::size_t pick = a.rows();
    for (std::size_t r = row; r < a.rows(); ++r)
      if (!a(r, col).is_zero() && (pick == a.rows() || a(r, col).size() < a(pick, col).size()))
        pick = r;
    if (pick == a.rows()) continue;
    if (pick != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(pick, c), a(row, c));
    const FieldElem inv = a(row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c)
      if (!a(row, c).is_zero()) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const FieldElem factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        if (!a(row, c).is_zero()) a(r, c) -= factor * a(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(a);
  return out;
}

namespace {

std::vector<Vec> kernel_from_echelon(const Field& k, const Echelon& e, std::size_t n) {
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots)
    if (p < n) is_pivot[p] = true;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v = Vec::zeros(k, n);
    v[f] = k.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      if (e.pivots[i] < n) v[e.pivots[i]] = -e.reduced(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::optional<Solution> solve(const Field& k, const Mat& a, const Vec& b) {
  if (a.rows() != b.dim()) throw DimensionMismatch("solve");
  const std::size_t n = a.cols();
  Mat aug(a.rows(), n + 1, k.zero());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  Echelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
  Solution s{Vec::zeros(k, n), kernel_from_echelon(k, e, n)};
  for (std::size_t i = 0; i < e.pivots.size(); ++i) s.particular[e.pivots[i]] = e.reduced(i, n);
  return s;
}

std::vector<Vec> kernel(const Field& k, const Mat& a) {
  return kernel_from_echelon(k, rref(a), a.cols());
}

std::size_t rank(const Mat& a) { return rref(a).pivots.size(); }

std::vector<std::size_t> reduce_generators(const Field& k, std::span<const Vec> vectors) {
  std::vector<std::size_t> alive(vectors.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
  if (vectors.empty()) return alive;
  const std::size_t d = vectors[0].dim();
  while (!alive.empty()) {
    std::vector<Vec> cols;
    cols.reserve(alive.size());
    for (auto i : alive) cols.push_back(vectors[i]);
    const std::vector<Vec> deps = kernel(k, Mat::from_columns(k, d, cols));
    if (deps.empty()) break;
    const Vec& a = deps.front();
    std::size_t drop = 0;
    ValExt best = ValExt::infinity();
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const ValExt v = k.val(a[j]);
      if (v < best) {
        best = v;
        drop = j;
      }
    }
    alive.erase(alive.begin() + static_cast<long>(drop));
  }
  return alive;
}

OrthoBasis orthogonalize(const Field& k, std::size_t d, std::span<const Vec> vectors) {
  for (const auto& v : vectors)
    if (v.dim() != d) throw DimensionMismatch("orthogonalize");
  const std::size_t n = vectors.size();
  struct Working {
    Vec v;
    Vec t;  // coefficients over the input list
  };
  std::vector<Working> work;
  for (auto i : reduce_generators(k, vectors)) work.push_back({vectors[i], Vec::unit(k, n, i)});

  OrthoBasis out;
  std::vector<Vec> rows;
  while (!work.empty()) {
    std::size_t pick = 0;
    ValExt best = ValExt::infinity();
    for (std::size_t j = 0; j < work.size(); ++j) {
      const ValExt v = vval(k, work[j].v);
      if (v < best) {
        best = v;
        pick = j;
      }
    }
    Working u = std::move(work[pick]);
    work.erase(work.begin() + static_cast<long>(pick));
    std::size_t pivot = 0;
    while (k.val(u.v[pivot]) != best) ++pivot;
    const FieldElem lead_inv = u.v[pivot].inverse();
    for (auto& w : work) {
      if (w.v[pivot].is_zero()) continue;
      // nu(m) >= 0 because nu(w) >= nu(u) = nu(u[pivot]).
      const FieldElem m = w.v[pivot] * lead_inv;
      w.v = w.v - m * u.v;
      w.t = w.t - m * u.t;
    }
    out.vectors.push_back(std::move(u.v));
    out.pivots.push_back(pivot);
    out.gammas.push_back(best.value());
    rows.push_back(std::move(u.t));
  }
  out.transform = rows.empty() ? Mat(0, n, k.zero()) : Mat::from_rows(rows);
  return out;
}

std::optional<std::vector<FieldElem>> coords(const Field& k, std::span<const Vec> basis,
                                             const Vec& x) {
  auto s = solve(k, Mat::from_columns(k, x.dim(), basis), x);
  if (!s) return std::nullopt;
  if (!s->kernel.empty()) throw std::logic_error("coords: basis is linearly dependent");
  return s->particular.coords();
}

MixedGenerators constrained_kernel(const Field& k, const Mat& g, std::span<const Scale> scales) {
  if (scales.size() != g.cols()) throw DimensionMismatch("constrained_kernel");
  const std::vector<Vec> ker = kernel(k, g);
  std::vector<std::size_t> integral_idx;
  for (std::size_t i = 0; i < scales.size(); ++i)
    if (scales[i] == Scale::Integral) integral_idx.push_back(i);

  MixedGenerators out;
  if (ker.empty()) return out;
  if (integral_idx.empty()) {
    out.free = ker;
    return out;
  }
  // P maps kernel parameters to the integral coordinates.
  Mat p(integral_idx.size(), ker.size(), k.zero());
  for (std::size_t r = 0; r < integral_idx.size(); ++r)
    for (std::size_t c = 0; c < ker.size(); ++c) p(r, c) = ker[c][integral_idx[r]];

  auto combine = [&](const Vec& params) {
    Vec v = Vec::zeros(k, g.cols());
    for (std::size_t c = 0; c < ker.size(); ++c)
      if (!params[c].is_zero()) v = v + params[c] * ker[c];
    return v;
  };
  for (const auto& z : kernel(k, p)) out.free.push_back(combine(z));

  // On the pivot columns P is injective; the integral points of its image are
  // the O-span of the orthogonal basis rescaled to valuation 0.
  const std::vector<std::size_t> cols = rref(p).pivots;
  std::vector<Vec> images;
  for (auto c : cols) images.push_back(p.column(c));
  const OrthoBasis ob = orthogonalize(k, integral_idx.size(), images);
  for (std::size_t i = 0; i < ob.size(); ++i) {
    Vec params = Vec::zeros(k, ker.size());
    for (std::size_t j = 0; j < cols.size(); ++j) params[cols[j]] = ob.transform(i, j);
    out.integral.push_back(k.uniformizer_pow(-ob.gammas[i]) * combine(params));
  }
  return out;
}

std::optional<std::vector<FieldElem>> mixed_solve(const Field& k, const Mat& g,
                                                  std::span<const Scale> scales, const Vec& x) {
  if (scales.size() != g.cols()) throw DimensionMismatch("mixed_solve: scales");
  if (x.dim() != g.rows()) throw DimensionMismatch("mixed_solve: target");
  const std::size_t d = g.rows();
  std::vector<std::size_t> free_idx, int_idx;
  std::vector<Vec> free_cols, int_cols;
  for (std::size_t c = 0; c < g.cols(); ++c) {
    if (scales[c] == Scale::Free) {
      free_idx.push_back(c);
      free_cols.push_back(g.column(c));
    } else {
      int_idx.push_back(c);
      int_cols.push_back(g.column(c));
    }
  }
  const SubspaceProjector proj(k, d, free_cols);
  std::vector<Vec> projected;
  for (const auto& v : int_cols) projected.push_back(proj.project(v));
  const OrthoBasis ob = orthogonalize(k, d, projected);
  const auto c = coords(k, ob.vectors, proj.project(x));
  if (!c) return std::nullopt;
  for (const auto& ci : *c)
    if (!k.is_integral(ci)) return std::nullopt;

  std::vector<FieldElem> witness(g.cols(), k.zero());
  Vec residual = x;
  for (std::size_t j = 0; j < int_idx.size(); ++j) {
    FieldElem o = k.zero();
    for (std::size_t i = 0; i < ob.size(); ++i) o += (*c)[i] * ob.transform(i, j);
    witness[int_idx[j]] = o;
    if (!o.is_zero()) residual = residual - o * int_cols[j];
  }
  const auto s = solve(k, Mat::from_columns(k, d, free_cols), residual);
  if (!s) throw std::logic_error("mixed_solve: residual left the free span");
  for (std::size_t j = 0; j < free_idx.size(); ++j) witness[free_idx[j]] = s->particular[j];
  return witness;
}

SubspaceProjector::SubspaceProjector(const Field& k, std::size_t d, std::span<const Vec> spanning)
    : d_(d) {
  if (spanning.empty()) return;
  Mat m(spanning.size(), d, k.zero());
  for (std::size_t r = 0; r < spanning.size(); ++r) {
    if (spanning[r].dim() != d) throw DimensionMismatch("SubspaceProjector");
    for (std::size_t c = 0; c < d; ++c) m(r, c) = spanning[r][c];
  }
  Echelon e = rref(std::move(m));
  pivots_ = e.pivots;
  for (std::size_t i = 0; i < pivots_.size(); ++i) basis_.push_back(e.reduced.row(i));
}

Vec SubspaceProjector::project(const Vec& y) const {
  if (y.dim() != d_) throw DimensionMismatch("SubspaceProjector::project");
  Vec out = y;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const FieldElem coeff = y[pivots_[i]];
    if (!coeff.is_zero()) out = out - coeff * basis_[i];
  }
  return out;
}

}  // namespace valconv
