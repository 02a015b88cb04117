#include "valconv/convex.hpp"

#include <stdexcept>

#include "valconv/errors.hpp"

namespace valconv {

MixedModule::MixedModule(const Field& k, std::size_t d, std::vector<Vec> free,
                         std::vector<Vec> integral)
    : d_(d), free_(std::move(free)), integral_(std::move(integral)) {
  for (const auto& v : free_)
    if (v.dim() != d) throw DimensionMismatch("MixedModule free generator");
  for (const auto& v : integral_)
    if (v.dim() != d) throw DimensionMismatch("MixedModule integral generator");
  const SubspaceProjector proj(k, d, free_);
  free_basis_ = proj.basis();
  free_pivots_ = proj.pivots();
  std::vector<Vec> projected;
  projected.reserve(integral_.size());
  for (const auto& v : integral_) projected.push_back(proj.project(v));
  lattice_ = orthogonalize(k, d, projected);
}

Mat MixedModule::generator_matrix(const Field& k) const {
  std::vector<Vec> cols = free_basis_;
  cols.insert(cols.end(), lattice_.vectors.begin(), lattice_.vectors.end());
  return Mat::from_columns(k, d_, cols);
}

std::vector<Scale> MixedModule::scales() const {
  std::vector<Scale> s(free_basis_.size(), Scale::Free);
  s.insert(s.end(), lattice_.size(), Scale::Integral);
  return s;
}

ConvexSet::ConvexSet(Vec translate, MixedModule module) : d_(translate.dim()) {
  if (module.dim() != d_) throw DimensionMismatch("ConvexSet");
  body_.emplace(Body{std::move(translate), std::move(module)});
}

bool Delta::contains(const ValExt& v) const {
  switch (kind) {
    case Kind::Full: return true;
    case Kind::AtLeast: return v >= ValExt(gamma);
    case Kind::OnlyInfinity: return v.is_infinite();
  }
  return false;
}

ConvexSet conv_hull(const Field& k, std::span<const Vec> points, std::size_t dim) {
  if (points.empty()) return ConvexSet::empty(dim);
  const Vec& base = points.front();
  std::vector<Vec> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].dim() != base.dim()) throw DimensionMismatch("conv_hull");
    diffs.push_back(points[i] - base);
  }
  std::vector<Vec> gens;
  for (auto i : reduce_generators(k, diffs)) gens.push_back(diffs[i]);
  return ConvexSet(base, MixedModule(k, base.dim(), {}, std::move(gens)));
}

ConvexSet conv_hull(const Field& k, std::span<const Vec> points) {
  return conv_hull(k, points, points.empty() ? 0 : points.front().dim());
}

ConvexSet quasi_ball(const Field& k, const Vec& center, const Delta& radius) {
  const std::size_t d = center.dim();
  std::vector<Vec> free, integral;
  for (std::size_t i = 0; i < d; ++i) {
    if (radius.kind == Delta::Kind::Full) free.push_back(Vec::unit(k, d, i));
    if (radius.kind == Delta::Kind::AtLeast)
      integral.push_back(k.uniformizer_pow(radius.gamma) * Vec::unit(k, d, i));
  }
  return ConvexSet(center, MixedModule(k, d, std::move(free), std::move(integral)));
}

ConvexSet affine_span(const Field& k, const Vec& base, std::vector<Vec> directions) {
  return ConvexSet(base, MixedModule(k, base.dim(), std::move(directions), {}));
}

RadonCertificate radon_point(const Field& k, std::span<const Vec> points) {
  if (points.empty()) throw TooFewPoints("radon_point needs at least d+2 points");
  const std::size_t d = points.front().dim();
  const std::size_t n = points.size();
  if (n < d + 2) throw TooFewPoints("radon_point needs at least d+2 points");
  // Rows: the d coordinates, then the all-ones row.
  Mat system(d + 1, n, k.zero());
  for (std::size_t j = 0; j < n; ++j) {
    if (points[j].dim() != d) throw DimensionMismatch("radon_point");
    for (std::size_t i = 0; i < d; ++i) system(i, j) = points[j][i];
    system(d, j) = k.one();
  }
  const std::vector<Vec> deps = kernel(k, system);
  const Vec& a = deps.front();
  RadonCertificate cert;
  ValExt best = ValExt::infinity();
  for (std::size_t j = 0; j < n; ++j) {
    const ValExt v = k.val(a[j]);
    if (v < best) {
      best = v;
      cert.index = j;
    }
  }
  const FieldElem lead = a[cert.index];
  for (std::size_t j = 0; j < n; ++j)
    if (j != cert.index) cert.coefficients.push_back(-a[j] / lead);
  return cert;
}

bool validate_radon(const Field& k, std::span<const Vec> points, const RadonCertificate& cert) {
  if (cert.index >= points.size() || cert.coefficients.size() + 1 != points.size()) return false;
  const std::size_t d = points[cert.index].dim();
  FieldElem sum = k.zero();
  Vec combo = Vec::zeros(k, d);
  std::size_t j = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i == cert.index) continue;
    const FieldElem& c = cert.coefficients[j++];
    if (!k.is_integral(c)) return false;
    sum += c;
    combo = combo + c * points[i];
  }
  return sum == k.one() && combo == points[cert.index];
}

std::vector<std::size_t> caratheodory_reduce(const Field& k, std::span<const Vec> points) {
  if (points.empty()) throw TooFewPoints("caratheodory_reduce needs a point");
  const std::size_t d = points.front().dim();
  std::vector<std::size_t> keep(points.size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  while (keep.size() > d + 1) {
    std::vector<Vec> current;
    for (auto i : keep) current.push_back(points[i]);
    const RadonCertificate cert = radon_point(k, current);
    keep.erase(keep.begin() + static_cast<long>(cert.index));
  }
  return keep;
}

bool module_contains(const Field& k, const MixedModule& m, const Vec& v) {
  if (v.dim() != m.dim()) throw DimensionMismatch("module_contains");
  return mixed_solve(k, m.generator_matrix(k), m.scales(), v).has_value();
}

bool contains(const Field& k, const ConvexSet& c, const Vec& x) {
  if (x.dim() != c.dim()) throw DimensionMismatch("contains");
  if (c.is_empty()) return false;
  return module_contains(k, c.module(), x - c.translate());
}

namespace {

std::vector<FieldElem> head(const Vec& v, std::size_t n) {
  return {v.coords().begin(), v.coords().begin() + static_cast<long>(n)};
}

}  // namespace

ConvexSet intersect(const Field& k, const ConvexSet& a, const ConvexSet& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("intersect");
  const std::size_t d = a.dim();
  if (a.is_empty() || b.is_empty()) return ConvexSet::empty(d);
  const Mat g1 = a.module().generator_matrix(k);
  const Mat g2 = b.module().generator_matrix(k);
  const std::size_t n1 = g1.cols();
  Mat g(d, n1 + g2.cols(), k.zero());
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < n1; ++c) g(r, c) = g1(r, c);
    for (std::size_t c = 0; c < g2.cols(); ++c) g(r, n1 + c) = -g2(r, c);
  }
  std::vector<Scale> scales = a.module().scales();
  const std::vector<Scale> s2 = b.module().scales();
  scales.insert(scales.end(), s2.begin(), s2.end());

  const auto w = mixed_solve(k, g, scales, b.translate() - a.translate());
  if (!w) return ConvexSet::empty(d);
  const Vec point = a.translate() + g1 * Vec(head(Vec(*w), n1));

  const MixedGenerators ck = constrained_kernel(k, g, scales);
  std::vector<Vec> free, integral;
  for (const auto& z : ck.free) free.push_back(g1 * Vec(head(z, n1)));
  for (const auto& z : ck.integral) integral.push_back(g1 * Vec(head(z, n1)));
  return ConvexSet(point, MixedModule(k, d, std::move(free), std::move(integral)));
}

bool subset(const Field& k, const ConvexSet& a, const ConvexSet& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("subset");
  if (a.is_empty()) return true;
  if (b.is_empty()) return false;
  if (!contains(k, b, a.translate())) return false;
  // K·v lies in W + L with L finitely generated exactly when v lies in W.
  const SubspaceProjector target(k, b.dim(), b.module().free_basis());
  for (const auto& v : a.module().free_basis())
    if (!target.in_span(v)) return false;
  for (const auto& v : a.module().lattice().vectors)
    if (!module_contains(k, b.module(), v)) return false;
  return true;
}

bool equals(const Field& k, const ConvexSet& a, const ConvexSet& b) {
  return subset(k, a, b) && subset(k, b, a);
}

FlagForm flag_decompose(const Field& k, const ConvexSet& c) {
  if (c.is_empty()) throw Error("flag_decompose of the empty set");
  FlagForm out;
  out.dim = c.dim();
  out.translate = c.translate();
  const MixedModule& m = c.module();
  const OrthoBasis free = orthogonalize(k, c.dim(), m.free_basis());
  for (std::size_t i = 0; i < free.size(); ++i)
    out.entries.push_back({k.uniformizer_pow(-free.gammas[i]) * free.vectors[i], Delta::full()});
  const OrthoBasis& lat = m.lattice();
  for (std::size_t i = 0; i < lat.size(); ++i)
    out.entries.push_back({k.uniformizer_pow(-lat.gammas[i]) * lat.vectors[i],
                           Delta::at_least(lat.gammas[i])});
  return out;
}

ConvexSet flag_to_convex(const Field& k, const FlagForm& f) {
  std::vector<Vec> free, integral;
  for (const auto& e : f.entries) {
    switch (e.delta.kind) {
      case Delta::Kind::Full: free.push_back(e.vector); break;
      case Delta::Kind::AtLeast: integral.push_back(k.uniformizer_pow(e.delta.gamma) * e.vector); break;
      case Delta::Kind::OnlyInfinity: break;
    }
  }
  return ConvexSet(f.translate, MixedModule(k, f.dim, std::move(free), std::move(integral)));
}

bool flag_contains(const Field& k, const FlagForm& f, const Vec& x) {
  if (x.dim() != f.dim) throw DimensionMismatch("flag_contains");
  std::vector<Vec> basis;
  for (const auto& e : f.entries) basis.push_back(e.vector);
  const auto c = coords(k, basis, x - f.translate);
  if (!c) return false;
  for (std::size_t i = 0; i < c->size(); ++i)
    if (!f.entries[i].delta.contains(k.val((*c)[i]))) return false;
  return true;
}

BoxPresentation box_presentation(const Field& k, const ConvexSet& c) {
  const FlagForm f = flag_decompose(k, c);
  std::vector<Vec> cols;
  BoxPresentation out;
  for (const auto& e : f.entries) {
    cols.push_back(e.vector);
    out.deltas.push_back(e.delta);
  }
  // Complete to a basis; the completing directions carry only the zero
  // coefficient.
  for (std::size_t i = 0; i < f.dim && cols.size() < f.dim; ++i) {
    const SubspaceProjector span(k, f.dim, cols);
    const Vec e = Vec::unit(k, f.dim, i);
    if (span.in_span(e)) continue;
    cols.push_back(e);
    out.deltas.push_back(Delta::only_infinity());
  }
  out.map = Mat::from_columns(k, f.dim, cols);
  out.translate = f.translate;
  return out;
}

bool box_contains(const Field& k, const BoxPresentation& b, const Vec& x) {
  const auto s = solve(k, b.map, x - b.translate);
  if (!s) return false;
  for (std::size_t i = 0; i < b.deltas.size(); ++i)
    if (!b.deltas[i].contains(k.val(s->particular[i]))) return false;
  return true;
}

}  // namespace valconv
