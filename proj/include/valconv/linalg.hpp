#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "valconv/field.hpp"

namespace valconv {

// A vector of K^d.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::vector<FieldElem> coords) : x_(std::move(coords)) {}
  Vec(std::initializer_list<FieldElem> coords) : x_(coords) {}
  static Vec zeros(const Field& k, std::size_t d) { return Vec(std::vector<FieldElem>(d, k.zero())); }
  static Vec unit(const Field& k, std::size_t d, std::size_t i);

  std::size_t dim() const { return x_.size(); }
  const FieldElem& operator[](std::size_t i) const { return x_[i]; }
  FieldElem& operator[](std::size_t i) { return x_[i]; }
  const std::vector<FieldElem>& coords() const { return x_; }
  bool is_zero() const;

  friend Vec operator+(const Vec& a, const Vec& b);
  friend Vec operator-(const Vec& a, const Vec& b);
  friend Vec operator*(const FieldElem& s, const Vec& v);
  Vec operator-() const;
  friend bool operator==(const Vec& a, const Vec& b) { return a.x_ == b.x_; }

 private:
  std::vector<FieldElem> x_;
};

// Dense row-major matrix.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, const FieldElem& fill)
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}
  static Mat identity(const Field& k, std::size_t n);
  // Columns are the given vectors, each of dimension `rows`.
  static Mat from_columns(const Field& k, std::size_t rows, std::span<const Vec> cols);
  static Mat from_rows(std::span<const Vec> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldElem& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  FieldElem& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  Vec column(std::size_t c) const;
  Vec row(std::size_t r) const;

  friend Vec operator*(const Mat& m, const Vec& v);
  friend Mat operator*(const Mat& a, const Mat& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElem> a_;
};

// Minimum of the coordinate valuations; infinity for the zero vector.
ValExt vval(const Field& k, const Vec& v);

struct Solution {
  Vec particular;
  std::vector<Vec> kernel;
};

// Reduced row echelon form with the list of pivot columns.
struct Echelon {
  Mat reduced;
  std::vector<std::size_t> pivots;
};
Echelon rref(Mat a);

// All solutions of A c = b as particular + K-span(kernel); nullopt if
// inconsistent. Throws DimensionMismatch.
std::optional<Solution> solve(const Field& k, const Mat& a, const Vec& b);
std::vector<Vec> kernel(const Field& k, const Mat& a);
std::size_t rank(const Mat& a);

// Drops generators one at a time until the rest are linearly independent,
// without changing their O-span: for a dependency sum a_i v_i = 0 the vector
// whose coefficient has minimal valuation (lowest index on ties) is an
// O-combination of the others. Returns the surviving indices in order.
std::vector<std::size_t> reduce_generators(const Field& k, std::span<const Vec> vectors);

// A nu-orthogonal basis: nu(sum c_i u_i) = min_i (nu(c_i) + gamma_i).
struct OrthoBasis {
  std::vector<Vec> vectors;
  std::vector<std::size_t> pivots;
  std::vector<std::int64_t> gammas;  // nondecreasing
  // vectors[i] = sum_j transform(i, j) * input[j]; every entry lies in O.
  Mat transform;

  std::size_t size() const { return vectors.size(); }
};

// Valuation-pivoted basis of the O-span of `vectors` (all of dimension d).
OrthoBasis orthogonalize(const Field& k, std::size_t d, std::span<const Vec> vectors);

// Coefficients of x in a linearly independent basis, or nullopt.
std::optional<std::vector<FieldElem>> coords(const Field& k, std::span<const Vec> basis,
                                             const Vec& x);

enum class Scale { Free, Integral };

struct MixedGenerators {
  std::vector<Vec> free;
  std::vector<Vec> integral;
};

// Generators of {c : G c = 0, c_i in O for every Integral index i}.
MixedGenerators constrained_kernel(const Field& k, const Mat& g, std::span<const Scale> scales);

// Some c with G c = x and c_i in O for Integral indices, or nullopt.
std::optional<std::vector<FieldElem>> mixed_solve(const Field& k, const Mat& g,
                                                  std::span<const Scale> scales, const Vec& x);

// The projection along a subspace W onto the coordinate complement of W's
// pivot rows. Its kernel is exactly W, so y in W + L iff project(y) lies in
// project(W + L).
class SubspaceProjector {
 public:
  SubspaceProjector(const Field& k, std::size_t d, std::span<const Vec> spanning);

  // Basis of W in reduced echelon form: basis()[i][pivots()[j]] = delta_ij.
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::size_t dim() const { return d_; }
  Vec project(const Vec& y) const;
  bool in_span(const Vec& y) const { return project(y).is_zero(); }

 private:
  std::size_t d_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace valconv
