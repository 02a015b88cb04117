#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "valconv/field.hpp"
#include "valconv/linalg.hpp"

namespace valconv {

/// An O-submodule W + L of K^d, with W the K-span of `free` and L the O-span
/// of `integral`.
///
/// The constructor also computes a normal form: a reduced echelon basis of W
/// and a nu-orthogonal basis of the projection of L along W onto the
/// coordinate complement of W's pivot rows. The normal form describes the same
/// set; only its gamma-multiset is canonical.
class MixedModule {
 public:
  MixedModule(const Field& k, std::size_t d, std::vector<Vec> free, std::vector<Vec> integral);
  static MixedModule zero(const Field& k, std::size_t d) { return MixedModule(k, d, {}, {}); }

  std::size_t dim() const { return d_; }
  const std::vector<Vec>& free_gens() const { return free_; }
  const std::vector<Vec>& integral_gens() const { return integral_; }

  const std::vector<Vec>& free_basis() const { return free_basis_; }
  const std::vector<std::size_t>& free_pivots() const { return free_pivots_; }
  const OrthoBasis& lattice() const { return lattice_; }
  bool is_zero() const { return free_basis_.empty() && lattice_.size() == 0; }

  // Normal-form generators as matrix columns: free basis first, then lattice.
  Mat generator_matrix(const Field& k) const;
  std::vector<Scale> scales() const;

 private:
  std::size_t d_;
  std::vector<Vec> free_;
  std::vector<Vec> integral_;
  std::vector<Vec> free_basis_;
  std::vector<std::size_t> free_pivots_;
  OrthoBasis lattice_;
};

/// Empty, or translate + module.
class ConvexSet {
 public:
  static ConvexSet empty(std::size_t d) { return ConvexSet(d); }
  ConvexSet(Vec translate, MixedModule module);

  bool is_empty() const { return !body_; }
  std::size_t dim() const { return d_; }
  // Precondition: !is_empty().
  const Vec& translate() const { return body_->translate; }
  const MixedModule& module() const { return body_->module; }

 private:
  struct Body {
    Vec translate;
    MixedModule module;
  };
  explicit ConvexSet(std::size_t d) : d_(d) {}

  std::size_t d_;
  std::optional<Body> body_;
};

// Upward-closed subsets of Z ∪ {∞}: everything, {γ ≥ g}, or {∞}.
struct Delta {
  enum class Kind { Full, AtLeast, OnlyInfinity };
  Kind kind = Kind::Full;
  std::int64_t gamma = 0;

  static Delta full() { return {Kind::Full, 0}; }
  static Delta at_least(std::int64_t g) { return {Kind::AtLeast, g}; }
  static Delta only_infinity() { return {Kind::OnlyInfinity, 0}; }
  bool contains(const ValExt& v) const;
  friend bool operator==(const Delta&, const Delta&) = default;
};

// Translate-carried flag presentation: C = translate +
// { sum c_i u_i : nu(c_i) in delta_i }, with every u_i of valuation 0, Full
// entries first, and gammas nondecreasing.
struct FlagForm {
  struct Entry {
    Vec vector;
    Delta delta;
  };
  std::size_t dim = 0;
  Vec translate;
  std::vector<Entry> entries;
};

// C = translate + map(nu^-1(delta_1) x ... x nu^-1(delta_d)), map invertible.
struct BoxPresentation {
  Mat map;
  Vec translate;
  std::vector<Delta> deltas;
};

// The point with index `index` equals sum_j coefficients[j] * (j-th other
// point, in input order); coefficients are integral and sum to 1.
struct RadonCertificate {
  std::size_t index = 0;
  std::vector<FieldElem> coefficients;
};

ConvexSet conv_hull(const Field& k, std::span<const Vec> points, std::size_t dim);
ConvexSet conv_hull(const Field& k, std::span<const Vec> points);
ConvexSet quasi_ball(const Field& k, const Vec& center, const Delta& radius);
ConvexSet affine_span(const Field& k, const Vec& base, std::vector<Vec> directions);

RadonCertificate radon_point(const Field& k, std::span<const Vec> points);
bool validate_radon(const Field& k, std::span<const Vec> points, const RadonCertificate& cert);
// Indices of at most d+1 points with the same hull, in input order.
std::vector<std::size_t> caratheodory_reduce(const Field& k, std::span<const Vec> points);

bool module_contains(const Field& k, const MixedModule& m, const Vec& v);
bool contains(const Field& k, const ConvexSet& c, const Vec& x);
ConvexSet intersect(const Field& k, const ConvexSet& a, const ConvexSet& b);
bool subset(const Field& k, const ConvexSet& a, const ConvexSet& b);
bool equals(const Field& k, const ConvexSet& a, const ConvexSet& b);

FlagForm flag_decompose(const Field& k, const ConvexSet& c);
// The set a flag form describes, as a ConvexSet (for exact validation).
ConvexSet flag_to_convex(const Field& k, const FlagForm& f);
bool flag_contains(const Field& k, const FlagForm& f, const Vec& x);
BoxPresentation box_presentation(const Field& k, const ConvexSet& c);
bool box_contains(const Field& k, const BoxPresentation& b, const Vec& x);

}  // namespace valconv
