#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "valconv/convex.hpp"

namespace valconv {

// Convex subsets of K^d, indexed; repeats are allowed and counted by index.
struct Family {
  std::size_t dim = 0;
  std::vector<ConvexSet> members;

  std::size_t size() const { return members.size(); }
};

// Parts are index lists into the input points.
struct TverbergPartition {
  std::vector<std::vector<std::size_t>> parts;
};

struct ShatterReport {
  bool shattered = true;
  std::vector<std::size_t> subset;        // failing S, when not shattered
  std::optional<std::size_t> violation;   // index of a point of Y \ S in conv(S)
};

struct FractionalHellyStats {
  mpq_class alpha;
  mpq_class beta;
};

struct SelectionResult {
  std::size_t index = 0;  // into X
  Vec point;
  std::size_t count = 0;
  std::size_t total = 0;
};

constexpr std::size_t kMaxExhaustiveFamily = 20;
constexpr std::size_t kMaxExhaustivePoints = 12;

// Intersection of all members (K^d for the empty family).
ConvexSet intersect_all(const Field& k, const Family& fam);
ConvexSet intersect_indices(const Field& k, const Family& fam, std::span<const std::size_t> idx);

std::optional<Vec> helly_point(const Field& k, const Family& fam);
// The d+1 hulls of the maximal proper subsets of {0, e_1, ..., e_d}; the hull
// omitting e_i comes i-th, the one omitting 0 comes last.
Family helly_lower_bound_witness(const Field& k, std::size_t d);
// {x : x_i = 0} for i = 1..d.
Family coordinate_hyperplanes(const Field& k, std::size_t d);

// Smallest lexicographically-first index set of size <= d whose
// intersection equals the intersection of the whole family. Throws
// EmptyIntersection.
std::vector<std::size_t> breadth_reduce(const Field& k, const Family& fam);

// Throws TooFewPoints when |X| < (d+1)(r-1)+1.
TverbergPartition tverberg_partition(const Field& k, std::span<const Vec> points, std::size_t r);
bool validate_tverberg(const Field& k, std::span<const Vec> points, std::size_t r,
                       const TverbergPartition& p);
// Unordered partitions into r nonempty parts with a common point.
// Requires |X| = (r-1)(d+1)+1 <= 12; throws TooLarge / TooFewPoints.
mpz_class count_tverberg_partitions(const Field& k, std::span<const Vec> points, std::size_t r);
// ((r-1)!)^d.
mpz_class tverberg_count_bound(std::size_t d, std::size_t r);

ShatterReport is_shattered(const Field& k, std::span<const Vec> points);

// Number of distinct membership sign-vectors realized by the probes.
std::size_t dual_atoms(const Field& k, const Family& fam, std::span<const Vec> probes);

// Affine hyperplanes v_1 + a v_2 + ... + a^{d-1} v_d + a^d = 0 for a = 1..n.
Family hyperplane_family(const Field& k, std::size_t d, std::size_t n);

FractionalHellyStats fractional_helly_stats(const Field& k, const Family& fam, std::size_t k_sub);
// Index set of a largest subfamily with a common point (lexicographically
// first among the largest).
std::vector<std::size_t> max_intersecting_subfamily(const Field& k, const Family& fam);

SelectionResult selection_point(const Field& k, std::span<const Vec> points);

// Greedy transversal over witness points of maximal intersecting subfamilies.
// Best-effort size. Throws TooLarge, or Error for an empty member.
std::vector<Vec> pierce(const Field& k, const Family& fam);

}  // namespace valconv
