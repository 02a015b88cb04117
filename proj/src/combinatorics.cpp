#include "valconv/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>

#include "valconv/errors.hpp"

namespace valconv {

namespace {

// Visits the size-s subsets of {0..n-1} in lexicographic order until `visit`
// returns true. Returns whether it was stopped.
bool for_each_combination(std::size_t n, std::size_t s,
                          const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  if (s > n) return false;
  std::vector<std::size_t> idx(s);
  for (std::size_t i = 0; i < s; ++i) idx[i] = i;
  while (true) {
    if (visit(idx)) return true;
    std::size_t i = s;
    while (i > 0 && idx[i - 1] == n - s + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
}

mpz_class binomial(std::size_t n, std::size_t k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

std::vector<Vec> pick(std::span<const Vec> points, std::span<const std::size_t> idx) {
  std::vector<Vec> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(points[i]);
  return out;
}

std::size_t dim_of(std::span<const Vec> points) {
  if (points.empty()) throw TooFewPoints("empty point list");
  return points.front().dim();
}

}  // namespace

ConvexSet intersect_indices(const Field& k, const Family& fam, std::span<const std::size_t> idx) {
  ConvexSet acc = quasi_ball(k, Vec::zeros(k, fam.dim), Delta::full());
  for (auto i : idx) {
    acc = intersect(k, acc, fam.members.at(i));
    if (acc.is_empty()) break;
  }
  return acc;
}

ConvexSet intersect_all(const Field& k, const Family& fam) {
  std::vector<std::size_t> idx(fam.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return intersect_indices(k, fam, idx);
}

std::optional<Vec> helly_point(const Field& k, const Family& fam) {
  const ConvexSet all = intersect_all(k, fam);
  if (all.is_empty()) return std::nullopt;
  return all.translate();
}

Family helly_lower_bound_witness(const Field& k, std::size_t d) {
  if (d == 0) throw Error("helly witness needs d >= 1");
  std::vector<Vec> corners{Vec::zeros(k, d)};
  for (std::size_t i = 0; i < d; ++i) corners.push_back(Vec::unit(k, d, i));
  Family fam{d, {}};
  auto omit = [&](std::size_t skip) {
    std::vector<Vec> rest;
    for (std::size_t i = 0; i < corners.size(); ++i)
      if (i != skip) rest.push_back(corners[i]);
    fam.members.push_back(conv_hull(k, rest));
  };
  for (std::size_t i = 1; i <= d; ++i) omit(i);
  omit(0);
  return fam;
}

Family coordinate_hyperplanes(const Field& k, std::size_t d) {
  Family fam{d, {}};
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Vec> dirs;
    for (std::size_t j = 0; j < d; ++j)
      if (j != i) dirs.push_back(Vec::unit(k, d, j));
    fam.members.push_back(affine_span(k, Vec::zeros(k, d), std::move(dirs)));
  }
  return fam;
}

std::vector<std::size_t> breadth_reduce(const Field& k, const Family& fam) {
  const ConvexSet all = intersect_all(k, fam);
  if (all.is_empty()) throw EmptyIntersection();
  if (fam.size() == 0) return {};
  std::vector<std::size_t> found;
  for (std::size_t s = 1; s <= std::min(fam.dim, fam.size()); ++s) {
    const bool hit = for_each_combination(fam.size(), s, [&](const std::vector<std::size_t>& idx) {
      if (!equals(k, intersect_indices(k, fam, idx), all)) return false;
      found = idx;
      return true;
    });
    if (hit) return found;
  }
  throw Error("no subfamily of size <= d reproduces the intersection");
}

TverbergPartition tverberg_partition(const Field& k, std::span<const Vec> points, std::size_t r) {
  if (r == 0) throw Error("tverberg_partition needs r >= 1");
  const std::size_t d = dim_of(points);
  if (points.size() < (d + 1) * (r - 1) + 1)
    throw TooFewPoints("tverberg_partition needs at least (d+1)(r-1)+1 points");
  std::vector<std::size_t> remaining(points.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  TverbergPartition out;
  for (std::size_t part = 0; part + 1 < r; ++part) {
    const std::vector<Vec> rest = pick(points, remaining);
    std::vector<std::size_t> local = caratheodory_reduce(k, rest);
    // Extra points of the remainder lie in its hull, so padding keeps it.
    for (std::size_t i = 0; local.size() < d + 1; ++i)
      if (std::find(local.begin(), local.end(), i) == local.end()) local.push_back(i);
    std::sort(local.begin(), local.end());
    std::vector<std::size_t> chosen;
    for (auto i : local) chosen.push_back(remaining[i]);
    for (auto it = local.rbegin(); it != local.rend(); ++it)
      remaining.erase(remaining.begin() + static_cast<long>(*it));
    out.parts.push_back(std::move(chosen));
  }
  out.parts.push_back(remaining);
  return out;
}

bool validate_tverberg(const Field& k, std::span<const Vec> points, std::size_t r,
                       const TverbergPartition& p) {
  if (points.empty() || p.parts.size() != r) return false;
  const std::size_t d = points.front().dim();
  std::vector<int> seen(points.size(), 0);
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t want = i + 1 < r ? d + 1 : points.size() - (d + 1) * (r - 1);
    if (p.parts[i].size() != want) return false;
    for (auto j : p.parts[i]) {
      if (j >= points.size() || seen[j]++) return false;
    }
  }
  std::vector<ConvexSet> hulls;
  for (const auto& part : p.parts) hulls.push_back(conv_hull(k, pick(points, part), d));
  for (std::size_t i = 0; i + 1 < r; ++i)
    if (!subset(k, hulls[i + 1], hulls[i])) return false;
  return true;
}

mpz_class tverberg_count_bound(std::size_t d, std::size_t r) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), r - 1);
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), f.get_mpz_t(), d);
  return out;
}

mpz_class count_tverberg_partitions(const Field& k, std::span<const Vec> points, std::size_t r) {
  if (r == 0) throw Error("count_tverberg_partitions needs r >= 1");
  const std::size_t d = dim_of(points);
  const std::size_t n = points.size();
  if (n > kMaxExhaustivePoints) throw TooLarge("count_tverberg_partitions: at most 12 points");
  if (n != (r - 1) * (d + 1) + 1)
    throw TooFewPoints("count_tverberg_partitions needs exactly (r-1)(d+1)+1 points");

  std::unordered_map<unsigned, ConvexSet> hull_cache;
  auto hull_of = [&](unsigned mask) -> const ConvexSet& {
    auto it = hull_cache.find(mask);
    if (it != hull_cache.end()) return it->second;
    std::vector<Vec> part;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) part.push_back(points[i]);
    return hull_cache.emplace(mask, conv_hull(k, part, d)).first->second;
  };

  // Restricted growth strings enumerate unordered set partitions.
  mpz_class count = 0;
  std::vector<std::size_t> block(n, 0);
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t used) {
    if (used + (n - i) < r) return;
    if (i == n) {
      if (used != r) return;
      std::vector<unsigned> masks(r, 0);
      for (std::size_t j = 0; j < n; ++j) masks[block[j]] |= 1U << j;
      ConvexSet acc = hull_of(masks[0]);
      for (std::size_t b = 1; b < r && !acc.is_empty(); ++b) acc = intersect(k, acc, hull_of(masks[b]));
      if (!acc.is_empty()) ++count;
      return;
    }
    for (std::size_t b = 0; b < std::min(used + 1, r); ++b) {
      block[i] = b;
      go(i + 1, std::max(used, b + 1));
    }
  };
  go(0, 0);
  return count;
}

ShatterReport is_shattered(const Field& k, std::span<const Vec> points) {
  const std::size_t n = points.size();
  if (n > kMaxExhaustiveFamily) throw TooLarge("is_shattered: at most 20 points");
  ShatterReport report;
  if (n == 0) return report;
  const std::size_t d = points.front().dim();
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1UL) s.push_back(i);
    if (s.size() == n) continue;
    const ConvexSet hull = conv_hull(k, pick(points, s), d);
    for (std::size_t j = 0; j < n; ++j) {
      if (mask >> j & 1UL) continue;
      if (contains(k, hull, points[j])) {
        report.shattered = false;
        report.subset = s;
        report.violation = j;
        return report;
      }
    }
  }
  return report;
}

std::size_t dual_atoms(const Field& k, const Family& fam, std::span<const Vec> probes) {
  std::set<std::vector<bool>> signs;
  for (const auto& q : probes) {
    std::vector<bool> s;
    s.reserve(fam.size());
    for (const auto& m : fam.members) s.push_back(contains(k, m, q));
    signs.insert(std::move(s));
  }
  return signs.size();
}

Family hyperplane_family(const Field& k, std::size_t d, std::size_t n) {
  if (d == 0 || n == 0) throw Error("hyperplane_family needs d >= 1 and n >= 1");
  if (k.kind() == FieldKind::RatFunc && k.prime() != 0 && mpz_class(static_cast<unsigned long>(n)) >= k.prime())
    throw Error("hyperplane_family needs n below the characteristic");
  Family fam{d, {}};
  for (std::size_t j = 1; j <= n; ++j) {
    const FieldElem a = k.from_int(static_cast<long>(j));
    std::vector<FieldElem> powers{k.one()};
    for (std::size_t e = 1; e <= d; ++e) powers.push_back(powers.back() * a);
    Vec base = Vec::zeros(k, d);
    base[0] = -powers[d];
    std::vector<Vec> dirs;
    for (std::size_t c = 1; c < d; ++c) {
      Vec v = Vec::unit(k, d, c);
      v[0] = -powers[c];
      dirs.push_back(std::move(v));
    }
    fam.members.push_back(affine_span(k, base, std::move(dirs)));
  }
  return fam;
}

std::vector<std::size_t> max_intersecting_subfamily(const Field& k, const Family& fam) {
  const std::size_t n = fam.size();
  if (n > kMaxExhaustiveFamily) throw TooLarge("at most 20 family members");
  std::vector<std::size_t> best, chosen;
  // Emptiness is monotone in the subfamily, so an empty partial intersection
  // prunes every extension.
  std::function<void(std::size_t, const ConvexSet&)> go = [&](std::size_t i, const ConvexSet& acc) {
    if (chosen.size() + (n - i) <= best.size()) return;
    if (i == n) {
      best = chosen;
      return;
    }
    const ConvexSet next = intersect(k, acc, fam.members[i]);
    if (!next.is_empty()) {
      chosen.push_back(i);
      go(i + 1, next);
      chosen.pop_back();
    }
    go(i + 1, acc);
  };
  go(0, quasi_ball(k, Vec::zeros(k, fam.dim), Delta::full()));
  return best;
}

FractionalHellyStats fractional_helly_stats(const Field& k, const Family& fam, std::size_t k_sub) {
  const std::size_t n = fam.size();
  if (n > kMaxExhaustiveFamily) throw TooLarge("fractional_helly_stats: at most 20 members");
  FractionalHellyStats out{0, 0};
  if (n == 0) return out;
  if (k_sub <= n && k_sub > 0) {
    mpz_class hits = 0;
    for_each_combination(n, k_sub, [&](const std::vector<std::size_t>& idx) {
      if (!intersect_indices(k, fam, idx).is_empty()) ++hits;
      return false;
    });
    out.alpha = mpq_class(hits, binomial(n, k_sub));
    out.alpha.canonicalize();
  }
  out.beta = mpq_class(static_cast<unsigned long>(max_intersecting_subfamily(k, fam).size()),
                       static_cast<unsigned long>(n));
  out.beta.canonicalize();
  return out;
}

SelectionResult selection_point(const Field& k, std::span<const Vec> points) {
  const std::size_t n = points.size();
  const std::size_t d = dim_of(points);
  if (n > kMaxExhaustivePoints) throw TooLarge("selection_point: at most 12 points");
  if (n < d + 1) throw TooFewPoints("selection_point needs at least d+1 points");
  std::vector<std::size_t> counts(n, 0);
  std::size_t total = 0;
  for_each_combination(n, d + 1, [&](const std::vector<std::size_t>& idx) {
    ++total;
    const ConvexSet hull = conv_hull(k, pick(points, idx), d);
    for (std::size_t a = 0; a < n; ++a)
      if (contains(k, hull, points[a])) ++counts[a];
    return false;
  });
  const auto best = static_cast<std::size_t>(
      std::max_element(counts.begin(), counts.end()) - counts.begin());
  return {best, points[best], counts[best], total};
}

std::vector<Vec> pierce(const Field& k, const Family& fam) {
  const std::size_t n = fam.size();
  if (n > kMaxExhaustiveFamily) throw TooLarge("pierce: at most 20 members");
  for (const auto& m : fam.members)
    if (m.is_empty()) throw Error("pierce: an empty member cannot be hit");

  std::vector<Vec> candidates;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, const ConvexSet&)> go = [&](std::size_t i, const ConvexSet& acc) {
    if (i == n) {
      if (chosen.empty()) return;
      for (std::size_t j = 0; j < n; ++j) {
        if (std::find(chosen.begin(), chosen.end(), j) != chosen.end()) continue;
        if (!intersect(k, acc, fam.members[j]).is_empty()) return;  // not maximal
      }
      candidates.push_back(acc.translate());
      return;
    }
    const ConvexSet next = intersect(k, acc, fam.members[i]);
    if (!next.is_empty()) {
      chosen.push_back(i);
      go(i + 1, next);
      chosen.pop_back();
    }
    go(i + 1, acc);
  };
  go(0, quasi_ball(k, Vec::zeros(k, fam.dim), Delta::full()));

  std::vector<std::vector<bool>> hits;
  for (const auto& c : candidates) {
    std::vector<bool> h;
    for (const auto& m : fam.members) h.push_back(contains(k, m, c));
    hits.push_back(std::move(h));
  }
  std::vector<bool> covered(n, false);
  std::size_t left = n;
  std::vector<Vec> out;
  while (left > 0) {
    std::size_t best = 0, best_gain = 0;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      std::size_t gain = 0;
      for (std::size_t j = 0; j < n; ++j) gain += hits[c][j] && !covered[j];
      if (gain > best_gain) {
        best_gain = gain;
        best = c;
      }
    }
    if (best_gain == 0) throw std::logic_error("pierce: candidates do not cover the family");
    out.push_back(candidates[best]);
    for (std::size_t j = 0; j < n; ++j)
      if (hits[best][j] && !covered[j]) {
        covered[j] = true;
        --left;
      }
  }
  return out;
}

}  // namespace valconv
