#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "gkmod/pair.hpp"
#include "gkmod/parabolic.hpp"

namespace gkmod {

struct GenericityReport {
  bool holds = false;
  bool condition1_ok = false;
  bool condition2_ok = false;
  // Dominance witness: a root of n_k with <mu + 2rho - rho_n, alpha> < 0.
  std::optional<TWeight> failing_root;
  // Submultiset witness: a nonempty submultiset S of ch_t n of minimal size
  // with <mu + 2rho - rho_S, rho_S> <= 0.
  std::optional<WeightMultiset<TWeight>> failing_subset;
  std::optional<TWeight> failing_rho_s;
  std::optional<Rational> failing_value;
  CompatibleParabolic parabolic;
};

/// ||mu + 2 rho||^2 in the induced form on t*.
Rational norm2_shifted(const ReductivePair& p, const TWeight& mu);

/// Candidate with least norm2_shifted; ties go to the lexicographically
/// smallest coordinates.
TWeight minimal_ktype(const ReductivePair& p, std::span<const TWeight> candidates);

struct SubmultisetSearch {
  std::optional<WeightMultiset<TWeight>> witness;
  std::size_t nodes = 0;
};

/// Branch-and-bound search for a nonempty submultiset S of `ch` with
/// <c - rho_S, rho_S> <= 0. Weights are branched in order of decreasing
/// <c, beta>; a branch is cut once a lower bound on the concave quadratic
/// over all its completions is positive. With `exact_size`, only submultisets
/// of that total size are considered.
SubmultisetSearch find_nonpositive_submultiset(const ReductivePair& p, const TWeight& c,
                                               const WeightMultiset<TWeight>& ch,
                                               std::optional<int> exact_size = std::nullopt);

/// Dominance and submultiset conditions for the k-type V(mu). mu must be dominant integral
/// and mu + 2 rho regular.
GenericityReport is_generic(const ReductivePair& p, const TWeight& mu);

/// rho~(h) for an sl(2) pair, so that V(m) is generic iff m + 1 >= rho~(h).
std::int64_t sl2_threshold(const ReductivePair& p);

}  // namespace gkmod
