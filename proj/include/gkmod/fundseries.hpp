#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gkmod/genericity.hpp"
#include "gkmod/pair.hpp"
#include "gkmod/parabolic.hpp"

namespace gkmod {

/// Simple finite-dimensional p-module E, described by its highest weight nu
/// with respect to the Borel b = (positive roots of m) + n inside p.
struct InducingModule {
  GWeight nu;
  TWeight omega;        // nu restricted to t
  std::int64_t dim_e = 1;
  TWeight mu;           // omega + 2 rho_n^perp
  TWeight lambda;       // parameter of the parabolic E lives on
  GWeight rho_b;        // half-sum of the positive roots of b
};

/// Validates nu against the minimal parabolic `par` and fills in the derived
/// fields. nu must be dominant integral for the roots of m.
InducingModule make_inducing_module(const ReductivePair& p, const CompatibleParabolic& par, const GWeight& nu);

/// Finds a minimal compatible parabolic p with p = p_{mu + 2rho} for
/// mu = nu|_t + 2 rho_n^perp(p), by fixed-point iteration from the chamber of
/// rho~. Throws ValidationError if none is found; callers can then pass an
/// explicit lambda to compatible_parabolic instead.
CompatibleParabolic fundamental_parabolic(const ReductivePair& p, const GWeight& nu);

struct KostantTerm {
  int length = 0;
  TWeight weight;
};

/// Weights of H^*(n_k, V(delta)): one term (l(w), w(delta + rho) - rho) per w in W_k.
std::vector<KostantTerm> kostant_weights(const ReductivePair& p, const TWeight& delta, const WeylLimits& limits = {});

/// Vector partition function of a multiset of generators: the coefficient of
/// e^target in prod_beta (1 - e^beta)^(-mult beta). Every generator must pair
/// strictly positively with the grading functional. Memoized across calls.
class PartitionFunction {
 public:
  PartitionFunction(const WeightMultiset<TWeight>& generators, RVector grading_functional);

  std::int64_t operator()(const TWeight& target);

 private:
  std::int64_t count(std::size_t j, const TWeight& target);
  Rational grade(const TWeight& x) const { return dot(grading_, x.coords()); }

  std::vector<TWeight> generators_;
  RVector grading_;
  std::map<std::pair<std::size_t, TWeight>, std::int64_t> memo_;
};

/// Graded by <grading, .> in the induced form on t*.
std::int64_t partition_count(const ReductivePair& p, const WeightMultiset<TWeight>& generators,
                             const TWeight& target, const TWeight& grading);

struct FundseriesOptions {
  WeylLimits weyl;
  std::size_t max_candidates = 1000000;
};

/// Alternating sum
///   dim E * sum_{w in W_k} (-1)^l(w) P(w(delta + rho) - rho - omega - 2 rho_n^perp)
/// with P the partition function of ch_t(n cap k^perp). Equals the k-type
/// multiplicity of V(delta) in F^s(p, E) when V(mu) is generic.
std::int64_t euler_multiplicity(const ReductivePair& p, const CompatibleParabolic& par, const InducingModule& e,
                                const TWeight& delta, const FundseriesOptions& opts = {});

/// Upper bound for the multiplicity of V(delta) in F^{s-i}(p, E): the
/// length-i part of the sum above, without signs.
std::int64_t multiplicity_bound(const ReductivePair& p, const CompatibleParabolic& par, const InducingModule& e,
                                const TWeight& delta, int i, const FundseriesOptions& opts = {});

struct MultiplicityTable {
  struct Entry {
    TWeight delta;
    std::int64_t value = 0;
    Rational norm2;
  };
  std::vector<Entry> entries;  // nonzero values, by norm2 then coordinates
  Rational cutoff;
  int s = 0;
  int r = 0;
  bool generic = false;

  std::int64_t at(const TWeight& delta) const;
  /// "multiplicity" under genericity, "euler-characteristic" otherwise.
  std::string interpretation() const { return generic ? "multiplicity" : "euler-characteristic"; }
};

/// All dominant integral delta with norm2_shifted(delta) <= cutoff carrying a
/// nonzero Euler multiplicity.
MultiplicityTable ktype_table(const ReductivePair& p, const CompatibleParabolic& par, const InducingModule& e,
                              const Rational& cutoff, const FundseriesOptions& opts = {});

struct InfinitesimalCharacter {
  GWeight representative;  // dominant element of the W_g-orbit
  friend bool operator==(const InfinitesimalCharacter&, const InfinitesimalCharacter&) = default;
};

InfinitesimalCharacter infinitesimal_character(const RootSystem& rs, const GWeight& nu, const GWeight& rho_b);
InfinitesimalCharacter infinitesimal_character(const RootSystem& rs, const InducingModule& e);

struct MinimalKTypeReport {
  bool generic_input = false;
  bool parabolic_matches = false;  // p = p_{mu + 2rho}
  bool minimal_multiplicity_ok = false;
  bool unique_minimum_ok = false;
  bool nonnegative_ok = false;
  std::int64_t multiplicity_at_mu = 0;
  std::vector<std::string> notes;

  bool passed() const { return minimal_multiplicity_ok && unique_minimum_ok && nonnegative_ok; }
};

/// Checks the table against the predictions for generic V(mu): multiplicity
/// dim E at mu, mu the unique norm minimizer, no negative entries.
MinimalKTypeReport verify_minimal_ktype(const MultiplicityTable& table, const InducingModule& e, const ReductivePair& p);

}  // namespace gkmod
