#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "gkmod/rational.hpp"
#include "gkmod/rootsys.hpp"
#include "gkmod/weight.hpp"

namespace gkmod {

enum class EmbeddingKind { sl2_characteristic, cartan, levi, explicit_data };

std::string to_string(EmbeddingKind kind);

/// A reductive pair (g, k), described through root data:
///  - restriction h* -> t* and its orthogonal section (lift),
///  - the induced form on t*,
///  - k's simple roots with coroots given as linear functionals on t*,
///  - Delta_t, the nonzero t-weights of g.
///
/// Only real weights are modelled. Immutable after construction; every
/// instance has passed the invariant checks in the make_* functions.
class ReductivePair {
 public:
  const RootSystem& g() const { return g_; }
  std::size_t rank_t() const { return restriction_.rows(); }
  EmbeddingKind embedding_kind() const { return kind_; }
  /// Dynkin labels alpha_i(h); empty unless embedding_kind() is sl2_characteristic.
  const std::vector<int>& labels() const { return labels_; }

  const RMatrix& restriction() const { return restriction_; }
  const RMatrix& lift_matrix() const { return lift_; }
  /// Gram matrix of the induced form on t*.
  const RMatrix& t_form() const { return t_form_; }

  const std::vector<TWeight>& k_simple_roots() const { return k_simple_roots_; }
  const std::vector<RVector>& k_coroots() const { return k_weyl_.coroots(); }
  const std::vector<TWeight>& k_positive_roots() const { return k_positive_roots_; }
  WeightMultiset<TWeight> k_positive_multiset() const;
  const TWeight& rho() const { return rho_; }
  /// Distinct nonzero restrictions of roots of g, sorted.
  const std::vector<TWeight>& delta_t() const { return delta_t_; }

  TWeight restrict(const GWeight& x) const;
  GWeight lift(const TWeight& y) const;
  Rational t_pair(const TWeight& x, const TWeight& y) const;

  /// <x, a_i^vee> for the i-th simple root of k.
  Rational coroot_pairing(const TWeight& x, std::size_t i) const;
  /// All k-coroot pairings are natural numbers (b_k-dominant, k-integral).
  bool is_dominant_integral(const TWeight& x) const;
  bool is_dominant(const TWeight& x) const;

  const ReflectionGroup<TWeight>& k_weyl() const { return k_weyl_; }
  std::vector<WeylElement> k_weyl_group(const WeylLimits& limits = {}) const;

  TWeight zero_t() const { return TWeight::zero(rank_t()); }

  friend ReductivePair assemble_pair(const RootSystem& g, RMatrix restriction, std::vector<TWeight> k_simple_roots,
                                     std::vector<RVector> k_coroots, EmbeddingKind kind, std::vector<int> labels);

 private:
  ReductivePair() = default;

  RootSystem g_;
  EmbeddingKind kind_ = EmbeddingKind::explicit_data;
  std::vector<int> labels_;
  RMatrix restriction_;
  RMatrix lift_;
  RMatrix t_form_;
  std::vector<TWeight> k_simple_roots_;
  std::vector<TWeight> k_positive_roots_;
  ReflectionGroup<TWeight> k_weyl_;
  TWeight rho_;
  std::vector<TWeight> delta_t_;
};

/// Validates root data and builds the pair; used by the make_* functions.
ReductivePair assemble_pair(const RootSystem& g, RMatrix restriction, std::vector<TWeight> k_simple_roots,
                            std::vector<RVector> k_coroots, EmbeddingKind kind, std::vector<int> labels);

/// sl(2) subalgebra with Dynkin characteristic labels alpha_i(h) in
/// {0, 1, 2}. t* is one-dimensional with coordinate x(h); the k root is 2 and
/// rho = 1. Labels whose h is not in the coroot lattice cannot come from an
/// sl(2)-triple and are rejected.
ReductivePair make_sl2_pair(const RootSystem& g, std::span<const int> labels);

/// k = h.
ReductivePair make_cartan_pair(const RootSystem& g);

/// Standard Levi subalgebra on the given simple roots (1-based indices).
ReductivePair make_levi_pair(const RootSystem& g, const std::set<int>& simple_subset);

/// General root data. `restriction` is rank(t) x rank(g); coroots are linear
/// functionals on t* coordinates, one per k simple root.
ReductivePair make_explicit_pair(const RootSystem& g, const RMatrix& restriction,
                                 std::vector<TWeight> k_simple_roots, std::vector<RVector> k_coroots);

}  // namespace gkmod
