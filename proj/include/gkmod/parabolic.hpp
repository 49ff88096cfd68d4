#pragma once

#include <vector>

#include "gkmod/pair.hpp"

namespace gkmod {

/// p_lambda = m + n for a t-weight lambda, recorded through t-characters.
struct CompatibleParabolic {
  TWeight lambda;
  std::vector<GWeight> n_roots;  // <lambda, alpha|_t> > 0
  std::vector<GWeight> m_roots;  // <lambda, alpha|_t> = 0
  WeightMultiset<TWeight> ch_t_n;
  WeightMultiset<TWeight> ch_t_n_cap_k;
  WeightMultiset<TWeight> ch_t_n_cap_kperp;
  TWeight rho_n;
  TWeight rho_n_perp;
  int s = 0;
  int r = 0;
  bool minimal = false;
};

/// <lambda, sigma> != 0 for every sigma in Delta_t.
bool is_regular(const ReductivePair& p, const TWeight& lambda);

/// Builds p_lambda. n intersected with k is the multiset of k-positive roots
/// pairing positively with lambda; for regular b_k-dominant lambda this is all
/// of n_k. Throws ValidationError when some k-positive root pairs negatively
/// with lambda (lambda not b_k-dominant) or when the k roots do not fit inside
/// ch_t n (inconsistent embedding data).
CompatibleParabolic compatible_parabolic(const ReductivePair& p, const TWeight& lambda);

/// Positive roots of m in the positive system of g, i.e. the roots of m
/// that lie in the Borel b with b in p.
std::vector<GWeight> m_positive_roots(const ReductivePair& p, const CompatibleParabolic& par);

}  // namespace gkmod
