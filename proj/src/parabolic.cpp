#include "gkmod/parabolic.hpp"

namespace gkmod {

bool is_regular(const ReductivePair& p, const TWeight& lambda) {
  for (const auto& sigma : p.delta_t())
    if (p.t_pair(lambda, sigma) == 0) return false;
  return true;
}

CompatibleParabolic compatible_parabolic(const ReductivePair& p, const TWeight& lambda) {
  if (lambda.size() != p.rank_t()) throw DimensionMismatch("lambda must have rank(t) coordinates");
  CompatibleParabolic par;
  par.lambda = lambda;
  par.minimal = true;
  for (const auto& a : p.g().roots()) {
    TWeight ra = p.restrict(a);
    Rational v = p.t_pair(lambda, ra);
    if (v > 0) {
      par.ch_t_n.add(ra);
      par.n_roots.push_back(a);
    } else if (v == 0) {
      if (!ra.is_zero()) par.minimal = false;
      par.m_roots.push_back(a);
    }
  }

  for (const auto& a : p.k_positive_roots()) {
    Rational v = p.t_pair(lambda, a);
    if (v < 0)
      throw ValidationError("lambda " + lambda.to_string() + " is not b_k-dominant: pairs negatively with k-root " +
                            a.to_string());
    if (v > 0) par.ch_t_n_cap_k.add(a);
  }
  if (!par.ch_t_n.contains(par.ch_t_n_cap_k)) {
    for (const auto& [w, m] : par.ch_t_n_cap_k) {
      if (par.ch_t_n.multiplicity(w) < m)
        throw ValidationError("inconsistent embedding: k-root " + w.to_string() + " exceeds its multiplicity in ch_t n");
    }
  }
  par.ch_t_n_cap_kperp = par.ch_t_n.minus(par.ch_t_n_cap_k);

  const std::size_t rt = p.rank_t();
  par.rho_n = half_sum(par.ch_t_n, rt);
  par.rho_n_perp = half_sum(par.ch_t_n_cap_kperp, rt);
  par.s = par.ch_t_n_cap_k.size();
  par.r = par.ch_t_n_cap_kperp.size();
  return par;
}

std::vector<GWeight> m_positive_roots(const ReductivePair& p, const CompatibleParabolic& par) {
  std::vector<GWeight> out;
  for (const auto& a : par.m_roots)
    if (p.g().is_positive_root(a)) out.push_back(a);
  return out;
}

}  // namespace gkmod
