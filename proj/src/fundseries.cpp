#include "gkmod/fundseries.hpp"

#include <algorithm>
#include <set>

namespace gkmod {

namespace {

bool same_nilradical(const CompatibleParabolic& a, const CompatibleParabolic& b) {
  std::set<GWeight> x(a.n_roots.begin(), a.n_roots.end());
  std::set<GWeight> y(b.n_roots.begin(), b.n_roots.end());
  return x == y;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw CapExceeded("multiplicity overflows 64 bits");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw CapExceeded("multiplicity overflows 64 bits");
  return out;
}

// Shared state for repeated multiplicity evaluations against one (p, E).
class SeriesContext {
 public:
  SeriesContext(const ReductivePair& p, const CompatibleParabolic& par, const InducingModule& e,
                const FundseriesOptions& opts)
      : p_(p),
        e_(e),
        weyl_(p.k_weyl_group(opts.weyl)),
        partitions_(par.ch_t_n_cap_kperp, p.t_form().apply(par.lambda.coords())) {
    if (!par.minimal) throw ValidationError("compatible parabolic is not minimal; t does not act on E by a scalar");
    if (par.lambda != e.lambda) throw ValidationError("inducing module belongs to a different parabolic");
  }

  const std::vector<WeylElement>& weyl() const { return weyl_; }

  void check_delta(const TWeight& delta) const {
    if (delta.size() != p_.rank_t()) throw DimensionMismatch("delta must have rank(t) coordinates");
    if (!p_.is_dominant_integral(delta))
      throw ValidationError("delta = " + delta.to_string() + " is not b_k-dominant and k-integral");
  }

  // P(w(delta + rho) - rho - mu), i.e. dim of the xi(w)-weight space of S(n cap k^perp).
  std::int64_t term(const WeylElement& w, const TWeight& delta) {
    TWeight xi = p_.k_weyl().apply(w, delta + p_.rho()) - p_.rho() - e_.mu;
    return partitions_(xi);
  }

  std::int64_t euler(const TWeight& delta) {
    std::int64_t sum = 0;
    for (const auto& w : weyl_) {
      std::int64_t t = term(w, delta);
      sum = checked_add(sum, w.length % 2 == 0 ? t : -t);
    }
    return checked_mul(sum, e_.dim_e);
  }

 private:
  const ReductivePair& p_;
  const InducingModule& e_;
  std::vector<WeylElement> weyl_;
  PartitionFunction partitions_;
};

}  // namespace

InducingModule make_inducing_module(const ReductivePair& p, const CompatibleParabolic& par, const GWeight& nu) {
  if (nu.size() != p.g().rank()) throw DimensionMismatch("nu must have rank(g) coordinates");
  if (!par.minimal) throw ValidationError("compatible parabolic is not minimal");
  auto m_pos = m_positive_roots(p, par);
  InducingModule e;
  e.nu = nu;
  e.dim_e = weyl_dim(p.g(), std::span<const GWeight>(m_pos), nu);
  e.omega = p.restrict(nu);
  e.mu = e.omega + par.rho_n_perp * Rational(2);
  e.lambda = par.lambda;
  GWeight sum = GWeight::zero(p.g().rank());
  for (const auto& a : par.n_roots) sum += a;
  for (const auto& a : m_pos) sum += a;
  e.rho_b = sum * Rational(1, 2);
  return e;
}

CompatibleParabolic fundamental_parabolic(const ReductivePair& p, const GWeight& nu) {
  const TWeight omega = p.restrict(nu);
  const TWeight two_rho = p.rho() * Rational(2);
  for (TWeight lambda : {p.restrict(p.g().rho_tilde()), omega + two_rho}) {
    for (int iter = 0; iter < 32; ++iter) {
      if (!is_regular(p, lambda)) break;
      CompatibleParabolic par;
      try {
        par = compatible_parabolic(p, lambda);
      } catch (const ValidationError&) {
        break;
      }
      TWeight next = omega + par.rho_n_perp * Rational(2) + two_rho;
      if (!is_regular(p, next)) break;
      try {
        CompatibleParabolic again = compatible_parabolic(p, next);
        if (same_nilradical(par, again)) return again;
      } catch (const ValidationError&) {
        break;
      }
      lambda = next;
    }
  }
  throw ValidationError("no minimal compatible parabolic p with p = p_{mu+2rho} found for nu = " + nu.to_string() +
                        "; specify lambda explicitly");
}

std::vector<KostantTerm> kostant_weights(const ReductivePair& p, const TWeight& delta, const WeylLimits& limits) {
  if (delta.size() != p.rank_t()) throw DimensionMismatch("delta must have rank(t) coordinates");
  if (!p.is_dominant_integral(delta))
    throw ValidationError("delta = " + delta.to_string() + " is not b_k-dominant and k-integral");
  std::vector<KostantTerm> out;
  for (const auto& w : p.k_weyl_group(limits))
    out.push_back({w.length, p.k_weyl().apply(w, delta + p.rho()) - p.rho()});
  return out;
}

PartitionFunction::PartitionFunction(const WeightMultiset<TWeight>& generators, RVector grading_functional)
    : grading_(std::move(grading_functional)) {
  for (const auto& [beta, mult] : generators) {
    if (beta.size() != grading_.size()) throw DimensionMismatch("generator/grading length mismatch");
    if (grade(beta) <= 0)
      throw ValidationError("generator " + beta.to_string() + " does not pair positively with the grading");
    for (int i = 0; i < mult; ++i) generators_.push_back(beta);
  }
}

std::int64_t PartitionFunction::operator()(const TWeight& target) {
  if (target.size() != grading_.size()) throw DimensionMismatch("target has wrong length");
  return count(0, target);
}

std::int64_t PartitionFunction::count(std::size_t j, const TWeight& target) {
  Rational g = grade(target);
  if (g < 0) return 0;
  if (g == 0 || j == generators_.size()) return target.is_zero() ? 1 : 0;
  auto key = std::make_pair(j, target);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  std::int64_t total = 0;
  TWeight rest = target;
  while (grade(rest) >= 0) {
    total = checked_add(total, count(j + 1, rest));
    rest -= generators_[j];
  }
  memo_.emplace(std::move(key), total);
  return total;
}

std::int64_t partition_count(const ReductivePair& p, const WeightMultiset<TWeight>& generators,
                             const TWeight& target, const TWeight& grading) {
  if (grading.size() != p.rank_t()) throw DimensionMismatch("grading must have rank(t) coordinates");
  PartitionFunction pf(generators, p.t_form().apply(grading.coords()));
  return pf(target);
}

std::int64_t euler_multiplicity(const ReductivePair& p, const CompatibleParabolic& par, const InducingModule& e,
                                const TWeight& delta, const FundseriesOptions& opts) {
  SeriesContext ctx(p, par, e, opts);
  ctx.check_delta(delta);
  return ctx.euler(delta);
}

std::int64_t multiplicity_bound(const ReductivePair& p, const CompatibleParabolic& par, const InducingModule& e,
                                const TWeight& delta, int i, const FundseriesOptions& opts) {
  SeriesContext ctx(p, par, e, opts);
  ctx.check_delta(delta);
  std::int64_t sum = 0;
  for (const auto& w : ctx.weyl())
    if (w.length == i) sum = checked_add(sum, ctx.term(w, delta));
  return checked_mul(sum, e.dim_e);
}

std::int64_t MultiplicityTable::at(const TWeight& delta) const {
  for (const auto& entry : entries)
    if (entry.delta == delta) return entry.value;
  return 0;
}

MultiplicityTable ktype_table(const ReductivePair& p, const CompatibleParabolic& par, const InducingModule& e,
                              const Rational& cutoff, const FundseriesOptions& opts) {
  SeriesContext ctx(p, par, e, opts);
  const Rational mu_norm = norm2_shifted(p, e.mu);
  if (cutoff < mu_norm)
    throw ValidationError("cutoff " + to_string(cutoff) + " is below norm2_shifted(mu) = " + to_string(mu_norm));

  // A nonzero entry at delta needs some w with
  //   xi = w(delta + rho) - rho - mu  in  N-span(ch_t(n cap k^perp)).
  // Since ||delta + rho|| <= ||delta + 2rho|| + ||rho|| and W_k preserves the
  // form, <lambda, xi> <= ||lambda|| (sqrt(cutoff) + 2||rho|| + ||mu||).
  const TWeight& lambda = par.lambda;
  const Rational xi_radius = sqrt_upper_bound(cutoff) + 2 * sqrt_upper_bound(p.t_pair(p.rho(), p.rho())) +
                             sqrt_upper_bound(p.t_pair(e.mu, e.mu));
  const Rational max_grade = sqrt_upper_bound(p.t_pair(lambda, lambda)) * xi_radius;

  std::vector<std::pair<TWeight, Rational>> gens;
  for (const auto& [beta, mult] : par.ch_t_n_cap_kperp) gens.emplace_back(beta, p.t_pair(lambda, beta));

  std::vector<TWeight> xis;
  auto enumerate = [&](auto&& self, std::size_t j, const TWeight& xi, const Rational& grade) -> void {
    if (j == gens.size()) {
      if (xis.size() >= opts.max_candidates)
        throw CapExceeded("k-type enumeration exceeds " + std::to_string(opts.max_candidates) + " candidates");
      xis.push_back(xi);
      return;
    }
    TWeight cur = xi;
    Rational g = grade;
    while (g <= max_grade) {
      self(self, j + 1, cur, g);
      cur += gens[j].first;
      g += gens[j].second;
    }
  };
  enumerate(enumerate, 0, p.zero_t(), Rational(0));

  std::set<TWeight> candidates;
  const TWeight shift = e.mu + p.rho();
  for (const auto& xi : xis) {
    for (const auto& w : ctx.weyl()) {
      TWeight delta = p.k_weyl().apply_inverse(w, shift + xi) - p.rho();
      if (!p.is_dominant_integral(delta)) continue;
      if (norm2_shifted(p, delta) > cutoff) continue;
      candidates.insert(std::move(delta));
    }
  }

  MultiplicityTable table;
  table.cutoff = cutoff;
  table.s = par.s;
  table.r = par.r;
  try {
    table.generic = is_generic(p, e.mu).holds;
  } catch (const ValidationError&) {
    table.generic = false;
  }
  for (const auto& delta : candidates) {
    std::int64_t v = ctx.euler(delta);
    if (v != 0) table.entries.push_back({delta, v, norm2_shifted(p, delta)});
  }
  std::sort(table.entries.begin(), table.entries.end(), [](const auto& a, const auto& b) {
    if (a.norm2 != b.norm2) return a.norm2 < b.norm2;
    return a.delta < b.delta;
  });
  return table;
}

InfinitesimalCharacter infinitesimal_character(const RootSystem& rs, const GWeight& nu, const GWeight& rho_b) {
  return {rs.weyl().dominant_representative(nu + rho_b)};
}

InfinitesimalCharacter infinitesimal_character(const RootSystem& rs, const InducingModule& e) {
  return infinitesimal_character(rs, e.nu, e.rho_b);
}

MinimalKTypeReport verify_minimal_ktype(const MultiplicityTable& table, const InducingModule& e, const ReductivePair& p) {
  MinimalKTypeReport rep;
  try {
    rep.generic_input = is_generic(p, e.mu).holds;
    auto par = compatible_parabolic(p, e.mu + p.rho() * Rational(2));
    auto own = compatible_parabolic(p, e.lambda);
    rep.parabolic_matches = same_nilradical(par, own);
  } catch (const ValidationError& err) {
    rep.notes.emplace_back(err.what());
  }
  if (!rep.generic_input) rep.notes.emplace_back("V(mu) is not generic; predictions are not guaranteed");
  if (!rep.parabolic_matches) rep.notes.emplace_back("parabolic differs from p_{mu+2rho}");

  const Rational mu_norm = norm2_shifted(p, e.mu);
  if (table.cutoff <= mu_norm) rep.notes.emplace_back("cutoff does not exceed norm2_shifted(mu)");

  rep.multiplicity_at_mu = table.at(e.mu);
  rep.minimal_multiplicity_ok = rep.multiplicity_at_mu == e.dim_e;
  if (!rep.minimal_multiplicity_ok)
    rep.notes.push_back("multiplicity at mu is " + std::to_string(rep.multiplicity_at_mu) + ", expected dim E = " +
                        std::to_string(e.dim_e));

  rep.unique_minimum_ok = true;
  rep.nonnegative_ok = true;
  for (const auto& entry : table.entries) {
    if (entry.delta != e.mu && entry.norm2 <= mu_norm) {
      rep.unique_minimum_ok = false;
      rep.notes.push_back("k-type " + entry.delta.to_string() + " is not above mu in norm");
    }
    if (entry.value < 0) {
      rep.nonnegative_ok = false;
      rep.notes.push_back("negative Euler multiplicity at " + entry.delta.to_string());
    }
  }
  return rep;
}

}  // namespace gkmod
