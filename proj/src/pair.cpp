#include "gkmod/pair.hpp"

#include <algorithm>

namespace gkmod {

std::string to_string(EmbeddingKind kind) {
  switch (kind) {
    case EmbeddingKind::sl2_characteristic: return "sl2-characteristic";
    case EmbeddingKind::cartan: return "cartan";
    case EmbeddingKind::levi: return "levi";
    case EmbeddingKind::explicit_data: return "explicit";
  }
  return "unknown";
}

ReductivePair assemble_pair(const RootSystem& g, RMatrix restriction, std::vector<TWeight> k_simple_roots,
                            std::vector<RVector> k_coroots, EmbeddingKind kind, std::vector<int> labels) {
  const std::size_t n = g.rank();
  const std::size_t rt = restriction.rows();
  if (restriction.cols() != n) throw DimensionMismatch("restriction must have rank(g) columns");
  if (rt == 0) throw ValidationError("t must be nonzero");
  if (restriction.rank() != rt) throw ValidationError("restriction map is rank-deficient");
  if (k_simple_roots.size() != k_coroots.size())
    throw DimensionMismatch("need exactly one coroot functional per k simple root");
  for (std::size_t i = 0; i < k_simple_roots.size(); ++i) {
    if (k_simple_roots[i].size() != rt || k_coroots[i].size() != rt)
      throw DimensionMismatch("k root data must have rank(t) coordinates");
  }

  ReductivePair p;
  p.g_ = g;
  p.kind_ = kind;
  p.labels_ = std::move(labels);

  // Orthogonal section: lift = G^-1 R^T (R G^-1 R^T)^-1, whose image is the
  // G-orthogonal complement of ker R; the induced form is (R G^-1 R^T)^-1.
  RMatrix ginv = g.form().inverse();
  RMatrix rt_mat = restriction.transpose();
  RMatrix m = restriction * ginv * rt_mat;
  p.t_form_ = m.inverse();
  p.lift_ = ginv * rt_mat * p.t_form_;
  p.restriction_ = std::move(restriction);

  std::set<TWeight> delta;
  for (const auto& a : g.roots()) {
    TWeight r = p.restrict(a);
    if (!r.is_zero()) delta.insert(std::move(r));
  }
  p.delta_t_.assign(delta.begin(), delta.end());

  // k Cartan matrix from the supplied coroot functionals.
  const std::size_t kr = k_simple_roots.size();
  std::vector<std::vector<int>> kcartan(kr, std::vector<int>(kr));
  for (std::size_t i = 0; i < kr; ++i) {
    for (std::size_t j = 0; j < kr; ++j) {
      Rational a = dot(k_coroots[j], k_simple_roots[i].coords());
      if (!is_integer(a))
        throw ValidationError("non-integral coroot pairing <" + k_simple_roots[i].to_string() + ", coroot " +
                              std::to_string(j + 1) + "> = " + to_string(a));
      if ((i == j && a != 2) || (i != j && a > 0))
        throw ValidationError("k root data is not a Cartan matrix (entry " + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + " = " + to_string(a) + ")");
      kcartan[i][j] = static_cast<int>(to_int64(a));
    }
  }
  for (const auto& coeffs : positive_root_coefficients(kcartan)) {
    TWeight w = TWeight::zero(rt);
    for (std::size_t j = 0; j < kr; ++j) w += k_simple_roots[j] * Rational(coeffs[j]);
    if (!delta.count(w)) throw ValidationError("k-positive root " + w.to_string() + " is not a t-weight of g");
    p.k_positive_roots_.push_back(std::move(w));
  }
  p.k_simple_roots_ = k_simple_roots;
  p.k_weyl_ = ReflectionGroup<TWeight>(std::move(k_simple_roots), std::move(k_coroots));

  p.rho_ = half_sum(p.k_positive_multiset(), rt);
  for (std::size_t i = 0; i < kr; ++i) {
    if (p.coroot_pairing(p.rho_, i) <= 0) throw ValidationError("rho of k is not b_k-dominant regular");
  }

  // Simple reflections of k must be isometries of the induced form.
  for (std::size_t i = 0; i < kr; ++i) {
    const TWeight& a = p.k_simple_roots_[i];
    Rational aa = p.t_pair(a, a);
    for (std::size_t c = 0; c < rt; ++c) {
      TWeight e = TWeight::zero(rt);
      e[c] = 1;
      if (p.coroot_pairing(e, i) != 2 * p.t_pair(e, a) / aa)
        throw ValidationError("coroot functional " + std::to_string(i + 1) +
                              " is inconsistent with the invariant form on t*");
    }
  }
  return p;
}

WeightMultiset<TWeight> ReductivePair::k_positive_multiset() const {
  WeightMultiset<TWeight> m;
  for (const auto& a : k_positive_roots_) m.add(a);
  return m;
}

TWeight ReductivePair::restrict(const GWeight& x) const {
  if (x.size() != g_.rank()) throw DimensionMismatch("restrict: weight length must equal rank(g)");
  return TWeight(restriction_.apply(x.coords()));
}

GWeight ReductivePair::lift(const TWeight& y) const {
  if (y.size() != rank_t()) throw DimensionMismatch("lift: weight length must equal rank(t)");
  return GWeight(lift_.apply(y.coords()));
}

Rational ReductivePair::t_pair(const TWeight& x, const TWeight& y) const {
  if (x.size() != rank_t() || y.size() != rank_t())
    throw DimensionMismatch("t_pair: weight length must equal rank(t)");
  return dot(x.coords(), t_form_.apply(y.coords()));
}

Rational ReductivePair::coroot_pairing(const TWeight& x, std::size_t i) const {
  if (x.size() != rank_t()) throw DimensionMismatch("coroot pairing: weight length must equal rank(t)");
  return k_weyl_.coroot_pairing(x, i);
}

bool ReductivePair::is_dominant_integral(const TWeight& x) const {
  for (std::size_t i = 0; i < k_simple_roots_.size(); ++i) {
    Rational c = coroot_pairing(x, i);
    if (!is_integer(c) || c < 0) return false;
  }
  return true;
}

bool ReductivePair::is_dominant(const TWeight& x) const {
  for (std::size_t i = 0; i < k_simple_roots_.size(); ++i)
    if (coroot_pairing(x, i) < 0) return false;
  return true;
}

std::vector<WeylElement> ReductivePair::k_weyl_group(const WeylLimits& limits) const {
  return k_weyl_.enumerate(rho_, limits);
}

ReductivePair make_sl2_pair(const RootSystem& g, std::span<const int> labels) {
  const std::size_t n = g.rank();
  if (labels.size() != n)
    throw ValidationError("sl2 characteristic needs " + std::to_string(n) + " labels, got " +
                          std::to_string(labels.size()));
  bool nonzero = false;
  for (int l : labels) {
    if (l < 0 || l > 2) throw ValidationError("sl2 characteristic labels must lie in {0,1,2}");
    nonzero = nonzero || l != 0;
  }
  if (!nonzero) throw ValidationError("sl2 characteristic labels must not all vanish");

  // h = sum_j c_j alpha_j^vee with alpha_i(h) = sum_j a_ij c_j. The semisimple
  // element of an sl(2)-triple lies in the coroot lattice.
  RMatrix a(n, n);
  RVector lab(n);
  for (std::size_t i = 0; i < n; ++i) {
    lab[i] = labels[i];
    for (std::size_t j = 0; j < n; ++j) a(i, j) = g.cartan(i, j);
  }
  RVector c = a.inverse().apply(lab);
  for (const auto& ci : c) {
    if (!is_integer(ci))
      throw ValidationError("labels do not define the semisimple element of an sl2-triple "
                            "(h is not in the coroot lattice)");
  }

  RMatrix r(1, n);
  for (std::size_t j = 0; j < n; ++j) r(0, j) = labels[j];
  std::vector<TWeight> simple{TWeight{Rational(2)}};
  std::vector<RVector> coroots{RVector{Rational(1)}};
  return assemble_pair(g, std::move(r), std::move(simple), std::move(coroots), EmbeddingKind::sl2_characteristic,
                       std::vector<int>(labels.begin(), labels.end()));
}

ReductivePair make_cartan_pair(const RootSystem& g) {
  return assemble_pair(g, RMatrix::identity(g.rank()), {}, {}, EmbeddingKind::cartan, {});
}

ReductivePair make_levi_pair(const RootSystem& g, const std::set<int>& simple_subset) {
  std::vector<TWeight> simple;
  std::vector<RVector> coroots;
  for (int idx : simple_subset) {
    if (idx < 1 || idx > static_cast<int>(g.rank()))
      throw ValidationError("Levi simple-root index " + std::to_string(idx) + " out of range 1.." +
                            std::to_string(g.rank()));
    const auto i = static_cast<std::size_t>(idx - 1);
    simple.emplace_back(g.simple_roots()[i].coords());
    coroots.push_back(g.weyl().coroots()[i]);
  }
  return assemble_pair(g, RMatrix::identity(g.rank()), std::move(simple), std::move(coroots), EmbeddingKind::levi,
                       {});
}

ReductivePair make_explicit_pair(const RootSystem& g, const RMatrix& restriction, std::vector<TWeight> k_simple_roots,
                                 std::vector<RVector> k_coroots) {
  return assemble_pair(g, restriction, std::move(k_simple_roots), std::move(k_coroots), EmbeddingKind::explicit_data,
                       {});
}

}  // namespace gkmod
