#include "gkmod/genericity.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace gkmod {

Rational norm2_shifted(const ReductivePair& p, const TWeight& mu) {
  TWeight x = mu + p.rho() * Rational(2);
  return p.t_pair(x, x);
}

TWeight minimal_ktype(const ReductivePair& p, std::span<const TWeight> candidates) {
  if (candidates.empty()) throw ValidationError("minimal_ktype: empty candidate list");
  const TWeight* best = nullptr;
  Rational best_norm;
  for (const auto& mu : candidates) {
    if (!p.is_dominant_integral(mu))
      throw ValidationError("minimal_ktype: candidate " + mu.to_string() + " is not dominant integral");
    Rational n = norm2_shifted(p, mu);
    if (!best || n < best_norm || (n == best_norm && mu < *best)) {
      best = &mu;
      best_norm = n;
    }
  }
  return *best;
}

namespace {

class SubmultisetSearcher {
 public:
  SubmultisetSearcher(const ReductivePair& p, const TWeight& c, const WeightMultiset<TWeight>& ch,
                      std::optional<int> exact_size)
      : p_(p), c_(c), exact_size_(exact_size) {
    for (const auto& [beta, mult] : ch) items_.push_back({beta * Rational(1, 2), mult, p.t_pair(c, beta)});
    std::stable_sort(items_.begin(), items_.end(),
                     [](const Item& a, const Item& b) { return a.c_pairing > b.c_pairing; });
    const std::size_t n = items_.size();

    // quad_bound_[j] bounds ||Q||^2 for every Q = sum_{i>=j} k_i q_i with
    // 0 <= k_i <= f_i: expand and keep only the positive cross terms.
    quad_bound_.assign(n + 1, Rational(0));
    capacity_.assign(n + 1, 0);
    for (std::size_t j = n; j-- > 0;) {
      Rational add = 0;
      for (std::size_t l = j; l < n; ++l) {
        Rational g = p.t_pair(items_[j].half, items_[l].half);
        if (g > 0) add += (l == j ? 1 : 2) * Rational(items_[j].mult) * Rational(items_[l].mult) * g;
      }
      quad_bound_[j] = quad_bound_[j + 1] + add;
      capacity_[j] = capacity_[j + 1] + items_[j].mult;
    }
    chosen_.assign(n, 0);
  }

  SubmultisetSearch run() {
    SubmultisetSearch out;
    TWeight start = TWeight::zero(c_.size());
    if (descend(0, start, 0)) {
      WeightMultiset<TWeight> s;
      for (std::size_t i = 0; i < items_.size(); ++i) s.add(items_[i].half * Rational(2), chosen_[i]);
      out.witness = std::move(s);
    }
    out.nodes = nodes_;
    return out;
  }

 private:
  struct Item {
    TWeight half;  // beta / 2
    int mult;
    Rational c_pairing;
  };

  // Returns true once a witness has been fixed in chosen_.
  bool descend(std::size_t j, const TWeight& partial, int count) {
    ++nodes_;
    if (exact_size_) {
      if (count > *exact_size_ || count + capacity_[j] < *exact_size_) return false;
    }
    Rational base = p_.t_pair(c_ - partial, partial);
    if (j == items_.size()) {
      if (count == 0) return false;
      if (exact_size_ && count != *exact_size_) return false;
      return base <= 0;
    }
    if (count > 0) {
      TWeight slope = c_ - partial * Rational(2);
      Rational bound = base - quad_bound_[j];
      for (std::size_t i = j; i < items_.size(); ++i) {
        Rational v = p_.t_pair(slope, items_[i].half);
        if (v < 0) bound += Rational(items_[i].mult) * v;
      }
      if (bound > 0) return false;
    }
    for (int k = items_[j].mult; k >= 0; --k) {
      chosen_[j] = k;
      TWeight next = partial + items_[j].half * Rational(k);
      if (descend(j + 1, next, count + k)) return true;
    }
    chosen_[j] = 0;
    return false;
  }

  const ReductivePair& p_;
  TWeight c_;
  std::optional<int> exact_size_;
  std::vector<Item> items_;
  std::vector<Rational> quad_bound_;
  std::vector<int> capacity_;
  std::vector<int> chosen_;
  std::size_t nodes_ = 0;
};

}  // namespace

SubmultisetSearch find_nonpositive_submultiset(const ReductivePair& p, const TWeight& c,
                                               const WeightMultiset<TWeight>& ch, std::optional<int> exact_size) {
  return SubmultisetSearcher(p, c, ch, exact_size).run();
}

GenericityReport is_generic(const ReductivePair& p, const TWeight& mu) {
  if (mu.size() != p.rank_t()) throw DimensionMismatch("mu must have rank(t) coordinates");
  if (!p.is_dominant_integral(mu))
    throw ValidationError("mu = " + mu.to_string() + " is not b_k-dominant and k-integral");
  TWeight c = mu + p.rho() * Rational(2);
  if (!is_regular(p, c))
    throw ValidationError("mu + 2rho = " + c.to_string() + " is not (g,k)-regular");

  GenericityReport rep;
  rep.parabolic = compatible_parabolic(p, c);
  const auto& par = rep.parabolic;

  rep.condition1_ok = true;
  TWeight shifted = c - par.rho_n;
  for (const auto& [alpha, m] : par.ch_t_n_cap_k) {
    if (p.t_pair(shifted, alpha) < 0) {
      rep.condition1_ok = false;
      rep.failing_root = alpha;
      break;
    }
  }

  auto found = find_nonpositive_submultiset(p, c, par.ch_t_n);
  rep.condition2_ok = !found.witness;
  if (found.witness) {
    WeightMultiset<TWeight> best = *found.witness;
    for (int size = 1; size < best.size(); ++size) {
      auto smaller = find_nonpositive_submultiset(p, c, par.ch_t_n, size);
      if (smaller.witness) {
        best = *smaller.witness;
        break;
      }
    }
    TWeight rho_s = half_sum(best, p.rank_t());
    rep.failing_value = p.t_pair(c - rho_s, rho_s);
    rep.failing_rho_s = rho_s;
    rep.failing_subset = std::move(best);
  }
  rep.holds = rep.condition1_ok && rep.condition2_ok;
  return rep;
}

std::int64_t sl2_threshold(const ReductivePair& p) {
  if (p.rank_t() != 1) throw ValidationError("sl2_threshold needs rank(t) = 1");
  if (p.k_simple_roots().size() != 1) throw ValidationError("sl2_threshold needs k of type A1");
  Rational value = p.coroot_pairing(p.restrict(p.g().rho_tilde()), 0);
  if (!is_integer(value)) throw ValidationError("rho~(h) = " + to_string(value) + " is not an integer");
  return to_int64(value);
}

}  // namespace gkmod
