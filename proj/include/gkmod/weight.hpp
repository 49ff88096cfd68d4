#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gkmod/errors.hpp"
#include "gkmod/rational.hpp"

namespace gkmod {

/// Exact weight with rational coordinates. The tag keeps weights of the
/// Cartan subalgebra h of g (simple-root coordinates) apart from weights of
/// the Cartan subalgebra t of k.
template <class Tag>
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t dim) : coords_(dim) {}
  explicit Weight(RVector coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<Rational> coords) : coords_(coords) {}

  static Weight zero(std::size_t dim) { return Weight(dim); }

  std::size_t size() const { return coords_.size(); }
  const RVector& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (c != 0) return false;
    return true;
  }

  Weight& operator+=(const Weight& o) {
    check(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    check(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  Weight& operator*=(const Rational& c) {
    for (auto& x : coords_) x *= c;
    return *this;
  }

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(Weight a, const Rational& c) { return a *= c; }
  friend Weight operator*(const Rational& c, Weight a) { return a *= c; }
  friend Weight operator-(Weight a) { return a *= Rational(-1); }

  friend bool operator==(const Weight& a, const Weight& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  // Lexicographic; shorter vectors first.
  friend bool operator<(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.coords_[i] < b.coords_[i]) return true;
      if (b.coords_[i] < a.coords_[i]) return false;
    }
    return false;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ", ";
      s += gkmod::to_string(coords_[i]);
    }
    return s + ")";
  }

 private:
  void check(const Weight& o) const {
    if (o.size() != size()) throw DimensionMismatch("weight dimension mismatch");
  }

  RVector coords_;
};

struct GTag {};
struct TTag {};

/// Element of h*, in the simple-root basis of g.
using GWeight = Weight<GTag>;
/// Element of t*, in the coordinates fixed by the reductive pair.
using TWeight = Weight<TTag>;

/// Finite multiset of weights: weight -> strictly positive multiplicity.
template <class W>
class WeightMultiset {
 public:
  using map_type = std::map<W, int>;

  WeightMultiset() = default;
  WeightMultiset(std::initializer_list<std::pair<const W, int>> entries) {
    for (const auto& [w, m] : entries) add(w, m);
  }

  void add(const W& w, int mult = 1) {
    if (mult < 0) throw ValidationError("negative multiplicity");
    if (mult == 0) return;
    entries_[w] += mult;
  }

  int multiplicity(const W& w) const {
    auto it = entries_.find(w);
    return it == entries_.end() ? 0 : it->second;
  }

  int size() const {
    int n = 0;
    for (const auto& [w, m] : entries_) n += m;
    return n;
  }
  bool empty() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }
  const map_type& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool contains(const WeightMultiset& sub) const {
    for (const auto& [w, m] : sub.entries_)
      if (multiplicity(w) < m) return false;
    return true;
  }

  /// Multiset difference; `sub` must be a submultiset.
  WeightMultiset minus(const WeightMultiset& sub) const {
    WeightMultiset out = *this;
    for (const auto& [w, m] : sub.entries_) {
      auto it = out.entries_.find(w);
      if (it == out.entries_.end() || it->second < m)
        throw ValidationError("not a submultiset: weight " + w.to_string());
      it->second -= m;
      if (it->second == 0) out.entries_.erase(it);
    }
    return out;
  }

  W sum(std::size_t dim) const {
    W s = W::zero(dim);
    for (const auto& [w, m] : entries_) s += w * Rational(m);
    return s;
  }

  friend bool operator==(const WeightMultiset& a, const WeightMultiset& b) {
    return a.entries_ == b.entries_;
  }

 private:
  map_type entries_;
};

/// (1/2) * sum of the multiset, the "rho" of a multiset. Zero when empty.
template <class W>
W half_sum(const WeightMultiset<W>& m, std::size_t dim) {
  return m.sum(dim) * Rational(1, 2);
}

}  // namespace gkmod
