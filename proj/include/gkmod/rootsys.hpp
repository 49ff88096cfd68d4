#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gkmod/errors.hpp"
#include "gkmod/rational.hpp"
#include "gkmod/weight.hpp"

namespace gkmod {

struct SimpleComponent {
  char family;  // 'A'..'G'
  int rank;
  friend bool operator==(const SimpleComponent&, const SimpleComponent&) = default;
};

/// Cartan type of a semisimple Lie algebra, e.g. "B2" or "A1xA1".
class LieType {
 public:
  LieType() = default;
  explicit LieType(std::vector<SimpleComponent> components);

  static LieType parse(std::string_view text);

  const std::vector<SimpleComponent>& components() const { return components_; }
  int rank() const;
  std::string to_string() const;

  friend bool operator==(const LieType&, const LieType&) = default;

 private:
  std::vector<SimpleComponent> components_;
};

/// Element of a Weyl group, stored as a reduced word w = s_{i1} s_{i2} ... s_{ik}
/// (rightmost reflection acts first).
struct WeylElement {
  std::vector<int> word;
  int length = 0;
};

struct WeylLimits {
  int max_rank = 6;
  std::size_t max_order = 100000;
};

/// Reflection group generated by simple reflections
///   s_i(x) = x - <x, a_i^vee> a_i,
/// where the coroot a_i^vee is given as a linear functional on coordinates.
/// Serves both W_g (on h*) and W_k (on t*).
template <class W>
class ReflectionGroup {
 public:
  ReflectionGroup() = default;
  ReflectionGroup(std::vector<W> simple_roots, std::vector<RVector> coroots)
      : simple_roots_(std::move(simple_roots)), coroots_(std::move(coroots)) {
    if (simple_roots_.size() != coroots_.size())
      throw DimensionMismatch("reflection group: roots/coroots count mismatch");
  }

  std::size_t rank() const { return simple_roots_.size(); }
  const std::vector<W>& simple_roots() const { return simple_roots_; }
  const std::vector<RVector>& coroots() const { return coroots_; }

  Rational coroot_pairing(const W& x, std::size_t i) const { return dot(coroots_[i], x.coords()); }

  W reflect(const W& x, std::size_t i) const {
    return x - simple_roots_[i] * coroot_pairing(x, i);
  }

  W apply(const WeylElement& w, W x) const {
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) x = reflect(x, static_cast<std::size_t>(*it));
    return x;
  }

  W apply_inverse(const WeylElement& w, W x) const {
    for (int i : w.word) x = reflect(x, static_cast<std::size_t>(i));
    return x;
  }

  /// Moves x into the closed dominant chamber by repeated simple reflections.
  W dominant_representative(W x) const {
    for (bool moved = true; moved;) {
      moved = false;
      for (std::size_t i = 0; i < rank(); ++i) {
        if (coroot_pairing(x, i) < 0) {
          x = reflect(x, i);
          moved = true;
        }
      }
    }
    return x;
  }

  /// Full enumeration by breadth-first search over the orbit of a regular
  /// dominant vector; BFS depth is the length, BFS path a reduced word.
  std::vector<WeylElement> enumerate(const W& regular_dominant, const WeylLimits& limits) const {
    if (static_cast<int>(rank()) > limits.max_rank)
      throw CapExceeded("Weyl group rank " + std::to_string(rank()) + " exceeds cap " +
                        std::to_string(limits.max_rank));
    for (std::size_t i = 0; i < rank(); ++i)
      if (coroot_pairing(regular_dominant, i) <= 0)
        throw ValidationError("Weyl enumeration needs a regular dominant base point");
    std::vector<WeylElement> out;
    std::map<W, std::size_t> seen;
    std::deque<std::pair<W, std::size_t>> queue;
    out.push_back(WeylElement{});
    seen.emplace(regular_dominant, 0);
    queue.emplace_back(regular_dominant, 0);
    while (!queue.empty()) {
      auto [point, idx] = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < rank(); ++i) {
        // Only ascend: s_i w is longer than w iff <w(x), a_i^vee> > 0.
        if (coroot_pairing(point, i) <= 0) continue;
        W next = reflect(point, i);
        if (seen.count(next)) continue;
        if (out.size() >= limits.max_order)
          throw CapExceeded("Weyl group order exceeds cap " + std::to_string(limits.max_order));
        WeylElement e;
        e.word.reserve(out[idx].word.size() + 1);
        e.word.push_back(static_cast<int>(i));
        e.word.insert(e.word.end(), out[idx].word.begin(), out[idx].word.end());
        e.length = out[idx].length + 1;
        seen.emplace(next, out.size());
        out.push_back(std::move(e));
        queue.emplace_back(std::move(next), out.size() - 1);
      }
    }
    return out;
  }

 private:
  std::vector<W> simple_roots_;
  std::vector<RVector> coroots_;
};

/// Root system of a semisimple g with the invariant form normalized so that
/// long roots of every simple component have squared length 2.
class RootSystem {
 public:
  const LieType& lie_type() const { return type_; }
  std::size_t rank() const { return simple_roots_.size(); }

  /// Gram matrix of the simple roots.
  const RMatrix& form() const { return gram_; }
  /// a_ij = <alpha_i, alpha_j^vee>.
  int cartan(std::size_t i, std::size_t j) const { return cartan_[i][j]; }

  const std::vector<GWeight>& simple_roots() const { return simple_roots_; }
  const std::vector<GWeight>& positive_roots() const { return positive_roots_; }
  /// Positive roots followed by their negatives, in the same order.
  std::vector<GWeight> roots() const;
  const GWeight& rho_tilde() const { return rho_; }

  Rational pair(const GWeight& x, const GWeight& y) const;
  Rational coroot_pairing(const GWeight& x, std::size_t i) const;
  bool is_positive_root(const GWeight& x) const;

  /// Fundamental-weight coordinates (x(alpha_i^vee)) and back.
  RVector to_fundamental(const GWeight& x) const;
  GWeight from_fundamental(const RVector& coords) const;
  GWeight fundamental_weight(std::size_t i) const;

  const ReflectionGroup<GWeight>& weyl() const { return weyl_; }

  friend RootSystem build_root_system(const LieType& type);

 private:
  LieType type_;
  RMatrix gram_;
  std::vector<std::vector<int>> cartan_;
  std::vector<GWeight> simple_roots_;
  std::vector<GWeight> positive_roots_;
  GWeight rho_;
  ReflectionGroup<GWeight> weyl_;
};

/// Positive roots, as coefficient vectors over the simple roots, of the root
/// system with Cartan matrix `cartan` (entry (i, j) = <a_i, a_j^vee>).
/// Generated by root-string closure; throws ValidationError if more than
/// `max_roots` roots appear (the matrix is not of finite type).
std::vector<std::vector<int>> positive_root_coefficients(const std::vector<std::vector<int>>& cartan,
                                                         std::size_t max_roots = 10000);

/// Builds Cartan data for the type and generates positive roots by
/// root-string closure from the Cartan matrix.
RootSystem build_root_system(const LieType& type);

Rational pair(const RootSystem& rs, const GWeight& x, const GWeight& y);

std::vector<WeylElement> weyl_group(const RootSystem& rs, const WeylLimits& limits = {});

/// Number of positive roots sent to negative roots by w.
int inversion_count(const RootSystem& rs, const WeylElement& w);

/// Weyl dimension formula for the subsystem with the given positive roots
/// (which must form a positive system of a closed subsystem of rs).
/// `highest` must be dominant integral for that subsystem.
std::int64_t weyl_dim(const RootSystem& rs, std::span<const GWeight> positive_roots,
                      const GWeight& highest);
std::int64_t weyl_dim(const RootSystem& rs, const GWeight& highest);

}  // namespace gkmod
