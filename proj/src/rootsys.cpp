#include "gkmod/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>

namespace gkmod {

namespace {

bool valid_component(char family, int rank) {
  switch (family) {
    case 'A': return rank >= 1;
    case 'B':
    case 'C': return rank >= 2;
    case 'D': return rank >= 3;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

// Bourbaki numbering; entry (i, j) is <alpha_i, alpha_j^vee>.
std::vector<std::vector<int>> cartan_matrix(const SimpleComponent& c) {
  const int n = c.rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto bond = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (c.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n short
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n long
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 3, n - 1);
      break;
    case 'E':
      bond(0, 2);
      bond(1, 3);
      for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case 'F':
      bond(0, 1);
      bond(1, 2);
      bond(2, 3);
      a[1][2] = -2;
      break;
    case 'G':
      a[0][1] = -1;
      a[1][0] = -3;  // alpha_1 short
      break;
  }
  return a;
}

int height(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

}  // namespace

std::vector<std::vector<int>> positive_root_coefficients(const std::vector<std::vector<int>>& cartan,
                                                         std::size_t max_roots) {
  const std::size_t n = cartan.size();
  // beta + alpha_i is a root iff q > 0 where q = p - <beta, alpha_i^vee> and
  // p is the length of the downward alpha_i-string through beta.
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> layer;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    roots.insert(e);
    layer.push_back(e);
  }
  while (!layer.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : layer) {
      for (std::size_t i = 0; i < n; ++i) {
        int pairing = 0;
        for (std::size_t j = 0; j < n; ++j) pairing += beta[j] * cartan[j][i];
        int p = 0;
        std::vector<int> down = beta;
        while (true) {
          --down[i];
          if (!roots.count(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          std::vector<int> up = beta;
          ++up[i];
          if (roots.insert(up).second) next.push_back(up);
          if (roots.size() > max_roots) throw ValidationError("Cartan matrix is not of finite type");
        }
      }
    }
    layer = std::move(next);
  }
  std::vector<std::vector<int>> sorted(roots.begin(), roots.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    int hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x > y;
  });
  return sorted;
}

LieType::LieType(std::vector<SimpleComponent> components) : components_(std::move(components)) {
  if (components_.empty()) throw ValidationError("Lie type needs at least one simple component");
  for (const auto& c : components_) {
    if (!valid_component(c.family, c.rank))
      throw ValidationError(std::string("invalid simple component ") + c.family + std::to_string(c.rank));
  }
}

LieType LieType::parse(std::string_view text) {
  std::vector<SimpleComponent> comps;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find_first_of("xX", pos);
    std::string_view part = text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    if (part.size() < 2) throw ParseError("malformed Lie type '" + std::string(text) + "'");
    char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(part[0])));
    int rank = 0;
    auto [ptr, ec] = std::from_chars(part.data() + 1, part.data() + part.size(), rank);
    if (ec != std::errc{} || ptr != part.data() + part.size())
      throw ParseError("malformed Lie type '" + std::string(text) + "'");
    comps.push_back({fam, rank});
    if (next == std::string_view::npos) break;
    pos = next + 1;
    if (pos == text.size()) throw ParseError("malformed Lie type '" + std::string(text) + "'");
  }
  return LieType(std::move(comps));
}

int LieType::rank() const {
  int r = 0;
  for (const auto& c : components_) r += c.rank;
  return r;
}

std::string LieType::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) s += "x";
    s += components_[i].family + std::to_string(components_[i].rank);
  }
  return s;
}

RootSystem build_root_system(const LieType& type) {
  RootSystem rs;
  rs.type_ = type;
  const auto n = static_cast<std::size_t>(type.rank());

  rs.cartan_.assign(n, std::vector<int>(n, 0));
  std::vector<Rational> sq_len(n);
  std::size_t offset = 0;
  for (const auto& comp : type.components()) {
    auto a = cartan_matrix(comp);
    const auto r = static_cast<std::size_t>(comp.rank);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) rs.cartan_[offset + i][offset + j] = a[i][j];

    // Symmetrize: a_ij <a_j,a_j> = a_ji <a_i,a_i>, propagated along the
    // (connected) Dynkin diagram, then rescaled so long roots have length 2.
    std::vector<Rational> len(r);
    std::vector<bool> done(r, false);
    len[0] = 1;
    done[0] = true;
    for (bool progress = true; progress;) {
      progress = false;
      for (std::size_t i = 0; i < r; ++i) {
        if (!done[i]) continue;
        for (std::size_t j = 0; j < r; ++j) {
          if (done[j] || a[i][j] == 0) continue;
          len[j] = Rational(a[j][i]) * len[i] / Rational(a[i][j]);
          done[j] = true;
          progress = true;
        }
      }
    }
    Rational longest = *std::max_element(len.begin(), len.end());
    for (std::size_t i = 0; i < r; ++i) sq_len[offset + i] = len[i] * 2 / longest;
    offset += r;
  }

  rs.gram_ = RMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rs.gram_(i, j) = Rational(rs.cartan_[i][j]) * sq_len[j] / 2;

  auto sorted = positive_root_coefficients(rs.cartan_);

  GWeight two_rho = GWeight::zero(n);
  for (const auto& v : sorted) {
    GWeight w(n);
    for (std::size_t j = 0; j < n; ++j) w[j] = v[j];
    two_rho += w;
    rs.positive_roots_.push_back(std::move(w));
  }
  for (std::size_t i = 0; i < n; ++i) {
    GWeight e(n);
    e[i] = 1;
    rs.simple_roots_.push_back(std::move(e));
  }
  rs.rho_ = two_rho * Rational(1, 2);

  std::vector<RVector> coroots;
  for (std::size_t i = 0; i < n; ++i) {
    RVector f(n);
    for (std::size_t j = 0; j < n; ++j) f[j] = 2 * rs.gram_(j, i) / rs.gram_(i, i);
    coroots.push_back(std::move(f));
  }
  rs.weyl_ = ReflectionGroup<GWeight>(rs.simple_roots_, std::move(coroots));
  return rs;
}

std::vector<GWeight> RootSystem::roots() const {
  std::vector<GWeight> out = positive_roots_;
  for (const auto& r : positive_roots_) out.push_back(-r);
  return out;
}

Rational RootSystem::pair(const GWeight& x, const GWeight& y) const {
  if (x.size() != rank() || y.size() != rank()) throw DimensionMismatch("pair: weight length must equal rank(g)");
  return dot(x.coords(), gram_.apply(y.coords()));
}

Rational RootSystem::coroot_pairing(const GWeight& x, std::size_t i) const {
  if (x.size() != rank()) throw DimensionMismatch("coroot pairing: weight length must equal rank(g)");
  return weyl_.coroot_pairing(x, i);
}

bool RootSystem::is_positive_root(const GWeight& x) const {
  return std::find(positive_roots_.begin(), positive_roots_.end(), x) != positive_roots_.end();
}

RVector RootSystem::to_fundamental(const GWeight& x) const {
  RVector out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = coroot_pairing(x, i);
  return out;
}

GWeight RootSystem::from_fundamental(const RVector& coords) const {
  if (coords.size() != rank()) throw DimensionMismatch("fundamental coordinates: length must equal rank(g)");
  // x(alpha_i^vee) = sum_j x_j a_ji, so x = A^{-T} coords.
  RMatrix a(rank(), rank());
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) a(i, j) = cartan_[j][i];
  return GWeight(a.inverse().apply(coords));
}

GWeight RootSystem::fundamental_weight(std::size_t i) const {
  RVector e(rank());
  e.at(i) = 1;
  return from_fundamental(e);
}

Rational pair(const RootSystem& rs, const GWeight& x, const GWeight& y) { return rs.pair(x, y); }

std::vector<WeylElement> weyl_group(const RootSystem& rs, const WeylLimits& limits) {
  return rs.weyl().enumerate(rs.rho_tilde(), limits);
}

int inversion_count(const RootSystem& rs, const WeylElement& w) {
  int count = 0;
  for (const auto& a : rs.positive_roots()) {
    GWeight img = rs.weyl().apply(w, a);
    if (!rs.is_positive_root(img)) ++count;
  }
  return count;
}

std::int64_t weyl_dim(const RootSystem& rs, std::span<const GWeight> positive_roots, const GWeight& highest) {
  if (highest.size() != rs.rank()) throw DimensionMismatch("weyl_dim: weight length must equal rank(g)");
  GWeight rho = GWeight::zero(rs.rank());
  for (const auto& a : positive_roots) rho += a;
  rho *= Rational(1, 2);
  Rational dim = 1;
  for (const auto& a : positive_roots) {
    Rational len = rs.pair(a, a);
    Rational c = 2 * rs.pair(highest, a) / len;
    if (!is_integer(c) || c < 0)
      throw ValidationError("weyl_dim: highest weight " + highest.to_string() +
                            " is not dominant integral (coroot pairing " + to_string(c) + ")");
    dim *= rs.pair(highest + rho, a) / rs.pair(rho, a);
  }
  return to_int64(dim);
}

std::int64_t weyl_dim(const RootSystem& rs, const GWeight& highest) {
  return weyl_dim(rs, std::span<const GWeight>(rs.positive_roots()), highest);
}

}  // namespace gkmod
