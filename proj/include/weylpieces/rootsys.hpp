#ifndef WEYLPIECES_ROOTSYS_HPP
#define WEYLPIECES_ROOTSYS_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "index_set.hpp"

namespace weylpieces
{

/// Integer coordinates in the simple-root basis.
using Root = std::vector<int>;
using RootIndex = std::uint16_t;
/// Row-major integer matrix, `m[row][col]`.
using IntMatrix = std::vector<std::vector<int>>;

inline constexpr std::uint64_t default_guard = 1'000'000;

struct CartanFactor
{
  char family;
  int rank;

  bool operator==(CartanFactor const &) const = default;

  std::string to_string() const
  { return std::string(1, family) + std::to_string(rank); }
};

inline void validate_factor(CartanFactor const &f)
{
  bool ok = false;
  switch (f.family) {
  case 'A': ok = f.rank >= 1; break;
  case 'B': ok = f.rank >= 2; break;
  case 'C': ok = f.rank >= 2; break;
  case 'D': ok = f.rank >= 2; break;
  case 'E': ok = f.rank >= 6 && f.rank <= 8; break;
  case 'F': ok = f.rank == 4; break;
  case 'G': ok = f.rank == 2; break;
  default:
    throw SpecError(std::string("unknown Cartan family '") + f.family + "'");
  }
  if (!ok)
    throw SpecError("invalid rank for Cartan type " + f.to_string());
}

/// List of irreducible factors, e.g. parsed from "A2", "A3xA3" or "B2 x G2".
struct CartanSpec
{
  std::vector<CartanFactor> factors;

  static CartanSpec parse(std::string_view text)
  {
    CartanSpec spec;
    std::size_t pos = 0;
    auto skip_space = [&] {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
    };

    skip_space();
    if (pos == text.size())
      throw SpecError("empty Cartan type");

    while (true) {
      skip_space();
      if (pos == text.size())
        throw SpecError("trailing separator in Cartan type '" + std::string(text) + "'");

      char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos++])));
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      if (start == pos || pos - start > 3)
        throw SpecError("missing or malformed rank in Cartan type '" + std::string(text) + "'");

      CartanFactor f{fam, std::stoi(std::string(text.substr(start, pos - start)))};
      validate_factor(f);
      spec.factors.push_back(f);

      skip_space();
      if (pos == text.size())
        break;
      if (text[pos] != 'x' && text[pos] != 'X' && text[pos] != '*')
        throw SpecError("unexpected character in Cartan type '" + std::string(text) + "'");
      ++pos;
    }
    return spec;
  }

  int rank() const
  {
    int r = 0;
    for (auto const &f : factors)
      r += f.rank;
    return r;
  }

  std::string to_string() const
  {
    std::string s;
    for (auto const &f : factors) {
      if (!s.empty())
        s += "x";
      s += f.to_string();
    }
    return s;
  }
};

/// Cartan matrix of one irreducible factor in Bourbaki labeling, with the
/// convention `c[i][j] = <alpha_j, alpha_i^vee>`.
inline IntMatrix cartan_matrix(CartanFactor const &f)
{
  validate_factor(f);
  int const n = f.rank;
  IntMatrix c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    c[i][i] = 2;

  auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  // `s` short, `l` long, multiplicity m
  auto multi = [&](int s, int l, int m) { c[s][l] = -m; c[l][s] = -1; };

  switch (f.family) {
  case 'A':
    for (int i = 0; i + 1 < n; ++i)
      link(i, i + 1);
    break;
  case 'B':
    for (int i = 0; i + 2 < n; ++i)
      link(i, i + 1);
    multi(n - 1, n - 2, 2);
    break;
  case 'C':
    for (int i = 0; i + 2 < n; ++i)
      link(i, i + 1);
    multi(n - 2, n - 1, 2);
    break;
  case 'D':
    if (n >= 3) {
      for (int i = 0; i + 3 < n; ++i)
        link(i, i + 1);
      link(n - 3, n - 2);
      link(n - 3, n - 1);
    }
    break;
  case 'E':
    link(0, 2);
    link(1, 3);
    for (int i = 2; i + 1 < n; ++i)
      link(i, i + 1);
    break;
  case 'F':
    link(0, 1);
    multi(2, 1, 2);
    link(2, 3);
    break;
  case 'G':
    multi(0, 1, 3);
    break;
  }
  return c;
}

/// Order of the Weyl group of one factor; saturates at the maximum of uint64.
inline std::uint64_t weyl_order(CartanFactor const &f)
{
  constexpr auto sat = std::numeric_limits<std::uint64_t>::max();
  auto mul = [](std::uint64_t a, std::uint64_t b) {
    return (b != 0 && a > sat / b) ? sat : a * b;
  };
  auto fact = [&](int n) {
    std::uint64_t r = 1;
    for (int k = 2; k <= n; ++k)
      r = mul(r, k);
    return r;
  };
  auto pow2 = [&](int n) {
    std::uint64_t r = 1;
    for (int k = 0; k < n; ++k)
      r = mul(r, 2);
    return r;
  };

  switch (f.family) {
  case 'A': return fact(f.rank + 1);
  case 'B':
  case 'C': return mul(pow2(f.rank), fact(f.rank));
  case 'D': return mul(pow2(f.rank - 1), fact(f.rank));
  case 'E': return f.rank == 6 ? 51840 : f.rank == 7 ? 2903040 : 696729600;
  case 'F': return 1152;
  case 'G': return 12;
  }
  throw SpecError("unknown Cartan family");
}

class RootSystem;
using RootSystemPtr = std::shared_ptr<RootSystem const>;

/// Finite crystallographic root system in the simple-root basis.
///
/// Roots are indexed so that positive roots come first (simple roots at
/// indices 0..rank-1, then by height) and root `p + N` is `-root(p)` where
/// `N` is the number of positive roots.
class RootSystem
{
public:
  /// Builds from a Cartan matrix, generating Phi by reflection closure.
  /// `factors` is the irreducible decomposition; `bourbaki` marks that
  /// factors occupy consecutive index blocks in Bourbaki labeling.
  static RootSystemPtr create(IntMatrix cartan, std::vector<CartanFactor> factors, bool bourbaki)
  {
    return RootSystemPtr(new RootSystem(std::move(cartan), std::move(factors), bourbaki));
  }

  int rank() const { return _rank; }
  IntMatrix const &cartan() const { return _cartan; }
  std::vector<CartanFactor> const &factors() const { return _factors; }
  bool bourbaki_layout() const { return _bourbaki; }

  std::size_t num_positive() const { return _npos; }
  std::size_t num_roots() const { return 2 * _npos; }

  Root const &root(RootIndex r) const { return _roots[r]; }

  std::optional<RootIndex> find(Root const &coords) const
  {
    auto it = _index.find(coords);
    if (it == _index.end())
      return std::nullopt;
    return it->second;
  }

  bool is_positive(RootIndex r) const { return r < _npos; }
  RootIndex negate(RootIndex r) const
  { return static_cast<RootIndex>(r < _npos ? r + _npos : r - _npos); }

  /// Root index of alpha_i (0-based i).
  RootIndex simple(int i) const { return static_cast<RootIndex>(i); }
  /// 0-based simple index if `r` is a simple root, otherwise -1.
  int simple_position(RootIndex r) const
  { return r < _rank ? static_cast<int>(r) : -1; }

  RootIndex reflect(int i, RootIndex r) const { return _reflect[i][r]; }

  /// Indices i with nonzero coordinate.
  IndexSet support(RootIndex r) const { return _support[r]; }

  int height(RootIndex r) const
  {
    int h = 0;
    for (int c : _roots[r])
      h += c;
    return h;
  }

  /// <alpha, alpha_i^vee> for arbitrary lattice vectors.
  int pairing(Root const &alpha, int i) const
  {
    int s = 0;
    for (int j = 0; j < _rank; ++j)
      s += alpha[j] * _cartan[i][j];
    return s;
  }

  std::uint64_t weyl_order() const
  {
    constexpr auto sat = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t r = 1;
    for (auto const &f : _factors) {
      std::uint64_t o = weylpieces::weyl_order(f);
      r = (o != 0 && r > sat / o) ? sat : r * o;
    }
    return r;
  }

  std::string name() const
  {
    if (_factors.empty())
      return "A0";
    CartanSpec spec{_factors};
    return spec.to_string();
  }

  bool same_as(RootSystem const &other) const
  { return this == &other || _cartan == other._cartan; }

private:
  RootSystem(IntMatrix cartan, std::vector<CartanFactor> factors, bool bourbaki)
  : _rank(static_cast<int>(cartan.size())), _cartan(std::move(cartan)),
    _factors(std::move(factors)), _bourbaki(bourbaki)
  {
    if (_rank > IndexSet::max_rank)
      throw SpecError("rank exceeds " + std::to_string(IndexSet::max_rank));
    generate();
  }

  void generate()
  {
    std::size_t const cap = std::max<std::size_t>(std::size_t(_rank) * _rank, 120);

    std::vector<Root> simple;
    for (int i = 0; i < _rank; ++i) {
      Root e(_rank, 0);
      e[i] = 1;
      simple.push_back(e);
    }

    std::map<Root, int> seen;
    std::vector<Root> others;
    std::deque<Root> queue(simple.begin(), simple.end());
    for (auto const &e : simple)
      seen.emplace(e, 0);

    while (!queue.empty()) {
      Root r = queue.front();
      queue.pop_front();
      for (int i = 0; i < _rank; ++i) {
        int p = pairing(r, i);
        if (p == 0)
          continue;
        Root s = r;
        s[i] -= p;
        if (std::any_of(s.begin(), s.end(), [](int c) { return c < 0; }))
          continue;
        if (seen.emplace(s, 0).second) {
          others.push_back(s);
          queue.push_back(s);
          if (seen.size() > cap)
            throw SpecError("Cartan matrix is not of finite type");
        }
      }
    }

    std::sort(others.begin(), others.end(), [](Root const &a, Root const &b) {
      int ha = std::accumulate(a.begin(), a.end(), 0);
      int hb = std::accumulate(b.begin(), b.end(), 0);
      return ha != hb ? ha < hb : a < b;
    });

    _roots = simple;
    _roots.insert(_roots.end(), others.begin(), others.end());
    _npos = _roots.size();
    if (2 * _npos > std::numeric_limits<RootIndex>::max())
      throw SpecError("root system too large");

    for (std::size_t p = 0; p < _npos; ++p) {
      Root neg = _roots[p];
      for (int &c : neg)
        c = -c;
      _roots.push_back(neg);
    }
    for (std::size_t r = 0; r < _roots.size(); ++r)
      _index.emplace(_roots[r], static_cast<RootIndex>(r));

    _reflect.assign(_rank, std::vector<RootIndex>(_roots.size()));
    for (int i = 0; i < _rank; ++i) {
      for (std::size_t r = 0; r < _roots.size(); ++r) {
        Root s = _roots[r];
        s[i] -= pairing(s, i);
        auto it = _index.find(s);
        if (it == _index.end())
          throw SpecError("root set not closed under reflections; Cartan matrix invalid");
        _reflect[i][r] = it->second;
      }
    }

    _support.resize(_roots.size());
    for (std::size_t r = 0; r < _roots.size(); ++r) {
      IndexSet s;
      for (int i = 0; i < _rank; ++i)
        if (_roots[r][i] != 0)
          s.insert(i);
      _support[r] = s;
    }
  }

  int _rank;
  IntMatrix _cartan;
  std::vector<CartanFactor> _factors;
  bool _bourbaki;

  std::size_t _npos = 0;
  std::vector<Root> _roots;
  std::map<Root, RootIndex> _index;
  std::vector<std::vector<RootIndex>> _reflect;
  std::vector<IndexSet> _support;
};

namespace detail
{

inline IntMatrix block_diagonal(IntMatrix const &a, IntMatrix const &b)
{
  std::size_t const n = a.size() + b.size();
  IntMatrix c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      c[i][j] = a[i][j];
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[a.size() + i][a.size() + j] = b[i][j];
  return c;
}

/// Connected components of the Dynkin graph, each sorted.
inline std::vector<std::vector<int>> dynkin_components(IntMatrix const &c)
{
  int const n = static_cast<int>(c.size());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0)
      continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (int j = 0; j < n; ++j) {
        if (comp[j] < 0 && c[members[k]][j] != 0) {
          comp[j] = comp[s];
          members.push_back(j);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(members);
  }
  return out;
}

} // namespace detail

inline RootSystemPtr build_root_system(CartanSpec const &spec)
{
  if (spec.factors.empty())
    throw SpecError("Cartan type has no factors");
  IntMatrix c;
  for (auto const &f : spec.factors)
    c = detail::block_diagonal(c, cartan_matrix(f));
  return RootSystem::create(std::move(c), spec.factors, true);
}

inline RootSystemPtr build_root_system(std::string_view type)
{ return build_root_system(CartanSpec::parse(type)); }

/// Block-diagonal product; indices of `b` are shifted by rank(a).
inline RootSystemPtr product(RootSystem const &a, RootSystem const &b)
{
  auto factors = a.factors();
  factors.insert(factors.end(), b.factors().begin(), b.factors().end());
  return RootSystem::create(detail::block_diagonal(a.cartan(), b.cartan()), std::move(factors),
                            a.bourbaki_layout() && b.bourbaki_layout());
}

/// Validates an arbitrary Cartan matrix and identifies its irreducible types.
///
/// Uses the convention `c[i][j] = <alpha_j, alpha_i^vee>`. The labeling of
/// the input is preserved, so named diagram shorthands are unavailable on
/// the result unless it happens to be in Bourbaki layout.
inline RootSystemPtr root_system_from_cartan(IntMatrix const &c)
{
  int const n = static_cast<int>(c.size());
  if (n == 0)
    throw SpecError("empty Cartan matrix");
  for (auto const &row : c)
    if (static_cast<int>(row.size()) != n)
      throw SpecError("Cartan matrix is not square");

  for (int i = 0; i < n; ++i) {
    if (c[i][i] != 2)
      throw SpecError("Cartan matrix diagonal entry is not 2");
    for (int j = 0; j < n; ++j) {
      if (i == j)
        continue;
      if (c[i][j] > 0)
        throw SpecError("positive off-diagonal Cartan entry");
      if ((c[i][j] == 0) != (c[j][i] == 0))
        throw SpecError("Cartan matrix zero pattern is not symmetric");
      int prod = c[i][j] * c[j][i];
      if (prod > 3)
        throw SpecError("Cartan entries not of finite type");
      if (prod > 1 && c[i][j] != -1 && c[j][i] != -1)
        throw SpecError("Cartan entries not of finite type");
    }
  }

  // Generate first; this rejects affine and indefinite matrices.
  auto generic = RootSystem::create(c, {}, false);

  std::vector<CartanFactor> factors;
  for (auto const &members : detail::dynkin_components(c)) {
    int const r = static_cast<int>(members.size());
    IndexSet mask;
    for (int m : members)
      mask.insert(m);

    std::size_t npos = 0;
    for (std::size_t p = 0; p < generic->num_positive(); ++p)
      if (generic->support(static_cast<RootIndex>(p)).subset_of(mask))
        ++npos;

    int max_bond = 1;
    int count_short = 0;
    for (int i : members) {
      bool is_short = false;
      for (int j : members) {
        if (i == j)
          continue;
        max_bond = std::max(max_bond, c[i][j] * c[j][i]);
        if (c[i][j] < -1)
          is_short = true;
      }
      count_short += is_short ? 1 : 0;
    }

    std::size_t const rr = static_cast<std::size_t>(r);
    CartanFactor f{'?', r};
    if (max_bond == 3 && r == 2)
      f.family = 'G';
    else if (max_bond == 2 && r == 4 && npos == 24)
      f.family = 'F';
    else if (max_bond == 2 && npos == rr * rr)
      f.family = (r == 2 || count_short == 1) ? 'B' : 'C';
    else if (max_bond == 1 && npos == rr * (rr + 1) / 2)
      f.family = 'A';
    else if (max_bond == 1 && r >= 4 && npos == rr * (rr - 1))
      f.family = 'D';
    else if (max_bond == 1 && ((r == 6 && npos == 36) || (r == 7 && npos == 63) ||
                               (r == 8 && npos == 120)))
      f.family = 'E';
    else
      throw SpecError("could not identify Dynkin type of a Cartan component");
    factors.push_back(f);
  }

  // Accept as Bourbaki layout when it coincides with the canonical matrix.
  CartanSpec spec{factors};
  IntMatrix canonical;
  for (auto const &f : factors)
    canonical = detail::block_diagonal(canonical, cartan_matrix(f));
  bool const bourbaki = canonical == c;

  return RootSystem::create(c, std::move(factors), bourbaki);
}

// ---------------------------------------------------------------------------
// Automorphisms of the root lattice preserving Phi

enum class AutKind
{
  diagram,
  general
};

inline IntMatrix identity_matrix(int n)
{
  IntMatrix m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    m[i][i] = 1;
  return m;
}

inline IntMatrix negation_matrix(int n)
{
  IntMatrix m = identity_matrix(n);
  for (int i = 0; i < n; ++i)
    m[i][i] = -1;
  return m;
}

/// Matrix sending alpha_i to alpha_perm[i] (0-based).
inline IntMatrix permutation_matrix(std::vector<int> const &perm)
{
  int const n = static_cast<int>(perm.size());
  IntMatrix m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    m[perm[i]][i] = 1;
  return m;
}

inline IntMatrix multiply_matrices(IntMatrix const &a, IntMatrix const &b)
{
  std::size_t const n = a.size();
  IntMatrix c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j)
          c[i][j] += a[i][k] * b[k][j];
  return c;
}

class RootAutomorphism;
RootAutomorphism validate_automorphism(RootSystemPtr const &rs, IntMatrix const &matrix,
                                       std::optional<int> expected_order = std::nullopt);

/// A lattice automorphism mapping Phi bijectively onto itself.
///
/// Only obtainable through `validate_automorphism`, so every instance is
/// known to preserve Phi.
class RootAutomorphism
{
public:
  RootSystemPtr const &system() const { return _rs; }
  IntMatrix const &matrix() const { return _matrix; }
  AutKind kind() const { return _kind; }
  bool is_diagram() const { return _kind == AutKind::diagram; }
  int order() const { return _order; }

  RootIndex operator()(RootIndex r) const { return _perm[r]; }
  RootIndex inverse_image(RootIndex r) const { return _inv[r]; }

  Root apply(Root const &v) const
  {
    Root out(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j)
        out[i] += _matrix[i][j] * v[j];
    return out;
  }

  /// Image of simple position i; requires a diagram automorphism.
  int on_index(int i) const
  {
    require_diagram();
    return _rs->simple_position(_perm[_rs->simple(i)]);
  }

  /// delta(K) = {delta(k) : k in K}; requires a diagram automorphism.
  IndexSet on_set(IndexSet k) const
  {
    require_diagram();
    IndexSet out;
    for (int p : k.positions())
      out.insert(on_index(p));
    return out;
  }

  /// delta^{-1}(K); requires a diagram automorphism.
  IndexSet preimage(IndexSet k) const
  {
    require_diagram();
    IndexSet out;
    for (int i = 0; i < _rs->rank(); ++i)
      if (k.contains(on_index(i)))
        out.insert(i);
    return out;
  }

  /// Positions i with theta(alpha_i) simple, mapped as a vector; -1 otherwise.
  std::vector<int> simple_permutation() const
  {
    std::vector<int> out(_rs->rank());
    for (int i = 0; i < _rs->rank(); ++i)
      out[i] = _rs->simple_position(_perm[_rs->simple(i)]);
    return out;
  }

  bool operator==(RootAutomorphism const &o) const
  { return _rs->same_as(*o._rs) && _matrix == o._matrix; }

private:
  friend RootAutomorphism validate_automorphism(RootSystemPtr const &, IntMatrix const &,
                                                std::optional<int>);

  RootAutomorphism() = default;

  void require_diagram() const
  {
    if (_kind != AutKind::diagram)
      throw PreconditionError("operation requires a diagram automorphism");
  }

  RootSystemPtr _rs;
  IntMatrix _matrix;
  AutKind _kind = AutKind::general;
  std::vector<RootIndex> _perm;
  std::vector<RootIndex> _inv;
  int _order = 1;
};

/// Checks that `matrix` (columns are images of the simple roots) maps Phi
/// bijectively onto Phi and classifies it. If `expected_order` is given the
/// matrix must satisfy `matrix^expected_order == 1`.
inline RootAutomorphism validate_automorphism(RootSystemPtr const &rs, IntMatrix const &matrix,
                                              std::optional<int> expected_order)
{
  int const n = rs->rank();
  if (static_cast<int>(matrix.size()) != n)
    throw AutomorphismError("automorphism matrix must be " + std::to_string(n) + "x" +
                            std::to_string(n));
  for (auto const &row : matrix)
    if (static_cast<int>(row.size()) != n)
      throw AutomorphismError("automorphism matrix is not square");

  RootAutomorphism a;
  a._rs = rs;
  a._matrix = matrix;
  a._perm.resize(rs->num_roots());
  a._inv.assign(rs->num_roots(), std::numeric_limits<RootIndex>::max());

  for (std::size_t r = 0; r < rs->num_roots(); ++r) {
    auto img = rs->find(a.apply(rs->root(static_cast<RootIndex>(r))));
    if (!img)
      throw AutomorphismError("matrix does not map the root system onto itself");
    if (a._inv[*img] != std::numeric_limits<RootIndex>::max())
      throw AutomorphismError("matrix is not injective on roots");
    a._perm[r] = *img;
    a._inv[*img] = static_cast<RootIndex>(r);
  }

  bool diagram = true;
  for (int i = 0; i < n; ++i)
    if (rs->simple_position(a._perm[rs->simple(i)]) < 0)
      diagram = false;
  a._kind = diagram ? AutKind::diagram : AutKind::general;

  // order = lcm of cycle lengths on Phi, which spans the lattice
  std::vector<bool> visited(rs->num_roots(), false);
  long long order = 1;
  for (std::size_t r = 0; r < rs->num_roots(); ++r) {
    if (visited[r])
      continue;
    long long len = 0;
    for (std::size_t s = r; !visited[s]; s = a._perm[s]) {
      visited[s] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  a._order = static_cast<int>(order);

  if (expected_order) {
    if (*expected_order <= 0 || *expected_order % a._order != 0)
      throw OrderError("automorphism has order " + std::to_string(a._order) +
                       ", expected its " + std::to_string(*expected_order) +
                       "-th power to be the identity");
  }
  return a;
}

inline RootAutomorphism identity_automorphism(RootSystemPtr const &rs)
{ return validate_automorphism(rs, identity_matrix(rs->rank())); }

inline RootAutomorphism aut_compose(RootAutomorphism const &a, RootAutomorphism const &b)
{
  if (!a.system()->same_as(*b.system()))
    throw MismatchError("automorphisms belong to different root systems");
  return validate_automorphism(a.system(), multiply_matrices(a.matrix(), b.matrix()));
}

inline RootAutomorphism aut_inverse(RootAutomorphism const &a)
{
  auto const &rs = a.system();
  IntMatrix m(rs->rank(), std::vector<int>(rs->rank(), 0));
  for (int i = 0; i < rs->rank(); ++i) {
    Root const &col = rs->root(a.inverse_image(rs->simple(i)));
    for (int r = 0; r < rs->rank(); ++r)
      m[r][i] = col[r];
  }
  return validate_automorphism(rs, m);
}

inline RootAutomorphism aut_power(RootAutomorphism const &a, int n)
{
  RootAutomorphism base = n < 0 ? aut_inverse(a) : a;
  int k = n < 0 ? -n : n;
  k %= a.order();
  RootAutomorphism out = identity_automorphism(a.system());
  for (int i = 0; i < k; ++i)
    out = aut_compose(out, base);
  return out;
}

/// Every permutation of the simple roots preserving the Cartan matrix,
/// ordered lexicographically by permutation (identity first).
inline std::vector<RootAutomorphism> diagram_automorphisms(RootSystemPtr const &rs)
{
  int const n = rs->rank();
  auto const &c = rs->cartan();
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);

  auto search = [&](auto &&self, int i) -> void {
    if (i == n) {
      perms.push_back(perm);
      return;
    }
    for (int t = 0; t < n; ++t) {
      if (used[t] || c[t][t] != c[i][i])
        continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        ok = c[t][perm[j]] == c[i][j] && c[perm[j]][t] == c[j][i];
      if (!ok)
        continue;
      perm[i] = t;
      used[t] = true;
      self(self, i + 1);
      used[t] = false;
    }
  };
  search(search, 0);

  std::vector<RootAutomorphism> out;
  for (auto const &p : perms)
    out.push_back(validate_automorphism(rs, permutation_matrix(p)));
  return out;
}

/// The canonical nontrivial diagram symmetry of each factor (A_n reversal,
/// D_n swap of the two end nodes, E6 reflection), identity on factors
/// without one. Throws if no factor has a flip.
inline RootAutomorphism canonical_flip(RootSystemPtr const &rs)
{
  if (!rs->bourbaki_layout())
    throw SpecError("'flip' needs a root system in Bourbaki labeling");
  std::vector<int> perm(rs->rank());
  std::iota(perm.begin(), perm.end(), 0);
  bool any = false;
  int off = 0;
  for (auto const &f : rs->factors()) {
    int const n = f.rank;
    if (f.family == 'A' && n >= 2) {
      for (int i = 0; i < n; ++i)
        perm[off + i] = off + n - 1 - i;
      any = true;
    } else if (f.family == 'D') {
      std::swap(perm[off + n - 2], perm[off + n - 1]);
      any = true;
    } else if (f.family == 'E' && n == 6) {
      std::swap(perm[off + 0], perm[off + 5]);
      std::swap(perm[off + 2], perm[off + 4]);
      any = true;
    }
    off += n;
  }
  if (!any)
    throw SpecError("root system " + rs->name() + " has no diagram flip");
  return validate_automorphism(rs, permutation_matrix(perm));
}

/// True iff the Cartan matrix is block-diagonal F x F with equal blocks.
inline bool is_self_product(RootSystem const &rs)
{
  int const n = rs.rank();
  if (n % 2 != 0)
    return false;
  int const h = n / 2;
  auto const &c = rs.cartan();
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < h; ++j) {
      if (c[i][j] != c[h + i][h + j] || c[i][h + j] != 0 || c[h + i][j] != 0)
        return false;
    }
  }
  return true;
}

/// The factor swap alpha_i <-> alpha_{i+r} on F x F.
inline RootAutomorphism product_swap(RootSystemPtr const &rs)
{
  if (!is_self_product(*rs))
    throw SpecError("productSwap needs a root system of the form F x F");
  int const h = rs->rank() / 2;
  std::vector<int> perm(rs->rank());
  for (int i = 0; i < h; ++i) {
    perm[i] = h + i;
    perm[h + i] = i;
  }
  return validate_automorphism(rs, permutation_matrix(perm));
}

/// The factor system F of a self-product F x F (first half of the indices).
inline RootSystemPtr product_factor(RootSystemPtr const &rs)
{
  if (!is_self_product(*rs))
    throw SpecError("root system is not of the form F x F");
  int const h = rs->rank() / 2;
  IntMatrix c(h, std::vector<int>(h));
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j)
      c[i][j] = rs->cartan()[i][j];

  auto const &fs = rs->factors();
  if (rs->bourbaki_layout() && fs.size() % 2 == 0 &&
      std::equal(fs.begin(), fs.begin() + fs.size() / 2, fs.begin() + fs.size() / 2)) {
    return RootSystem::create(c, std::vector<CartanFactor>(fs.begin(), fs.begin() + fs.size() / 2),
                              true);
  }
  return root_system_from_cartan(c);
}

} // namespace weylpieces

#endif // WEYLPIECES_ROOTSYS_HPP
