#ifndef WEYLPIECES_PARABOLIC_HPP
#define WEYLPIECES_PARABOLIC_HPP

#include <utility>
#include <vector>

#include "index_set.hpp"
#include "rootsys.hpp"
#include "weyl.hpp"

namespace weylpieces
{

enum class Side
{
  left,  // representatives of W_J \ W, the set ^J W
  right  // representatives of W / W_J, the set W^J
};

/// w in W^J, i.e. w(alpha_j) > 0 for all j in J.
inline bool is_min_right(WeylElement const &w, IndexSet J)
{
  for (int j : J.positions())
    if (w.has_right_descent(j))
      return false;
  return true;
}

/// w in ^J W, i.e. w^{-1}(alpha_j) > 0 for all j in J.
inline bool is_min_left(WeylElement const &w, IndexSet J)
{ return is_min_right(inverse(w), J); }

inline bool is_min_double(WeylElement const &w, IndexSet J, IndexSet K)
{ return is_min_left(w, J) && is_min_right(w, K); }

inline bool in_parabolic(WeylElement const &w, IndexSet J)
{ return support(w).subset_of(J); }

/// w = x y with x in W^J, y in W_J and l(w) = l(x) + l(y).
inline std::pair<WeylElement, WeylElement> decompose_right(WeylElement const &w, IndexSet J)
{
  WeylElement x = w;
  Word y_word;
  for (bool changed = true; changed;) {
    changed = false;
    for (int j : J.positions()) {
      if (x.has_right_descent(j)) {
        x = times_simple(x, j);
        y_word.push_back(j + 1);
        changed = true;
        break;
      }
    }
  }
  // stripped letters come off the right end, so y reads them backwards
  Word y(y_word.rbegin(), y_word.rend());
  return {x, from_word(w.system(), y)};
}

/// w = y x with y in W_J, x in ^J W and l(w) = l(y) + l(x).
inline std::pair<WeylElement, WeylElement> decompose_left(WeylElement const &w, IndexSet J)
{
  auto [xi, yi] = decompose_right(inverse(w), J);
  return {inverse(yi), inverse(xi)};
}

/// min(W_J w)
inline WeylElement min_left_coset(WeylElement const &w, IndexSet J)
{ return decompose_left(w, J).second; }

/// min(w W_J)
inline WeylElement min_right_coset(WeylElement const &w, IndexSet J)
{ return decompose_right(w, J).first; }

inline std::vector<WeylElement> enumerate_min_reps(RootSystemPtr const &rs, IndexSet J, Side side,
                                                   std::uint64_t guard = default_guard)
{
  std::vector<WeylElement> out;
  for (auto &w : enumerate_group(rs, guard))
    if (side == Side::right ? is_min_right(w, J) : is_min_left(w, J))
      out.push_back(std::move(w));
  return out;
}

/// ^J W^K
inline std::vector<WeylElement> enumerate_double_reps(RootSystemPtr const &rs, IndexSet J,
                                                      IndexSet K,
                                                      std::uint64_t guard = default_guard)
{
  std::vector<WeylElement> out;
  for (auto &w : enumerate_group(rs, guard))
    if (is_min_double(w, J, K))
      out.push_back(std::move(w));
  return out;
}

struct RootSubset
{
  std::vector<RootIndex> all;
  std::vector<RootIndex> positive;
};

/// Phi_J and Phi_J^+: the roots supported in J.
inline RootSubset phi_subset(RootSystem const &rs, IndexSet J)
{
  RootSubset out;
  for (std::size_t r = 0; r < rs.num_roots(); ++r) {
    auto const idx = static_cast<RootIndex>(r);
    if (rs.support(idx).subset_of(J) && !rs.support(idx).empty()) {
      out.all.push_back(idx);
      if (rs.is_positive(idx))
        out.positive.push_back(idx);
    }
  }
  return out;
}

/// {i : w(alpha_k) = alpha_i for some k in K}. Images that are not simple
/// are dropped, so w^{-1}J in the usual notation is transport(w^{-1}, J).
inline IndexSet transport(WeylElement const &w, IndexSet K)
{
  auto const &rs = *w.system();
  IndexSet out;
  for (int k : K.positions()) {
    int i = rs.simple_position(w(rs.simple(k)));
    if (i >= 0)
      out.insert(i);
  }
  return out;
}

} // namespace weylpieces

#endif // WEYLPIECES_PARABOLIC_HPP
