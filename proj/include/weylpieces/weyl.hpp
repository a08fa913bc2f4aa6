#ifndef WEYLPIECES_WEYL_HPP
#define WEYLPIECES_WEYL_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "index_set.hpp"
#include "rootsys.hpp"

namespace weylpieces
{

/// Sequence of simple reflections, 1-based labels.
using Word = std::vector<int>;

/// Element of W stored as its action on the positive roots.
///
/// `images()[p]` is the root index of w(beta_p) for each positive root
/// beta_p; negative images encode the sign. Two elements are equal iff their
/// actions agree, so no word normal form is involved in comparison.
class WeylElement
{
public:
  WeylElement() = default;

  static WeylElement identity(RootSystemPtr rs)
  {
    std::vector<RootIndex> img(rs->num_positive());
    std::iota(img.begin(), img.end(), RootIndex(0));
    return WeylElement(std::move(rs), std::move(img));
  }

  /// `img` must be the images of all positive roots under an element of W.
  static WeylElement from_images(RootSystemPtr rs, std::vector<RootIndex> img)
  { return WeylElement(std::move(rs), std::move(img)); }

  RootSystemPtr const &system() const { return _rs; }
  std::vector<RootIndex> const &images() const { return _img; }
  int length() const { return _length; }
  bool is_identity() const { return _length == 0; }

  RootIndex operator()(RootIndex r) const
  {
    std::size_t const n = _img.size();
    return r < n ? _img[r] : _rs->negate(_img[r - n]);
  }

  /// True iff w(alpha_i) < 0, i.e. l(w s_i) < l(w).
  bool has_right_descent(int i) const
  { return !_rs->is_positive(_img[_rs->simple(i)]); }

  bool operator==(WeylElement const &o) const
  { return _img == o._img; }

  std::size_t hash() const
  {
    std::size_t h = 1469598103934665603ull;
    for (RootIndex r : _img) {
      h ^= r;
      h *= 1099511628211ull;
    }
    return h;
  }

private:
  WeylElement(RootSystemPtr rs, std::vector<RootIndex> img)
  : _rs(std::move(rs)), _img(std::move(img))
  {
    _length = 0;
    for (RootIndex r : _img)
      if (!_rs->is_positive(r))
        ++_length;
  }

  RootSystemPtr _rs;
  std::vector<RootIndex> _img;
  int _length = 0;
};

struct WeylElementHash
{
  std::size_t operator()(WeylElement const &w) const { return w.hash(); }
};

using WeylSet = std::unordered_set<WeylElement, WeylElementHash>;

namespace detail
{

inline void require_same(WeylElement const &a, WeylElement const &b)
{
  if (a.system().get() != b.system().get() && !a.system()->same_as(*b.system()))
    throw MismatchError("Weyl group elements belong to different root systems");
}

} // namespace detail

/// s_i (0-based position).
inline WeylElement simple_reflection(RootSystemPtr const &rs, int i)
{
  std::vector<RootIndex> img(rs->num_positive());
  for (std::size_t p = 0; p < img.size(); ++p)
    img[p] = rs->reflect(i, static_cast<RootIndex>(p));
  return WeylElement::from_images(rs, std::move(img));
}

/// s_{l_1} s_{l_2} ... s_{l_k}.
inline WeylElement from_word(RootSystemPtr const &rs, Word const &word)
{
  for (int l : word)
    if (l < 1 || l > rs->rank())
      throw WordError("letter " + std::to_string(l) + " outside 1.." + std::to_string(rs->rank()));

  std::vector<RootIndex> img(rs->num_positive());
  for (std::size_t p = 0; p < img.size(); ++p) {
    RootIndex r = static_cast<RootIndex>(p);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      r = rs->reflect(*it - 1, r);
    img[p] = r;
  }
  return WeylElement::from_images(rs, std::move(img));
}

inline WeylElement multiply(WeylElement const &a, WeylElement const &b)
{
  detail::require_same(a, b);
  std::vector<RootIndex> img(b.images().size());
  for (std::size_t p = 0; p < img.size(); ++p)
    img[p] = a(b.images()[p]);
  return WeylElement::from_images(a.system(), std::move(img));
}

inline WeylElement multiply(WeylElement const &a, WeylElement const &b, WeylElement const &c)
{ return multiply(multiply(a, b), c); }

inline WeylElement inverse(WeylElement const &a)
{
  auto const &rs = a.system();
  std::size_t const n = rs->num_positive();
  std::vector<RootIndex> img(n);
  for (std::size_t p = 0; p < n; ++p) {
    RootIndex q = a.images()[p];
    if (rs->is_positive(q))
      img[q] = static_cast<RootIndex>(p);
    else
      img[rs->negate(q)] = rs->negate(static_cast<RootIndex>(p));
  }
  return WeylElement::from_images(rs, std::move(img));
}

/// w s_i
inline WeylElement times_simple(WeylElement const &w, int i)
{
  auto const &rs = w.system();
  std::vector<RootIndex> img(w.images().size());
  for (std::size_t p = 0; p < img.size(); ++p)
    img[p] = w(rs->reflect(i, static_cast<RootIndex>(p)));
  return WeylElement::from_images(rs, std::move(img));
}

/// s_i w
inline WeylElement simple_times(int i, WeylElement const &w)
{
  auto const &rs = w.system();
  std::vector<RootIndex> img(w.images().size());
  for (std::size_t p = 0; p < img.size(); ++p)
    img[p] = rs->reflect(i, w.images()[p]);
  return WeylElement::from_images(rs, std::move(img));
}

inline int length(WeylElement const &w)
{ return w.length(); }

/// Reduced word by descent stripping: repeatedly remove the smallest i with
/// w(alpha_i) < 0 from the right.
inline Word reduced_word(WeylElement const &w)
{
  Word rev;
  WeylElement x = w;
  while (!x.is_identity()) {
    int i = 0;
    while (!x.has_right_descent(i))
      ++i;
    rev.push_back(i + 1);
    x = times_simple(x, i);
  }
  return Word(rev.rbegin(), rev.rend());
}

inline Root act_on_root(WeylElement const &w, Root const &alpha)
{
  auto const &rs = w.system();
  auto idx = rs->find(alpha);
  if (!idx)
    throw RootError("vector is not a root of " + rs->name());
  return rs->root(w(*idx));
}

/// Union of the letters of any reduced word.
inline IndexSet support(WeylElement const &w)
{
  IndexSet s;
  for (int l : reduced_word(w))
    s.insert(l - 1);
  return s;
}

/// The element acting as theta o w o theta^{-1} on Phi.
inline WeylElement apply_aut(RootAutomorphism const &theta, WeylElement const &w)
{
  if (!theta.system()->same_as(*w.system()))
    throw MismatchError("automorphism and element belong to different root systems");
  auto const &rs = w.system();
  std::vector<RootIndex> img(rs->num_positive());
  for (std::size_t p = 0; p < img.size(); ++p)
    img[p] = theta(w(theta.inverse_image(static_cast<RootIndex>(p))));
  return WeylElement::from_images(rs, std::move(img));
}

/// Total order by (length, reduced word lexicographically).
struct CanonicalLess
{
  bool operator()(WeylElement const &a, WeylElement const &b) const
  {
    if (a.length() != b.length())
      return a.length() < b.length();
    return reduced_word(a) < reduced_word(b);
  }
};

inline void sort_canonical(std::vector<WeylElement> &elems)
{
  std::vector<std::pair<Word, std::size_t>> keys;
  keys.reserve(elems.size());
  for (std::size_t k = 0; k < elems.size(); ++k)
    keys.emplace_back(reduced_word(elems[k]), k);
  std::sort(keys.begin(), keys.end(), [](auto const &a, auto const &b) {
    if (a.first.size() != b.first.size())
      return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<WeylElement> out;
  out.reserve(elems.size());
  for (auto const &k : keys)
    out.push_back(std::move(elems[k.second]));
  elems = std::move(out);
}

/// Breadth-first enumeration of W_J = <s_j : j in J> by length, returned in
/// canonical order.
inline std::vector<WeylElement> enumerate_parabolic(RootSystemPtr const &rs, IndexSet J,
                                                    std::uint64_t guard = default_guard)
{
  std::vector<WeylElement> all{WeylElement::identity(rs)};
  WeylSet seen{all.front()};
  std::size_t begin = 0;
  while (begin < all.size()) {
    std::size_t const end = all.size();
    for (std::size_t k = begin; k < end; ++k) {
      for (int j : J.positions()) {
        if (all[k].has_right_descent(j))
          continue;
        WeylElement next = times_simple(all[k], j);
        if (seen.insert(next).second) {
          if (all.size() >= guard)
            throw GuardError("parabolic subgroup exceeds the guard of " + std::to_string(guard) +
                             " elements");
          all.push_back(std::move(next));
        }
      }
    }
    begin = end;
  }
  sort_canonical(all);
  return all;
}

/// All of W in canonical order. Throws GuardError when |W| > guard.
inline std::vector<WeylElement> enumerate_group(RootSystemPtr const &rs,
                                                std::uint64_t guard = default_guard)
{
  if (rs->weyl_order() > guard)
    throw GuardError("|W(" + rs->name() + ")| = " + std::to_string(rs->weyl_order()) +
                     " exceeds the guard of " + std::to_string(guard));
  return enumerate_parabolic(rs, IndexSet::full(rs->rank()), guard + 1);
}

inline std::string word_to_string(Word const &w)
{
  if (w.empty())
    return "e";
  std::string s;
  for (int l : w)
    s += "s" + std::to_string(l);
  return s;
}

inline std::string to_string(WeylElement const &w)
{ return word_to_string(reduced_word(w)); }

} // namespace weylpieces

template<>
struct std::hash<weylpieces::WeylElement>
{
  std::size_t operator()(weylpieces::WeylElement const &w) const { return w.hash(); }
};

#endif // WEYLPIECES_WEYL_HPP
