#ifndef WEYLPIECES_INDEX_SET_HPP
#define WEYLPIECES_INDEX_SET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "errors.hpp"

namespace weylpieces
{

/// Subset of the simple indices I, stored as a bitset.
///
/// Bit positions are 0-based. Serialization uses the 1-based Bourbaki
/// labels (`from_labels` / `labels`), which is also what words use.
class IndexSet
{
public:
  static constexpr int max_rank = 64;

  constexpr IndexSet() = default;

  constexpr explicit IndexSet(std::uint64_t bits)
  : _bits(bits)
  {}

  static constexpr IndexSet full(int rank)
  { return IndexSet(rank >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << rank) - 1); }

  static IndexSet from_positions(std::initializer_list<int> positions)
  {
    IndexSet s;
    for (int p : positions)
      s.insert(p);
    return s;
  }

  /// Builds a set from 1-based labels; rejects labels outside 1..rank.
  static IndexSet from_labels(std::vector<int> const &labels, int rank)
  {
    IndexSet s;
    for (int l : labels) {
      if (l < 1 || l > rank)
        throw SpecError("index " + std::to_string(l) + " outside 1.." + std::to_string(rank));
      s.insert(l - 1);
    }
    return s;
  }

  std::vector<int> labels() const
  {
    std::vector<int> out;
    for (int p : positions())
      out.push_back(p + 1);
    return out;
  }

  std::vector<int> positions() const
  {
    std::vector<int> out;
    for (std::uint64_t b = _bits; b; b &= b - 1)
      out.push_back(std::countr_zero(b));
    return out;
  }

  constexpr std::uint64_t bits() const { return _bits; }
  constexpr bool empty() const { return _bits == 0; }
  constexpr int size() const { return std::popcount(_bits); }

  constexpr bool contains(int p) const
  { return (_bits >> p) & 1u; }

  constexpr void insert(int p) { _bits |= std::uint64_t(1) << p; }
  constexpr void erase(int p) { _bits &= ~(std::uint64_t(1) << p); }

  constexpr bool subset_of(IndexSet other) const
  { return (_bits & ~other._bits) == 0; }

  constexpr IndexSet operator&(IndexSet o) const { return IndexSet(_bits & o._bits); }
  constexpr IndexSet operator|(IndexSet o) const { return IndexSet(_bits | o._bits); }
  constexpr IndexSet operator-(IndexSet o) const { return IndexSet(_bits & ~o._bits); }

  constexpr bool operator==(IndexSet const &) const = default;
  constexpr auto operator<=>(IndexSet const &) const = default;

  /// All subsets of `*this`, in increasing order of the underlying bits.
  std::vector<IndexSet> subsets() const
  {
    std::vector<IndexSet> out;
    std::uint64_t sub = 0;
    do {
      out.emplace_back(sub);
      sub = (sub - _bits) & _bits;
    } while (sub != 0);
    return out;
  }

  std::string to_string() const
  {
    std::string s = "{";
    bool first = true;
    for (int l : labels()) {
      if (!first)
        s += ",";
      s += std::to_string(l);
      first = false;
    }
    return s + "}";
  }

private:
  std::uint64_t _bits = 0;
};

} // namespace weylpieces

#endif // WEYLPIECES_INDEX_SET_HPP
