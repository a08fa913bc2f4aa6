#ifndef WEYLPIECES_TESTS_HELPERS_HPP
#define WEYLPIECES_TESTS_HELPERS_HPP

#include <initializer_list>
#include <vector>

#include <weylpieces/weylpieces.hpp>

namespace testing_helpers
{

using namespace weylpieces;

inline WeylElement W(RootSystemPtr const &rs, std::initializer_list<int> word)
{ return from_word(rs, Word(word)); }

inline IndexSet S(RootSystemPtr const &rs, std::initializer_list<int> labels)
{ return IndexSet::from_labels(std::vector<int>(labels), rs->rank()); }

inline std::vector<WeylElement> Ws(RootSystemPtr const &rs,
                                   std::initializer_list<std::initializer_list<int>> words)
{
  std::vector<WeylElement> out;
  for (auto const &w : words)
    out.push_back(W(rs, w));
  sort_canonical(out);
  return out;
}

inline RootAutomorphism neg(RootSystemPtr const &rs)
{ return validate_automorphism(rs, negation_matrix(rs->rank())); }

inline RootIndex root_of(RootSystemPtr const &rs, Root const &coords) { return *rs->find(coords); }

inline std::vector<char const *> suite_types()
{ return {"A1", "A2", "A3", "B2", "B3", "G2", "A1xA1", "A2xA2"}; }

} // namespace testing_helpers

#endif // WEYLPIECES_TESTS_HELPERS_HPP
