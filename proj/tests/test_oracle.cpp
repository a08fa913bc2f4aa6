#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace weylpieces;
using namespace testing_helpers;

TEST(Oracle, MinReps)
{
  auto rs = build_root_system("A2");
  EXPECT_EQ(oracle::brute_min_reps(rs, S(rs, {1}), oracle::CosetSide::right),
            Ws(rs, {{}, {2}, {1, 2}}));
  EXPECT_EQ(oracle::brute_min_reps(rs, IndexSet::full(2), oracle::CosetSide::right), Ws(rs, {{}}));
  EXPECT_EQ(oracle::brute_min_reps(rs, IndexSet(), oracle::CosetSide::left).size(), 6u);
}

TEST(Oracle, ISet)
{
  auto rs = build_root_system("A2");
  auto id = identity_automorphism(rs);
  EXPECT_EQ(oracle::brute_i_set(S(rs, {1}), id, W(rs, {1, 2})), IndexSet());
  for (IndexSet J : IndexSet::full(2).subsets())
    EXPECT_EQ(oracle::brute_i_set(J, id, W(rs, {})), J);
  auto a3 = build_root_system("A3");
  EXPECT_EQ(oracle::brute_i_set(S(a3, {1, 3}), canonical_flip(a3), W(a3, {})), S(a3, {1, 3}));
}

TEST(Oracle, Epsilon)
{
  auto rs = build_root_system("A2");
  auto id = identity_automorphism(rs);
  EXPECT_EQ(oracle::brute_epsilon(S(rs, {1}), id, W(rs, {1, 2})), W(rs, {1, 2}));
  EXPECT_EQ(oracle::brute_epsilon(IndexSet(), id, W(rs, {1, 2})), W(rs, {2, 1}));
}

TEST(Oracle, WSet)
{
  auto rs = build_root_system("A2");
  auto n = neg(rs);
  auto id = identity_automorphism(rs);
  auto set_I = twisted_involutions(rs, n, IndexSet::full(2));
  auto set_J = twisted_involutions(rs, n, S(rs, {1}));
  EXPECT_EQ(oracle::brute_w_set(S(rs, {1}), id, set_I, set_J), Ws(rs, {{}, {2}, {1, 2}}));

  // doubled A1 with J empty: both elements of W(A1) appear
  auto p = build_root_system("A1xA1");
  auto sw = product_swap(p);
  auto o = doubled_j_oracle(p);
  auto w = oracle::brute_w_set(IndexSet(), identity_automorphism(p),
                               o.elements(p, sw, IndexSet::full(2)), o.elements(p, sw, IndexSet()));
  EXPECT_EQ(w.size(), 2u);
}

TEST(Oracle, SupportScan)
{
  for (auto t : {"A1", "A2", "B2", "A1xA1"}) {
    auto rs = build_root_system(t);
    for (auto const &d : diagram_automorphisms(rs))
      for (IndexSet J : IndexSet::full(rs->rank()).subsets()) {
        std::uint64_t calls = 0, last = 0;
        auto rep = oracle::scan_support_constraint(rs, J, d, default_guard, [&](std::uint64_t n) {
          ++calls;
          EXPECT_GE(n, last);
          last = n;
        });
        EXPECT_TRUE(rep.counterexamples.empty()) << t << " J=" << J.to_string();
        EXPECT_GT(rep.premises_satisfied, 0u);
        EXPECT_GT(calls, 0u);
      }
  }
  auto a3 = build_root_system("A3");
  EXPECT_THROW(oracle::scan_support_constraint(a3, IndexSet(), identity_automorphism(a3), 10),
               GuardError);
}

TEST(Oracle, StabilityScan)
{
  for (auto t : {"A1", "A2", "B2", "A1xA1", "A3"}) {
    auto rs = build_root_system(t);
    for (auto const &pair : builtin_pairs(rs))
      for (IndexSet J : IndexSet::full(rs->rank()).subsets()) {
        if (!stabilizes_levi(pair.tau, J))
          continue;
        auto rep = oracle::scan_solution_stability(rs, J, pair.sigma, pair.tau);
        EXPECT_TRUE(rep.counterexamples.empty()) << t << " J=" << J.to_string();
      }
  }
}
