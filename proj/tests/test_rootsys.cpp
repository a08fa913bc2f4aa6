#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace weylpieces;
using namespace testing_helpers;

TEST(CartanSpec, ParsesProductsAndRejectsJunk)
{
  auto s = CartanSpec::parse("A3xA3");
  ASSERT_EQ(s.factors.size(), 2u);
  EXPECT_EQ(s.rank(), 6);
  EXPECT_EQ(CartanSpec::parse("b2 * G2").to_string(), "B2xG2");
  EXPECT_THROW(CartanSpec::parse(""), SpecError);
  EXPECT_THROW(CartanSpec::parse("A"), SpecError);
  EXPECT_THROW(CartanSpec::parse("A2x"), SpecError);
  EXPECT_THROW(CartanSpec::parse("E5"), SpecError);
  EXPECT_THROW(CartanSpec::parse("G3"), SpecError);
  EXPECT_THROW(CartanSpec::parse("Q2"), SpecError);
}

TEST(RootSystem, RootCounts)
{
  auto a1 = build_root_system("A1");
  EXPECT_EQ(a1->num_roots(), 2u);
  EXPECT_EQ(a1->num_positive(), 1u);

  auto a2 = build_root_system("A2");
  EXPECT_EQ(a2->num_roots(), 6u);
  EXPECT_TRUE(a2->find({1, 0}) && a2->find({0, 1}) && a2->find({1, 1}));
  EXPECT_FALSE(a2->find({1, -1}));

  // |Phi| for the classical and exceptional families
  std::vector<std::pair<char const *, std::size_t>> expect{
      {"A4", 20}, {"B3", 18}, {"C3", 18}, {"D4", 24}, {"G2", 12}, {"F4", 48}, {"E6", 72}};
  for (auto [t, n] : expect)
    EXPECT_EQ(build_root_system(t)->num_roots(), n) << t;
}

TEST(RootSystem, ProductsHaveDisjointSupports)
{
  auto a1 = build_root_system("A1");
  auto a2 = build_root_system("A2");
  EXPECT_EQ(product(*a1, *a1)->num_roots(), 4u);
  EXPECT_EQ(product(*a2, *a2)->num_roots(), 12u);
  auto p = product(*a1, *a2);
  EXPECT_EQ(p->rank(), 3);
  EXPECT_EQ(p->num_roots(), 8u);
  for (std::size_t r = 0; r < p->num_roots(); ++r) {
    IndexSet s = p->support(static_cast<RootIndex>(r));
    EXPECT_TRUE(s.subset_of(S(p, {1})) || s.subset_of(S(p, {2, 3})));
  }
}

TEST(RootSystem, BourbakiConventions)
{
  // B2: alpha_2 short; C2: alpha_2 long; G2: alpha_1 short
  auto b2 = build_root_system("B2");
  EXPECT_TRUE(b2->find({1, 2}));
  EXPECT_FALSE(b2->find({2, 1}));
  auto c2 = build_root_system("C2");
  EXPECT_TRUE(c2->find({2, 1}));
  auto g2 = build_root_system("G2");
  EXPECT_TRUE(g2->find({3, 2}));
  EXPECT_TRUE(g2->find({3, 1}));
  EXPECT_EQ(g2->height(root_of(g2, {3, 2})), 5);
}

TEST(RootSystem, FromCartanRejectsCorruptMatrices)
{
  EXPECT_EQ(root_system_from_cartan({{2, -1}, {-1, 2}})->num_roots(), 6u);
  EXPECT_THROW(root_system_from_cartan({{2, -1}, {0, 2}}), SpecError);      // asymmetric zeros
  EXPECT_THROW(root_system_from_cartan({{2, -2}, {-2, 2}}), SpecError);     // affine A1
  EXPECT_THROW(root_system_from_cartan({{3, -1}, {-1, 2}}), SpecError);     // bad diagonal
  EXPECT_THROW(root_system_from_cartan({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}), SpecError);
}

TEST(Automorphism, Classification)
{
  auto rs = build_root_system("A2");
  auto id = validate_automorphism(rs, identity_matrix(2));
  EXPECT_TRUE(id.is_diagram());
  EXPECT_EQ(id.order(), 1);

  auto swap = validate_automorphism(rs, permutation_matrix({1, 0}));
  EXPECT_TRUE(swap.is_diagram());
  EXPECT_EQ(swap.order(), 2);
  EXPECT_EQ(swap(rs->simple(0)), rs->simple(1));
  EXPECT_EQ(swap(root_of(rs, {1, 1})), root_of(rs, {1, 1}));

  auto n = neg(rs);
  EXPECT_FALSE(n.is_diagram());
  EXPECT_EQ(n.order(), 2);
  for (std::size_t r = 0; r < rs->num_positive(); ++r)
    EXPECT_FALSE(rs->is_positive(n(static_cast<RootIndex>(r))));
}

TEST(Automorphism, RejectsNonAutomorphisms)
{
  auto rs = build_root_system("B2");
  EXPECT_THROW(validate_automorphism(rs, permutation_matrix({1, 0})), AutomorphismError);
  EXPECT_THROW(validate_automorphism(rs, {{2, 0}, {0, 1}}), AutomorphismError);
  EXPECT_THROW(validate_automorphism(rs, {{1, 0, 0}, {0, 1, 0}}), AutomorphismError);
  auto a2 = build_root_system("A2");
  EXPECT_THROW(validate_automorphism(a2, permutation_matrix({1, 0}), 1), OrderError);
  EXPECT_NO_THROW(validate_automorphism(a2, permutation_matrix({1, 0}), 2));
  EXPECT_NO_THROW(validate_automorphism(a2, identity_matrix(2), 2));
}

TEST(Automorphism, Algebra)
{
  auto rs = build_root_system("A2");
  auto id = identity_automorphism(rs);
  auto swap = canonical_flip(rs);
  EXPECT_EQ(aut_inverse(id), id);
  EXPECT_EQ(aut_compose(swap, swap), id);
  EXPECT_EQ(aut_power(swap, 3), swap);
  EXPECT_EQ(aut_power(swap, 0), id);

  auto a3 = build_root_system("A3");
  EXPECT_EQ(canonical_flip(a3).simple_permutation(), (std::vector<int>{2, 1, 0}));
  EXPECT_THROW(canonical_flip(build_root_system("B3")), SpecError);
}

TEST(Automorphism, DiagramGroups)
{
  std::vector<std::pair<char const *, std::size_t>> expect{
      {"A1", 1}, {"A2", 2}, {"A3", 2}, {"B2", 1}, {"G2", 1}, {"D4", 6}, {"E6", 2},
      {"A1xA1", 2}, {"A2xA2", 8}};
  for (auto [t, n] : expect) {
    auto ds = diagram_automorphisms(build_root_system(t));
    EXPECT_EQ(ds.size(), n) << t;
    EXPECT_EQ(ds.front(), identity_automorphism(build_root_system(t))) << t;
  }
}

TEST(Automorphism, ProductSwap)
{
  auto rs = build_root_system("A2xA2");
  EXPECT_TRUE(is_self_product(*rs));
  auto sw = product_swap(rs);
  EXPECT_EQ(sw.simple_permutation(), (std::vector<int>{2, 3, 0, 1}));
  EXPECT_EQ(product_factor(rs)->num_roots(), 6u);
  EXPECT_FALSE(is_self_product(*build_root_system("A1xA2")));
  EXPECT_THROW(product_swap(build_root_system("A3")), SpecError);
}

TEST(Weyl, GroupOrders)
{
  EXPECT_EQ(build_root_system("E8")->weyl_order(), 696729600u);
  EXPECT_EQ(build_root_system("F4")->weyl_order(), 1152u);
  EXPECT_EQ(build_root_system("D5")->weyl_order(), 1920u);
  EXPECT_EQ(build_root_system("B3xG2")->weyl_order(), 48u * 12u);
}
