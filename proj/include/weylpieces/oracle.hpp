#ifndef WEYLPIECES_ORACLE_HPP
#define WEYLPIECES_ORACLE_HPP

// Deliberately naive reference implementations. Nothing here calls into
// parabolic.hpp, pieces.hpp, piece_maps.hpp or twisted.hpp; only the root
// system and Weyl element primitives are shared with the fast paths.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "index_set.hpp"
#include "rootsys.hpp"
#include "weyl.hpp"

namespace weylpieces::oracle
{

enum class CosetSide
{
  left,
  right
};

using Progress = std::function<void(std::uint64_t)>;

namespace detail
{

inline bool positive_on(WeylElement const &w, IndexSet J)
{
  auto const &rs = *w.system();
  for (int j : J.positions())
    if (!rs.is_positive(w(rs.simple(j))))
      return false;
  return true;
}

inline IndexSet diagram_image(RootAutomorphism const &delta, IndexSet J)
{
  auto const &rs = *delta.system();
  IndexSet out;
  for (int j : J.positions()) {
    int i = rs.simple_position(delta(rs.simple(j)));
    if (i < 0)
      throw PreconditionError("delta must permute the simple roots");
    out.insert(i);
  }
  return out;
}

} // namespace detail

/// Minimal representatives by full enumeration: each coset of W_J is
/// materialized and its unique shortest element kept.
inline std::vector<WeylElement> brute_min_reps(RootSystemPtr const &rs, IndexSet J, CosetSide side,
                                               std::uint64_t guard = default_guard)
{
  auto const group = enumerate_group(rs, guard);
  auto const sub = enumerate_parabolic(rs, J, guard);

  std::unordered_map<WeylElement, std::size_t, WeylElementHash> coset_of;
  std::vector<WeylElement> reps;
  for (auto const &w : group) {
    if (coset_of.count(w))
      continue;
    std::optional<WeylElement> best;
    bool tie = false;
    for (auto const &y : sub) {
      WeylElement z = side == CosetSide::right ? multiply(w, y) : multiply(y, w);
      coset_of.emplace(z, reps.size());
      if (!best || z.length() < best->length()) {
        best = z;
        tie = false;
      } else if (z.length() == best->length() && !(z == *best)) {
        tie = true;
      }
    }
    if (tie)
      throw ContractViolation("coset of W_J has two minimal elements");
    reps.push_back(*best);
  }
  sort_canonical(reps);
  return reps;
}

/// I(J, w, delta) by scanning all subsets K of J for w delta(K) = K. The
/// qualifying family must be closed under union.
inline IndexSet brute_i_set(IndexSet J, RootAutomorphism const &delta, WeylElement const &w)
{
  if (J.size() > 20)
    throw GuardError("brute_i_set limited to |J| <= 20");
  auto const &rs = *w.system();

  auto stable = [&](IndexSet K) {
    std::vector<RootIndex> img, want;
    for (int k : K.positions()) {
      img.push_back(w(delta(rs.simple(k))));
      want.push_back(rs.simple(k));
    }
    std::sort(img.begin(), img.end());
    return img == want;
  };

  std::vector<IndexSet> family;
  for (IndexSet K : J.subsets())
    if (stable(K))
      family.push_back(K);

  IndexSet best;
  for (IndexSet a : family) {
    for (IndexSet b : family)
      if (std::find(family.begin(), family.end(), a | b) == family.end())
        throw ContractViolation("subsets K with w delta(K) = K are not closed under union");
    best = best | a;
  }
  return best;
}

/// The unique element of W^J of the form delta(x)^{-1} w^{-1} x, x in W_J.
inline WeylElement brute_epsilon(IndexSet J, RootAutomorphism const &delta, WeylElement const &w)
{
  auto const &rs = w.system();
  std::vector<WeylElement> found;
  for (auto const &x : enumerate_parabolic(rs, J)) {
    WeylElement dx = apply_aut(delta, x);
    WeylElement cand = multiply(multiply(inverse(dx), inverse(w)), x);
    if (detail::positive_on(cand, J) &&
        std::find(found.begin(), found.end(), cand) == found.end())
      found.push_back(cand);
  }
  if (found.size() != 1)
    throw ContractViolation("brute epsilon found " + std::to_string(found.size()) +
                            " candidates in W^J for w = " + to_string(w));
  return found.front();
}

/// Direct scan of the definition: w in W^{delta(J)} with w delta(u) in the
/// I-set for some u in the J-set. The sets are passed in explicitly.
inline std::vector<WeylElement> brute_w_set(IndexSet J, RootAutomorphism const &delta,
                                            std::vector<WeylElement> const &set_I,
                                            std::vector<WeylElement> const &set_J,
                                            std::uint64_t guard = default_guard)
{
  auto const &rs = delta.system();
  std::vector<WeylElement> out;
  for (auto const &w : brute_min_reps(rs, detail::diagram_image(delta, J), CosetSide::right, guard)) {
    bool member = false;
    for (auto const &u : set_J) {
      WeylElement prod = multiply(w, apply_aut(delta, u));
      if (std::find(set_I.begin(), set_I.end(), prod) != set_I.end()) {
        member = true;
        break;
      }
    }
    if (member)
      out.push_back(w);
  }
  return out;
}

struct SupportScanCounterexample
{
  WeylElement x, w, u, v;
};

struct SupportScanReport
{
  std::uint64_t scanned = 0;            // (w, u, v) triples examined
  std::uint64_t premises_satisfied = 0; // triples with x in W^{delta(J)}
  std::vector<SupportScanCounterexample> counterexamples;
};

/// Exhaustive check: x, w in W^{delta(J)}, u in W_J, v in W_{delta(J)},
/// supp(v) = delta(supp(u)) and w v = u x imply u in W_{I(J,w,delta)}.
/// Work is |W^{delta(J)}| |W_J| |W_{delta(J)}|, checked against `guard`.
inline SupportScanReport scan_support_constraint(RootSystemPtr const &rs, IndexSet J,
                                                   RootAutomorphism const &delta,
                                      std::uint64_t guard = default_guard,
                                      Progress const &progress = {})
{
  IndexSet const dJ = detail::diagram_image(delta, J);
  auto const reps = brute_min_reps(rs, dJ, CosetSide::right, guard);
  auto const W_J = enumerate_parabolic(rs, J, guard);
  auto const W_dJ = enumerate_parabolic(rs, dJ, guard);

  long double const work = static_cast<long double>(reps.size()) * W_J.size() * W_dJ.size();
  if (work > static_cast<long double>(guard))
    throw GuardError("support scan needs " + std::to_string(static_cast<double>(work)) +
                     " steps, above the guard");

  std::unordered_map<WeylElement, bool, WeylElementHash> is_rep;
  for (auto const &r : reps)
    is_rep.emplace(r, true);

  std::vector<IndexSet> supp_v;
  for (auto const &v : W_dJ)
    supp_v.push_back(support(v));

  SupportScanReport rep;
  for (auto const &w : reps) {
    IndexSet const K = brute_i_set(J, delta, w);
    for (auto const &u : W_J) {
      IndexSet const su = support(u);
      IndexSet const dsu = detail::diagram_image(delta, su);
      WeylElement const u_inv = inverse(u);
      for (std::size_t k = 0; k < W_dJ.size(); ++k) {
        ++rep.scanned;
        if (supp_v[k] != dsu)
          continue;
        WeylElement x = multiply(multiply(u_inv, w), W_dJ[k]);
        if (!is_rep.count(x))
          continue;
        ++rep.premises_satisfied;
        if (!su.subset_of(K))
          rep.counterexamples.push_back({x, w, u, W_dJ[k]});
      }
    }
    if (progress)
      progress(rep.scanned);
  }
  return rep;
}

struct StabilityScanCounterexample
{
  WeylElement w, a;
};

struct StabilityScanReport
{
  std::uint64_t solutions = 0;
  std::vector<StabilityScanCounterexample> counterexamples;
};

/// For every w in W^{delta(J)} and every a in W_J with
/// sigma(w) = delta(a)^{-1} w^{-1} a, check a tau(Phi_K) = Phi_K where
/// K = I(J, w, delta) and delta = sigma tau.
inline StabilityScanReport scan_solution_stability(RootSystemPtr const &rs, IndexSet J,
                                      RootAutomorphism const &sigma, RootAutomorphism const &tau,
                                      std::uint64_t guard = default_guard,
                                      Progress const &progress = {})
{
  RootAutomorphism const delta = aut_compose(sigma, tau);
  IndexSet const dJ = detail::diagram_image(delta, J);
  auto const W_J = enumerate_parabolic(rs, J, guard);

  StabilityScanReport rep;
  std::uint64_t done = 0;
  for (auto const &w : brute_min_reps(rs, dJ, CosetSide::right, guard)) {
    IndexSet const K = brute_i_set(J, delta, w);
    std::vector<RootIndex> phiK;
    for (std::size_t r = 0; r < rs->num_roots(); ++r) {
      auto idx = static_cast<RootIndex>(r);
      if (!rs->support(idx).empty() && rs->support(idx).subset_of(K))
        phiK.push_back(idx);
    }

    WeylElement const sw = apply_aut(sigma, w);
    WeylElement const w_inv = inverse(w);
    for (auto const &a : W_J) {
      if (!(sw == multiply(multiply(inverse(apply_aut(delta, a)), w_inv), a)))
        continue;
      ++rep.solutions;
      std::vector<RootIndex> img;
      for (RootIndex r : phiK)
        img.push_back(a(tau(r)));
      std::sort(img.begin(), img.end());
      if (img != phiK)
        rep.counterexamples.push_back({w, a});
    }
    if (progress)
      progress(++done);
  }
  return rep;
}

} // namespace weylpieces::oracle

#endif // WEYLPIECES_ORACLE_HPP
