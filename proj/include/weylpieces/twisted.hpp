#ifndef WEYLPIECES_TWISTED_HPP
#define WEYLPIECES_TWISTED_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "parabolic.hpp"
#include "pieces.hpp"
#include "rootsys.hpp"
#include "weyl.hpp"

namespace weylpieces
{

/// Involutions sigma, tau of the root lattice whose product is a diagram
/// automorphism delta = sigma o tau.
struct InvolutionPair
{
  RootAutomorphism sigma;
  RootAutomorphism tau;
  RootAutomorphism delta;
};

inline InvolutionPair make_involution_pair(RootAutomorphism const &sigma,
                                           RootAutomorphism const &tau)
{
  if (!sigma.system()->same_as(*tau.system()))
    throw MismatchError("sigma and tau belong to different root systems");
  if (sigma.order() > 2)
    throw OrderError("sigma is not an involution");
  if (tau.order() > 2)
    throw OrderError("tau is not an involution");
  RootAutomorphism delta = aut_compose(sigma, tau);
  if (!delta.is_diagram())
    throw PreconditionError("sigma o tau does not permute the simple roots");
  return {sigma, tau, delta};
}

/// The involutions d and -d for every diagram automorphism d with d^2 = 1,
/// identity first.
inline std::vector<RootAutomorphism> builtin_involutions(RootSystemPtr const &rs)
{
  auto const neg = validate_automorphism(rs, negation_matrix(rs->rank()), 2);
  std::vector<RootAutomorphism> out;
  for (auto const &d : diagram_automorphisms(rs)) {
    if (d.order() > 2)
      continue;
    out.push_back(d);
    out.push_back(aut_compose(neg, d));
  }
  return out;
}

/// All ordered pairs of built-in involutions whose product is a diagram
/// automorphism.
inline std::vector<InvolutionPair> builtin_pairs(RootSystemPtr const &rs)
{
  auto const inv = builtin_involutions(rs);
  std::vector<InvolutionPair> out;
  for (auto const &s : inv)
    for (auto const &t : inv)
      if (aut_compose(s, t).is_diagram())
        out.push_back(make_involution_pair(s, t));
  return out;
}

/// {w in W_J : theta(w) = w^{-1}}
inline std::vector<WeylElement> twisted_involutions(RootSystemPtr const &rs,
                                                    RootAutomorphism const &theta, IndexSet J,
                                                    std::uint64_t guard = default_guard)
{
  std::vector<WeylElement> out;
  for (auto &w : enumerate_parabolic(rs, J, guard))
    if (apply_aut(theta, w) == inverse(w))
      out.push_back(std::move(w));
  return out;
}

/// Source of the sets J_{J,theta}. These depend on the involution of the
/// algebraic group, not only on W, so they are supplied from outside:
///
///  - full:    all twisted involutions of W_J (an upper bound),
///  - custom:  explicit word lists keyed by J,
///  - doubled: {(v, v^{-1}) : v in W_{F,J0}} on F x F with the factor swap.
class JOracle
{
public:
  enum class Mode
  {
    full,
    custom,
    doubled
  };

  static JOracle full() { return JOracle(Mode::full); }
  static JOracle doubled() { return JOracle(Mode::doubled); }

  static JOracle custom(std::map<IndexSet, std::vector<Word>> sets)
  {
    JOracle o(Mode::custom);
    o._sets = std::move(sets);
    return o;
  }

  Mode mode() const { return _mode; }
  std::map<IndexSet, std::vector<Word>> const &custom_sets() const { return _sets; }

  std::string name() const
  {
    switch (_mode) {
    case Mode::full: return "full";
    case Mode::custom: return "custom";
    case Mode::doubled: return "doubled";
    }
    return "?";
  }

  /// The set for (J, theta), in canonical order. Every returned element is
  /// checked to lie in W_J and to satisfy theta(w) = w^{-1}.
  std::vector<WeylElement> elements(RootSystemPtr const &rs, RootAutomorphism const &theta,
                                    IndexSet J, std::uint64_t guard = default_guard) const
  {
    std::vector<WeylElement> out;
    switch (_mode) {
    case Mode::full:
      return twisted_involutions(rs, theta, J, guard);

    case Mode::custom: {
      auto it = _sets.find(J);
      if (it == _sets.end())
        throw PreconditionError("custom J-oracle has no set for J = " + J.to_string());
      for (auto const &word : it->second)
        out.push_back(from_word(rs, word));
      break;
    }

    case Mode::doubled: {
      auto swap = product_swap(rs);
      if (!(theta == swap))
        throw PreconditionError("doubled J-oracle requires theta = productSwap");
      if (!(swap.on_set(J) == J))
        throw PreconditionError("doubled J-oracle requires J of the form (J0, J0)");
      int const h = rs->rank() / 2;
      IndexSet J0 = J & IndexSet::full(h);
      for (auto const &v : enumerate_parabolic(rs, J0, guard))
        out.push_back(multiply(v, apply_aut(swap, inverse(v))));
      break;
    }
    }

    for (auto const &w : out) {
      if (!in_parabolic(w, J))
        throw PreconditionError("J-oracle element " + to_string(w) + " not in W_" + J.to_string());
      if (!(apply_aut(theta, w) == inverse(w)))
        throw PreconditionError("J-oracle element " + to_string(w) + " is not theta-twisted");
    }
    sort_canonical(out);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

private:
  explicit JOracle(Mode m)
  : _mode(m)
  {}

  Mode _mode;
  std::map<IndexSet, std::vector<Word>> _sets;
};

/// Splits w in W(F x F) into its two components, both as elements of W(F).
inline std::pair<WeylElement, WeylElement> product_components(WeylElement const &w)
{
  auto const &rsp = w.system();
  if (!is_self_product(*rsp))
    throw SpecError("root system is not of the form F x F");
  auto const f = product_factor(rsp);
  int const h = f->rank();
  Word first, second;
  for (int letter : reduced_word(w))
    (letter <= h ? first : second).push_back(letter <= h ? letter : letter - h);
  return {from_word(f, first), from_word(f, second)};
}

inline JOracle doubled_j_oracle(RootSystemPtr const &rs)
{
  if (!is_self_product(*rs))
    throw SpecError("doubled J-oracle needs a root system of the form F x F");
  return JOracle::doubled();
}

struct TwistedSolution
{
  WeylElement w;
  IndexSet K;
  std::vector<WeylElement> solutions;
  WeylElement distinguished;
};

namespace detail
{

/// {theta-image of each root in `roots`} after applying `u`, sorted.
inline std::vector<RootIndex> image_set(WeylElement const &u, RootAutomorphism const &theta,
                                        std::vector<RootIndex> const &roots)
{
  std::vector<RootIndex> img;
  img.reserve(roots.size());
  for (RootIndex r : roots)
    img.push_back(u(theta(r)));
  std::sort(img.begin(), img.end());
  return img;
}

inline bool solves_twisted_equation(InvolutionPair const &pair, WeylElement const &w,
                                    WeylElement const &a)
{
  // sigma(w) = delta(a)^{-1} w^{-1} a
  return apply_aut(pair.sigma, w) == multiply(inverse(apply_aut(pair.delta, a)), inverse(w), a);
}

} // namespace detail

/// The bijection rho of K with w(alpha_{delta(j)}) = alpha_{rho(j)}, as a
/// map of 0-based positions.
inline std::map<int, int> twist_perm(WeylElement const &w, RootAutomorphism const &delta,
                                     IndexSet K)
{
  auto const &rs = *w.system();
  detail::require_diagram(delta, rs);
  std::map<int, int> rho;
  for (int j : K.positions()) {
    int img = rs.simple_position(w(rs.simple(delta.on_index(j))));
    if (img < 0 || !K.contains(img))
      throw PreconditionError("w delta(K) != K for K = " + K.to_string());
    rho[j] = img;
  }
  return rho;
}

/// The unique u in W_J with u tau(Phi_K^+) = Phi_K^+ obtained by factoring
/// any solution a = b u with b in W_K, K = I(J, w, delta).
inline WeylElement distinguished_u(IndexSet J, InvolutionPair const &pair, WeylElement const &w,
                                   std::vector<WeylElement> const &solutions)
{
  auto const &rsp = w.system();
  if (solutions.empty())
    throw PreconditionError("distinguished_u needs at least one solution");
  for (auto const &a : solutions) {
    if (!in_parabolic(a, J))
      throw PreconditionError("solution " + to_string(a) + " not in W_J");
    if (!detail::solves_twisted_equation(pair, w, a))
      throw PreconditionError("solution " + to_string(a) +
                              " does not satisfy sigma(w) = delta(a)^-1 w^-1 a");
  }

  IndexSet const K = i_set(J, pair.delta, w);
  RootSubset const phiK = phi_subset(*rsp, K);
  auto const W_K = enumerate_parabolic(rsp, K);

  std::optional<WeylElement> result;
  for (auto const &a : solutions) {
    if (detail::image_set(a, pair.tau, phiK.all) != phiK.all)
      throw ContractViolation("a tau(Phi_K) != Phi_K for w = " + to_string(w) + ", a = " +
                              to_string(a));

    std::optional<WeylElement> u;
    for (auto const &b : W_K) {
      WeylElement cand = multiply(inverse(b), a);
      bool positive = true;
      for (RootIndex r : phiK.positive)
        positive = positive && rsp->is_positive(cand(pair.tau(r)));
      if (!positive)
        continue;
      if (u)
        throw ContractViolation("several b in W_K make b^-1 a tau(Phi_K^+) positive");
      u = cand;
    }
    if (!u)
      throw ContractViolation("no b in W_K makes b^-1 a tau(Phi_K^+) positive for a = " +
                              to_string(a));
    if (detail::image_set(*u, pair.tau, phiK.positive) != phiK.positive)
      throw ContractViolation("u tau(Phi_K^+) != Phi_K^+ for u = " + to_string(*u));
    if (result && !(*result == *u))
      throw ContractViolation("solutions of w = " + to_string(w) +
                              " give different distinguished elements");
    result = *u;
  }
  return *result;
}

/// Word-level check that tau stabilizes Phi_J.
inline bool stabilizes_levi(RootAutomorphism const &theta, IndexSet J)
{
  auto phi = phi_subset(*theta.system(), J).all;
  std::vector<RootIndex> img;
  for (RootIndex r : phi)
    img.push_back(theta(r));
  std::sort(img.begin(), img.end());
  return img == phi;
}

/// All w in W^{delta(J)} admitting u in jJ(J, tau) with w delta(u) in
/// jI(I, sigma), each with its solution set and distinguished element.
inline std::vector<TwistedSolution> w_set(IndexSet J, InvolutionPair const &pair,
                                          JOracle const &jI, JOracle const &jJ,
                                          std::uint64_t guard = default_guard)
{
  auto const &rsp = pair.sigma.system();
  detail::require_subset(J, *rsp);
  if (!stabilizes_levi(pair.tau, J))
    throw PreconditionError("tau(Phi_J) != Phi_J for J = " + J.to_string());

  auto const set_J = jJ.elements(rsp, pair.tau, J, guard);
  auto const set_I = jI.elements(rsp, pair.sigma, IndexSet::full(rsp->rank()), guard);
  WeylSet const lookup_I(set_I.begin(), set_I.end());

  std::vector<TwistedSolution> out;
  for (auto const &w : enumerate_min_reps(rsp, pair.delta.on_set(J), Side::right, guard)) {
    TwistedSolution sol;
    for (auto const &u : set_J)
      if (lookup_I.count(multiply(w, apply_aut(pair.delta, u))))
        sol.solutions.push_back(u);
    if (sol.solutions.empty())
      continue;
    sol.w = w;
    sol.K = i_set(J, pair.delta, w);
    sol.distinguished = distinguished_u(J, pair, w, sol.solutions);
    out.push_back(std::move(sol));
  }
  return out;
}

} // namespace weylpieces

#endif // WEYLPIECES_TWISTED_HPP
