#ifndef WEYLPIECES_PIECE_MAPS_HPP
#define WEYLPIECES_PIECE_MAPS_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "parabolic.hpp"
#include "pieces.hpp"
#include "weyl.hpp"

namespace weylpieces
{

/// The sequence (K_n, v_n) attached to a Bedard sequence of (J, delta),
/// together with the running products
///   Q_n = delta^{n-1}(v_0) delta^{n-2}(v_1) ... v_{n-1},  P_n = delta(Q_n).
struct DualSequence
{
  BedardSequence seq;           // (K_n, v_n) in the same stabilized layout
  std::vector<WeylElement> Q;   // Q_0 = e, one entry per stored step
  std::vector<WeylElement> P;
};

struct EpsilonResult
{
  WeylElement v;
  DualSequence dual;
};

/// w, its image v under epsilon and a witness x in W_J with
/// delta(x)^{-1} w^{-1} x = v.
struct EpsilonCertificate
{
  WeylElement w;
  WeylElement v;
  WeylElement witness;
};

/// Checks that `dual` is the element of T(delta(J), delta^{-1}) with limit
/// `v`, both axiomatically and against a freshly built Bedard sequence.
inline std::optional<std::string> dual_sequence_violation(IndexSet J, RootAutomorphism const &delta,
                                                          DualSequence const &dual)
{
  RootAutomorphism const delta_inv = aut_inverse(delta);
  IndexSet const K0 = delta.on_set(J);
  if (auto err = bedard_axiom_violation(K0, delta_inv, dual.seq))
    return "not in T(delta(J), delta^-1): " + *err;
  if (!is_min_right(dual.seq.limit(), delta_inv.on_set(K0)))
    return "limit not in W^J";
  auto rebuilt = bedard_sequence(K0, delta_inv, dual.seq.limit());
  if (rebuilt.stable_index != dual.seq.stable_index || rebuilt.steps != dual.seq.steps)
    return "differs from bedard_sequence(delta(J), delta^-1, v)";
  return std::nullopt;
}

/// epsilon_{J,delta}: W^{delta(J)} -> W^J through the dual sequence.
inline EpsilonResult epsilon(IndexSet J, RootAutomorphism const &delta, WeylElement const &w)
{
  auto const &rsp = w.system();
  auto const &rs = *rsp;
  BedardSequence const bs = bedard_sequence(J, delta, w);

  EpsilonResult res;
  auto &dual = res.dual;

  std::vector<BedardStep> steps;
  std::vector<WeylElement> Q{WeylElement::identity(rsp)};
  std::vector<WeylElement> P{WeylElement::identity(rsp)};
  steps.push_back({delta.on_set(J), inverse(bs.at(0).w)});

  RootAutomorphism delta_n = identity_automorphism(rsp);
  std::size_t const bound = bs.stable_index + rs.rank() + 3;
  std::optional<std::size_t> stable;
  std::size_t checked = 0;
  BedardStep prev = steps.back();
  WeylElement prev_Q = Q.back();

  for (std::size_t n = 1;; ++n) {
    delta_n = aut_compose(delta, delta_n);
    IndexSet Kn = prev.J & delta.on_set(transport(inverse(prev.w), prev.J));
    WeylElement Qn = multiply(apply_aut(delta, prev_Q), prev.w);
    WeylElement Pn = apply_aut(delta, Qn);
    WeylElement vn = multiply(inverse(Pn), apply_aut(delta_n, inverse(bs.at(n).w)), Qn);
    BedardStep cur{Kn, vn};

    if (!stable) {
      if (n > bs.stable_index && cur == prev) {
        stable = n - 1;
      } else {
        if (n > bound)
          throw InternalError("dual sequence did not stabilize");
        steps.push_back(cur);
        Q.push_back(Qn);
        P.push_back(Pn);
      }
    }
    if (stable) {
      // the formula must stay put for a full period of delta
      if (!(cur == steps[*stable]))
        throw ContractViolation("dual sequence left its stable value at step " +
                                std::to_string(n));
      if (++checked >= static_cast<std::size_t>(delta.order()))
        break;
    }
    prev = cur;
    prev_Q = Qn;
  }

  dual.seq.steps = std::move(steps);
  dual.seq.stable_index = *stable;
  dual.Q = std::move(Q);
  dual.P = std::move(P);
  dual.Q.resize(*stable + 1);
  dual.P.resize(*stable + 1);
  res.v = dual.seq.limit();

  if (!is_min_right(res.v, J))
    throw ContractViolation("epsilon(" + to_string(w) + ") = " + to_string(res.v) +
                            " is not in W^J");
  if (auto err = dual_sequence_violation(J, delta, dual))
    throw ContractViolation("dual sequence of " + to_string(w) + ": " + *err);
  return res;
}

/// Scans x in W_J for the elements delta(x)^{-1} w^{-1} x lying in W^J;
/// exactly one must exist.
inline EpsilonCertificate epsilon_oracle(IndexSet J, RootAutomorphism const &delta,
                                         WeylElement const &w)
{
  auto const &rsp = w.system();
  detail::require_diagram(delta, *rsp);
  detail::require_min_right(w, delta.on_set(J), "epsilon_oracle");

  std::optional<EpsilonCertificate> found;
  WeylElement const w_inv = inverse(w);
  for (auto const &x : enumerate_parabolic(rsp, J)) {
    WeylElement cand = multiply(inverse(apply_aut(delta, x)), w_inv, x);
    if (!is_min_right(cand, J))
      continue;
    if (found && !(found->v == cand))
      throw ContractViolation("two elements of W^J of the form delta(x)^-1 w^-1 x for w = " +
                              to_string(w));
    if (!found)
      found = EpsilonCertificate{w, cand, x};
  }
  if (!found)
    throw ContractViolation("no element of W^J of the form delta(x)^-1 w^-1 x for w = " +
                            to_string(w));
  return *found;
}

struct WpOptions
{
  /// Require sigma(Phi_J) = Phi_{delta(J)}, the Levi shadow of
  /// sigma(P_J) = y^{-1}P_{J'} at the word level. Callers that track the
  /// twist y themselves can switch it off.
  bool check_levi = true;
};

/// Returns why (J, delta, sigma) is not an accepted configuration for the
/// involution on piece indices, or nullopt.
inline std::optional<std::string> wp_precondition_violation(IndexSet J,
                                                            RootAutomorphism const &delta,
                                                            RootAutomorphism const &sigma,
                                                            WpOptions opts = {})
{
  auto const &rsp = delta.system();
  if (!sigma.system()->same_as(*rsp))
    return "sigma belongs to a different root system";
  if (!delta.is_diagram())
    return "delta is not a diagram automorphism";
  if (sigma.order() > 2)
    return "sigma is not an involution";
  if (!(aut_compose(sigma, aut_compose(delta, sigma)) == aut_inverse(delta)))
    return "sigma delta sigma != delta^-1";
  if (opts.check_levi) {
    auto src = phi_subset(*rsp, J).all;
    auto dst = phi_subset(*rsp, delta.on_set(J)).all;
    std::vector<RootIndex> img;
    for (RootIndex r : src)
      img.push_back(sigma(r));
    std::sort(img.begin(), img.end());
    if (img != dst)
      return "sigma(Phi_J) != Phi_delta(J)";
  }
  return std::nullopt;
}

/// The involution on W^{delta(J)} induced by the inverse map composed with
/// sigma: wp(w) = classify(J, delta, sigma(w)^{-1}). Involutivity is
/// checked on every call.
inline WeylElement wp(IndexSet J, RootAutomorphism const &delta, RootAutomorphism const &sigma,
                      WeylElement const &w, WpOptions opts = {})
{
  if (auto err = wp_precondition_violation(J, delta, sigma, opts))
    throw PreconditionError("wp: " + *err);
  detail::require_min_right(w, delta.on_set(J), "wp");

  auto step = [&](WeylElement const &z) {
    return classify(J, delta, inverse(apply_aut(sigma, z)));
  };
  WeylElement image = step(w);
  if (!(step(image) == w))
    throw ContractViolation("wp is not involutive at w = " + to_string(w) + " (wp(w) = " +
                            to_string(image) + ")");
  return image;
}

} // namespace weylpieces

#endif // WEYLPIECES_PIECE_MAPS_HPP
