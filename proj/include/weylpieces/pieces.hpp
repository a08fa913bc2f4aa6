#ifndef WEYLPIECES_PIECES_HPP
#define WEYLPIECES_PIECES_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "index_set.hpp"
#include "parabolic.hpp"
#include "rootsys.hpp"
#include "weyl.hpp"

namespace weylpieces
{

struct BedardStep
{
  IndexSet J;
  WeylElement w;

  bool operator==(BedardStep const &) const = default;
};

/// A stabilized sequence (J_n, w_n)_{n >= 0}. Only steps 0..stable_index
/// are stored; the sequence is constant from stable_index on.
struct BedardSequence
{
  std::vector<BedardStep> steps;
  std::size_t stable_index = 0;

  BedardStep const &at(std::size_t n) const
  { return steps[std::min(n, stable_index)]; }

  WeylElement const &limit() const { return steps[stable_index].w; }
  IndexSet stable_set() const { return steps[stable_index].J; }
};

/// Index record of one G-stable piece.
struct PieceDescriptor
{
  IndexSet J;
  WeylElement w;
  IndexSet K;
  BedardSequence sequence;
};

namespace detail
{

inline void require_diagram(RootAutomorphism const &delta, RootSystem const &rs)
{
  if (!delta.system()->same_as(rs))
    throw MismatchError("automorphism belongs to a different root system");
  if (!delta.is_diagram())
    throw PreconditionError("delta must be a diagram automorphism");
}

inline void require_subset(IndexSet J, RootSystem const &rs)
{
  if (!J.subset_of(IndexSet::full(rs.rank())))
    throw PreconditionError("index set " + J.to_string() + " not contained in I");
}

inline void require_min_right(WeylElement const &w, IndexSet K, char const *what)
{
  if (!is_min_right(w, K))
    throw PreconditionError(std::string(what) + ": " + to_string(w) + " is not in W^" +
                            K.to_string());
}

/// J ∩ delta^{-1}(w^{-1} J), the recursion shared by T(J, delta) and the
/// piece classifier.
inline IndexSet shrink(IndexSet J, RootAutomorphism const &delta, WeylElement const &w)
{ return J & delta.preimage(transport(inverse(w), J)); }

} // namespace detail

/// I(J, w, delta): the largest K ⊆ J with w delta(K) = K, found by pruning
/// indices whose image under w delta is not a simple root in K.
inline IndexSet i_set(IndexSet J, RootAutomorphism const &delta, WeylElement const &w)
{
  auto const &rs = *w.system();
  detail::require_diagram(delta, rs);
  detail::require_subset(J, rs);
  detail::require_min_right(w, delta.on_set(J), "i_set");

  IndexSet K = J;
  for (bool changed = true; changed;) {
    changed = false;
    for (int j : K.positions()) {
      int img = rs.simple_position(w(rs.simple(delta.on_index(j))));
      if (img < 0 || !K.contains(img)) {
        K.erase(j);
        changed = true;
      }
    }
  }
  return K;
}

/// Checks the axioms of T(J, delta) on a stabilized sequence. Returns a
/// description of the first violated axiom, or nullopt.
///
/// The first clause of the coset axiom (w_n in ^{J_n}W^{delta(J_n)}) is
/// also required at n = 0, which is what makes the limit map injective.
inline std::optional<std::string> bedard_axiom_violation(IndexSet J, RootAutomorphism const &delta,
                                                         BedardSequence const &seq)
{
  if (seq.steps.empty() || seq.stable_index >= seq.steps.size())
    return "malformed sequence";
  if (seq.steps[0].J != J)
    return "J_0 != J";

  for (std::size_t n = 0; n <= seq.stable_index + 1; ++n) {
    auto const &cur = seq.at(n);
    if (!is_min_double(cur.w, cur.J, delta.on_set(cur.J)))
      return "w_" + std::to_string(n) + " not in ^{J_n}W^{delta(J_n)}";
    if (n == 0)
      continue;
    auto const &prev = seq.at(n - 1);
    if (cur.J != detail::shrink(prev.J, delta, prev.w))
      return "J_" + std::to_string(n) + " violates the J recursion";
    if (!in_parabolic(multiply(cur.w, inverse(prev.w)), prev.J))
      return "w_" + std::to_string(n) + " not in W_{J_{n-1}} w_{n-1}";
  }
  return std::nullopt;
}

/// The unique element of T(J, delta) whose limit is w.
inline BedardSequence bedard_sequence(IndexSet J, RootAutomorphism const &delta,
                                      WeylElement const &w)
{
  auto const &rs = *w.system();
  detail::require_diagram(delta, rs);
  detail::require_subset(J, rs);
  detail::require_min_right(w, delta.on_set(J), "bedard_sequence");

  BedardSequence seq;
  seq.steps.push_back({J, min_left_coset(w, J)});
  std::size_t const bound = static_cast<std::size_t>(rs.rank()) + 2;

  while (true) {
    auto const &last = seq.steps.back();
    IndexSet next = detail::shrink(last.J, delta, last.w);
    if (next == last.J)
      break;
    if (seq.steps.size() > bound)
      throw InternalError("Bedard sequence did not stabilize within |I|+2 steps");
    seq.steps.push_back({next, min_left_coset(w, next)});
  }
  seq.stable_index = seq.steps.size() - 1;

  if (!(seq.limit() == w))
    throw ContractViolation("Bedard sequence limit " + to_string(seq.limit()) + " differs from " +
                            to_string(w));
  return seq;
}

/// One descriptor per w in W^{delta(J)}, in canonical order of w.
inline std::vector<PieceDescriptor> enumerate_pieces(RootSystemPtr const &rs, IndexSet J,
                                                     RootAutomorphism const &delta,
                                                     std::uint64_t guard = default_guard)
{
  detail::require_diagram(delta, *rs);
  detail::require_subset(J, *rs);

  std::vector<PieceDescriptor> out;
  for (auto &w : enumerate_min_reps(rs, delta.on_set(J), Side::right, guard)) {
    PieceDescriptor d{J, w, i_set(J, delta, w), bedard_sequence(J, delta, w)};
    if (d.K != d.sequence.stable_set())
      throw ContractViolation("stable J_m " + d.sequence.stable_set().to_string() +
                              " differs from I(J,w,delta) " + d.K.to_string());
    out.push_back(std::move(d));
  }
  return out;
}

struct ClassifyStep
{
  IndexSet J;
  WeylElement w;
  WeylElement u;
};

struct ClassifyTrace
{
  WeylElement a;  // x = a delta(b)
  WeylElement b;
  std::vector<ClassifyStep> steps;
  WeylElement result;
};

/// Runs the (J_n, w_n, u_n) iteration: x = a delta(b) with a in
/// W^{delta(J)}, b in W_J; w_0 = min(W_J a), u_0 = b a w_0^{-1}; then
/// u_{n-1} w_{n-1} = w'_n delta(u'_n), w_n = min(W_{J_n} w'_n),
/// u_n = u'_n w'_n w_n^{-1}, until (J_n, w_n) repeats.
inline ClassifyTrace classify_trace(IndexSet J, RootAutomorphism const &delta,
                                    WeylElement const &x)
{
  auto const &rs = *x.system();
  detail::require_diagram(delta, rs);
  detail::require_subset(J, rs);

  RootAutomorphism const delta_inv = aut_inverse(delta);

  ClassifyTrace tr;
  auto [a, c] = decompose_right(x, delta.on_set(J));
  tr.a = a;
  tr.b = apply_aut(delta_inv, c);

  WeylElement w0 = min_left_coset(a, J);
  tr.steps.push_back({J, w0, multiply(tr.b, a, inverse(w0))});

  std::size_t const bound = 2 * static_cast<std::size_t>(x.length()) + rs.rank() + 2;
  while (true) {
    ClassifyStep const prev = tr.steps.back();
    IndexSet Jn = detail::shrink(prev.J, delta, prev.w);
    auto [wp, cp] = decompose_right(multiply(prev.u, prev.w), delta.on_set(Jn));
    WeylElement up = apply_aut(delta_inv, cp);
    WeylElement wn = min_left_coset(wp, Jn);
    WeylElement un = multiply(up, wp, inverse(wn));

    if (Jn == prev.J && wn == prev.w)
      break;
    if (tr.steps.size() > bound)
      throw InternalError("classifier did not stabilize within 2 l(x) + |I| + 2 steps");
    tr.steps.push_back({Jn, wn, un});
  }
  tr.result = tr.steps.back().w;

  if (!is_min_right(tr.result, delta.on_set(J)))
    throw ContractViolation("classifier result " + to_string(tr.result) + " not in W^" +
                            delta.on_set(J).to_string());
  return tr;
}

/// The w in W^{delta(J)} whose piece contains the orbit attached to x.
inline WeylElement classify(IndexSet J, RootAutomorphism const &delta, WeylElement const &x)
{ return classify_trace(J, delta, x).result; }

} // namespace weylpieces

#endif // WEYLPIECES_PIECES_HPP
