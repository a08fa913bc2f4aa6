#ifndef WEYLPIECES_PROPERTIES_HPP
#define WEYLPIECES_PROPERTIES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "oracle.hpp"
#include "parabolic.hpp"
#include "piece_maps.hpp"
#include "pieces.hpp"
#include "rootsys.hpp"
#include "twisted.hpp"
#include "weyl.hpp"

namespace weylpieces::properties
{

struct PropertyResult
{
  std::string name;
  std::string system;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  bool skipped = false;   // hit the guard before finishing
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

/// Collects cases for one property. `check` records a case; the message
/// builder only runs on failure.
class Recorder
{
public:
  Recorder(std::string name, std::string system)
  {
    _r.name = std::move(name);
    _r.system = std::move(system);
  }

  template <class Describe>
  void check(bool ok, Describe &&describe)
  {
    ++_r.cases;
    if (ok)
      return;
    if (_r.failures++ == 0)
      _r.first_failure = describe();
  }

  void fail(std::string const &msg)
  {
    ++_r.cases;
    if (_r.failures++ == 0)
      _r.first_failure = msg;
  }

  void skip() { _r.skipped = true; }
  PropertyResult const &result() const { return _r; }

private:
  PropertyResult _r;
};

using Body = std::function<void(Recorder &)>;

/// Runs `body`; guard errors mark the property skipped, any other library
/// error counts as a failure.
inline PropertyResult run_property(std::string name, RootSystem const &rs, Body const &body)
{
  Recorder rec(std::move(name), rs.name());
  try {
    body(rec);
  } catch (GuardError const &) {
    rec.skip();
  } catch (Error const &e) {
    rec.fail(e.what());
  }
  return rec.result();
}

inline std::string label(IndexSet J, RootAutomorphism const &delta, WeylElement const &w)
{
  std::string d;
  for (int p : delta.simple_permutation())
    d += std::to_string(p + 1);
  return "J=" + J.to_string() + " delta=[" + d + "] w=" + to_string(w);
}

/// Calls f(J, delta) for every J subset of I and every diagram automorphism.
template <class F>
void for_each_config(RootSystemPtr const &rs, F &&f)
{
  auto const deltas = diagram_automorphisms(rs);
  for (auto const &delta : deltas)
    for (IndexSet J : IndexSet::full(rs->rank()).subsets())
      f(J, delta);
}

inline std::vector<std::pair<std::string, Body>> suites(RootSystemPtr const &rs, std::uint64_t guard)
{
  std::vector<std::pair<std::string, Body>> out;
  IndexSet const I = IndexSet::full(rs->rank());

  out.emplace_back("group_order", [=](Recorder &rec) {
    auto const g = enumerate_group(rs, guard);
    rec.check(g.size() == rs->weyl_order(), [&] { return "enumerated " + std::to_string(g.size()); });
    std::set<int> lengths;
    for (auto const &w : g)
      lengths.insert(w.length());
    rec.check(static_cast<std::size_t>(*lengths.rbegin()) == rs->num_positive(),
              [] { return "longest element has wrong length"; });
  });

  out.emplace_back("reduced_word_round_trip", [=](Recorder &rec) {
    for (auto const &w : enumerate_group(rs, guard)) {
      Word word = reduced_word(w);
      rec.check(from_word(rs, word) == w && static_cast<int>(word.size()) == w.length(),
                [&] { return to_string(w); });
    }
  });

  out.emplace_back("inverse_and_product", [=](Recorder &rec) {
    auto const g = enumerate_group(rs, guard);
    for (auto const &w : g) {
      rec.check(multiply(w, inverse(w)).is_identity() && inverse(w).length() == w.length(),
                [&] { return to_string(w); });
      for (int i = 0; i < rs->rank(); ++i)
        rec.check(times_simple(w, i) == multiply(w, simple_reflection(rs, i)),
                  [&] { return to_string(w) + " s" + std::to_string(i + 1); });
    }
  });

  out.emplace_back("diagram_automorphisms_closed", [=](Recorder &rec) {
    auto const ds = diagram_automorphisms(rs);
    for (auto const &a : ds)
      for (auto const &b : ds) {
        auto c = aut_compose(a, b);
        rec.check(std::find(ds.begin(), ds.end(), c) != ds.end(),
                  [] { return "composition left the diagram group"; });
      }
  });

  out.emplace_back("min_reps_oracle", [=](Recorder &rec) {
    for (IndexSet J : I.subsets()) {
      rec.check(enumerate_min_reps(rs, J, Side::right, guard) ==
                    oracle::brute_min_reps(rs, J, oracle::CosetSide::right, guard),
                [&] { return "right J=" + J.to_string(); });
      rec.check(enumerate_min_reps(rs, J, Side::left, guard) ==
                    oracle::brute_min_reps(rs, J, oracle::CosetSide::left, guard),
                [&] { return "left J=" + J.to_string(); });
    }
  });

  out.emplace_back("coset_decomposition", [=](Recorder &rec) {
    auto const g = enumerate_group(rs, guard);
    for (IndexSet J : I.subsets()) {
      std::uint64_t const reps = enumerate_min_reps(rs, J, Side::right, guard).size();
      rec.check(reps * enumerate_parabolic(rs, J, guard).size() == g.size(),
                [&] { return "|W^J| |W_J| != |W| for J=" + J.to_string(); });
      for (auto const &w : g) {
        auto [x, y] = decompose_right(w, J);
        rec.check(multiply(x, y) == w && x.length() + y.length() == w.length() &&
                      is_min_right(x, J) && in_parabolic(y, J),
                  [&] { return "right " + to_string(w) + " J=" + J.to_string(); });
        auto [yl, xl] = decompose_left(w, J);
        rec.check(multiply(yl, xl) == w && xl.length() + yl.length() == w.length() &&
                      is_min_left(xl, J) && in_parabolic(yl, J),
                  [&] { return "left " + to_string(w) + " J=" + J.to_string(); });
      }
    }
  });

  out.emplace_back("i_set_oracle", [=](Recorder &rec) {
    for_each_config(rs, [&](IndexSet J, RootAutomorphism const &d) {
      for (auto const &w : enumerate_min_reps(rs, d.on_set(J), Side::right, guard))
        rec.check(i_set(J, d, w) == oracle::brute_i_set(J, d, w), [&] { return label(J, d, w); });
    });
  });

  out.emplace_back("bedard_round_trip", [=](Recorder &rec) {
    for_each_config(rs, [&](IndexSet J, RootAutomorphism const &d) {
      for (auto const &p : enumerate_pieces(rs, J, d, guard)) {
        auto err = bedard_axiom_violation(J, d, p.sequence);
        rec.check(!err && p.sequence.limit() == p.w &&
                      p.sequence.stable_index <= static_cast<std::size_t>(rs->rank()) + 2 &&
                      p.sequence.stable_set() == p.K,
                  [&] { return label(J, d, p.w) + (err ? ": " + *err : std::string()); });
      }
    });
  });

  out.emplace_back("epsilon_lands_in_min_reps", [=](Recorder &rec) {
    for_each_config(rs, [&](IndexSet J, RootAutomorphism const &d) {
      for (auto const &w : enumerate_min_reps(rs, d.on_set(J), Side::right, guard))
        rec.check(is_min_right(epsilon(J, d, w).v, J), [&] { return label(J, d, w); });
    });
  });

  out.emplace_back("epsilon_involutive", [=](Recorder &rec) {
    for_each_config(rs, [&](IndexSet J, RootAutomorphism const &d) {
      auto const dinv = aut_inverse(d);
      for (auto const &w : enumerate_min_reps(rs, d.on_set(J), Side::right, guard))
        rec.check(epsilon(d.on_set(J), dinv, epsilon(J, d, w).v).v == w,
                  [&] { return label(J, d, w); });
    });
  });

  out.emplace_back("epsilon_oracle", [=](Recorder &rec) {
    for_each_config(rs, [&](IndexSet J, RootAutomorphism const &d) {
      for (auto const &w : enumerate_min_reps(rs, d.on_set(J), Side::right, guard)) {
        WeylElement const v = epsilon(J, d, w).v;
        auto const cert = epsilon_oracle(J, d, w);
        WeylElement const check =
            multiply(inverse(apply_aut(d, cert.witness)), inverse(w), cert.witness);
        rec.check(cert.v == v && check == v && oracle::brute_epsilon(J, d, w) == v,
                  [&] { return label(J, d, w); });
      }
    });
  });

  out.emplace_back("dual_sequence_certified", [=](Recorder &rec) {
    for_each_config(rs, [&](IndexSet J, RootAutomorphism const &d) {
      for (auto const &w : enumerate_min_reps(rs, d.on_set(J), Side::right, guard)) {
        auto err = dual_sequence_violation(J, d, epsilon(J, d, w).dual);
        rec.check(!err, [&] { return label(J, d, w) + ": " + *err; });
      }
    });
  });

  out.emplace_back("classify_range", [=](Recorder &rec) {
    auto const g = enumerate_group(rs, guard);
    for_each_config(rs, [&](IndexSet J, RootAutomorphism const &d) {
      for (auto const &x : g)
        rec.check(is_min_right(classify(J, d, x), d.on_set(J)), [&] { return label(J, d, x); });
    });
  });

  out.emplace_back("classify_fixes_min_reps", [=](Recorder &rec) {
    for_each_config(rs, [&](IndexSet J, RootAutomorphism const &d) {
      for (auto const &w : enumerate_min_reps(rs, d.on_set(J), Side::right, guard))
        rec.check(classify(J, d, w) == w, [&] { return label(J, d, w); });
    });
  });

  out.emplace_back("wp_involutive", [=](Recorder &rec) {
    auto const sigmas = builtin_involutions(rs);
    for_each_config(rs, [&](IndexSet J, RootAutomorphism const &d) {
      for (auto const &s : sigmas) {
        if (wp_precondition_violation(J, d, s))
          continue;
        for (auto const &w : enumerate_min_reps(rs, d.on_set(J), Side::right, guard)) {
          WeylElement const image = wp(J, d, s, w);
          rec.check(is_min_right(image, d.on_set(J)) && wp(J, d, s, image) == w,
                    [&] { return label(J, d, w); });
        }
      }
    });
  });

  out.emplace_back("w_set_oracle", [=](Recorder &rec) {
    for (auto const &pair : builtin_pairs(rs)) {
      auto const set_I = twisted_involutions(rs, pair.sigma, I, guard);
      for (IndexSet J : I.subsets()) {
        if (!stabilizes_levi(pair.tau, J))
          continue;
        std::vector<WeylElement> fast;
        for (auto const &s : w_set(J, pair, JOracle::full(), JOracle::full(), guard))
          fast.push_back(s.w);
        auto const brute = oracle::brute_w_set(J, pair.delta, set_I,
                                               twisted_involutions(rs, pair.tau, J, guard), guard);
        rec.check(fast == brute, [&] { return "J=" + J.to_string(); });
      }
    }
  });

  out.emplace_back("distinguished_element", [=](Recorder &rec) {
    for (auto const &pair : builtin_pairs(rs)) {
      for (IndexSet J : I.subsets()) {
        if (!stabilizes_levi(pair.tau, J))
          continue;
        for (auto const &s : w_set(J, pair, JOracle::full(), JOracle::full(), guard)) {
          auto const phiK = phi_subset(*rs, s.K).positive;
          std::vector<RootIndex> img;
          for (RootIndex r : phiK)
            img.push_back(s.distinguished(pair.tau(r)));
          std::sort(img.begin(), img.end());
          rec.check(img == phiK && in_parabolic(s.distinguished, J),
                    [&] { return "J=" + J.to_string() + " w=" + to_string(s.w); });
        }
      }
    }
  });

  out.emplace_back("solution_stability_scan", [=](Recorder &rec) {
    for (auto const &pair : builtin_pairs(rs))
      for (IndexSet J : I.subsets()) {
        if (!stabilizes_levi(pair.tau, J))
          continue;
        auto const rep = oracle::scan_solution_stability(rs, J, pair.sigma, pair.tau, guard);
        rec.check(rep.counterexamples.empty(), [&] { return "J=" + J.to_string(); });
      }
  });

  out.emplace_back("support_scan", [=](Recorder &rec) {
    for_each_config(rs, [&](IndexSet J, RootAutomorphism const &d) {
      auto const rep = oracle::scan_support_constraint(rs, J, d, guard);
      rec.check(rep.counterexamples.empty(), [&] {
        auto const &c = rep.counterexamples.front();
        return "J=" + J.to_string() + " w=" + to_string(c.w) + " u=" + to_string(c.u);
      });
    });
  });

  if (is_self_product(*rs)) {
    out.emplace_back("doubled_consistency", [=](Recorder &rec) {
      auto const f = product_factor(rs);
      auto const swap = product_swap(rs);
      auto const pair = make_involution_pair(swap, swap);
      auto const fid = identity_automorphism(f);
      int const h = f->rank();
      for (IndexSet J0 : IndexSet::full(h).subsets()) {
        IndexSet const J(J0.bits() | (J0.bits() << h));
        std::vector<std::pair<WeylElement, WeylElement>> got, want;
        for (auto const &s : w_set(J, pair, JOracle::doubled(), JOracle::doubled(), guard))
          got.push_back(product_components(s.w));
        for (auto const &w : enumerate_min_reps(f, J0, Side::right, guard))
          want.emplace_back(w, epsilon(J0, fid, w).v);
        auto less = [](auto const &a, auto const &b) {
          CanonicalLess lt;
          return lt(a.first, b.first) || (a.first == b.first && lt(a.second, b.second));
        };
        std::sort(got.begin(), got.end(), less);
        std::sort(want.begin(), want.end(), less);
        rec.check(got == want, [&] { return "J0=" + J0.to_string(); });
      }
    });
  }

  return out;
}

/// Runs every suite on `rs`. Results come back in a fixed order.
inline std::vector<PropertyResult> run_all(RootSystemPtr const &rs,
                                           std::uint64_t guard = default_guard)
{
  std::vector<PropertyResult> out;
  if (rs->weyl_order() > guard) {
    PropertyResult r;
    r.name = "all";
    r.system = rs->name();
    r.skipped = true;
    out.push_back(r);
    return out;
  }
  for (auto const &[name, body] : suites(rs, guard))
    out.push_back(run_property(name, *rs, body));
  return out;
}

} // namespace weylpieces::properties

#endif // WEYLPIECES_PROPERTIES_HPP
