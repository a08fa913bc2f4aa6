// Acceptance gate: one PASS/FAIL line per criterion. Every criterion
// requires zero failures; the exit code is nonzero if any line fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <weylpieces/weylpieces.hpp>

using namespace weylpieces;

namespace
{

std::vector<char const *> const suite = {"A1", "A2", "A3", "B2", "B3", "G2", "A1xA1", "A2xA2"};

struct Tally
{
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first;

  void check(bool ok, std::string const &what)
  {
    ++cases;
    if (!ok && failures++ == 0)
      first = what;
  }
};

std::string where(RootSystem const &rs, IndexSet J, RootAutomorphism const &d, WeylElement const &w)
{
  std::string p;
  for (int i : d.simple_permutation())
    p += std::to_string(i + 1);
  return rs.name() + " J=" + J.to_string() + " delta=[" + p + "] w=" + to_string(w);
}

template <class F>
void each_config(F &&f)
{
  for (auto t : suite) {
    auto rs = build_root_system(t);
    for (auto const &d : diagram_automorphisms(rs))
      for (IndexSet J : IndexSet::full(rs->rank()).subsets())
        f(rs, J, d);
  }
}

void bedard_round_trip(Tally &t)
{
  each_config([&](RootSystemPtr const &rs, IndexSet J, RootAutomorphism const &d) {
    for (auto const &w : enumerate_min_reps(rs, d.on_set(J), Side::right)) {
      auto seq = bedard_sequence(J, d, w);
      auto err = bedard_axiom_violation(J, d, seq);
      bool ok = !err && seq.limit() == w &&
                seq.stable_index <= static_cast<std::size_t>(rs->rank()) + 2 &&
                seq.stable_set() == i_set(J, d, w) &&
                seq.stable_set() == oracle::brute_i_set(J, d, w);
      t.check(ok, where(*rs, J, d, w) + (err ? ": " + *err : ""));
    }
  });
}

void epsilon_involutive(Tally &t)
{
  each_config([&](RootSystemPtr const &rs, IndexSet J, RootAutomorphism const &d) {
    auto dinv = aut_inverse(d);
    for (auto const &w : enumerate_min_reps(rs, d.on_set(J), Side::right)) {
      auto v = epsilon(J, d, w).v;
      t.check(is_min_right(v, J) && epsilon(d.on_set(J), dinv, v).v == w, where(*rs, J, d, w));
    }
  });
}

void epsilon_unique(Tally &t)
{
  each_config([&](RootSystemPtr const &rs, IndexSet J, RootAutomorphism const &d) {
    for (auto const &w : enumerate_min_reps(rs, d.on_set(J), Side::right)) {
      // brute_epsilon throws unless exactly one image lies in W^J
      t.check(oracle::brute_epsilon(J, d, w) == epsilon(J, d, w).v, where(*rs, J, d, w));
    }
  });
}

void dual_certified(Tally &t)
{
  each_config([&](RootSystemPtr const &rs, IndexSet J, RootAutomorphism const &d) {
    auto dinv = aut_inverse(d);
    for (auto const &w : enumerate_min_reps(rs, d.on_set(J), Side::right)) {
      auto dual = epsilon(J, d, w).dual;
      auto err = bedard_axiom_violation(d.on_set(J), dinv, dual.seq);
      t.check(!err && !dual_sequence_violation(J, d, dual), where(*rs, J, d, w));
    }
  });
}

void classifier(Tally &t)
{
  for (auto ty : suite) {
    auto rs = build_root_system(ty);
    auto g = enumerate_group(rs);
    for (auto const &d : diagram_automorphisms(rs))
      for (IndexSet J : IndexSet::full(rs->rank()).subsets()) {
        for (auto const &x : g) {
          auto r = classify(J, d, x);
          bool ok = is_min_right(r, d.on_set(J));
          if (is_min_right(x, d.on_set(J)))
            ok = ok && r == x;
          t.check(ok, where(*rs, J, d, x));
        }
      }
  }
}

void wp_involutive(Tally &t, std::uint64_t &accepted)
{
  each_config([&](RootSystemPtr const &rs, IndexSet J, RootAutomorphism const &d) {
    for (auto const &s : builtin_involutions(rs)) {
      if (wp_precondition_violation(J, d, s))
        continue;
      ++accepted;
      for (auto const &w : enumerate_min_reps(rs, d.on_set(J), Side::right)) {
        auto img = wp(J, d, s, w);
        t.check(wp(J, d, s, img) == w, where(*rs, J, d, w));
      }
    }
  });
}

void support_scan(Tally &t)
{
  for (auto ty : {"A1", "A2", "B2", "A1xA1"}) {
    auto rs = build_root_system(ty);
    for (auto const &d : diagram_automorphisms(rs))
      for (IndexSet J : IndexSet::full(rs->rank()).subsets()) {
        auto rep = oracle::scan_support_constraint(rs, J, d);
        for (auto const &c : rep.counterexamples)
          t.check(false, where(*rs, J, d, c.w) + " u=" + to_string(c.u));
        t.check(true, "");
      }
  }
}

void distinguished(Tally &t)
{
  for (auto ty : suite) {
    auto rs = build_root_system(ty);
    for (auto const &pair : builtin_pairs(rs))
      for (IndexSet J : IndexSet::full(rs->rank()).subsets()) {
        if (!stabilizes_levi(pair.tau, J))
          continue;
        auto rep = oracle::scan_solution_stability(rs, J, pair.sigma, pair.tau);
        t.check(rep.counterexamples.empty(), rs->name() + " J=" + J.to_string() + " stability");
        for (auto const &s : w_set(J, pair, JOracle::full(), JOracle::full())) {
          // independent recount of the distinguished element over W_J
          std::vector<WeylElement> found;
          auto phiK = phi_subset(*rs, s.K).positive;
          auto W_K = enumerate_parabolic(rs, s.K);
          for (auto const &u : enumerate_parabolic(rs, J)) {
            bool pos = std::all_of(phiK.begin(), phiK.end(),
                                   [&](RootIndex r) { return rs->is_positive(u(pair.tau(r))); });
            if (!pos)
              continue;
            bool in_coset = std::any_of(s.solutions.begin(), s.solutions.end(), [&](auto const &a) {
              return std::any_of(W_K.begin(), W_K.end(),
                                 [&](auto const &b) { return multiply(b, u) == a; });
            });
            if (in_coset)
              found.push_back(u);
          }
          t.check(found.size() == 1 && found.front() == s.distinguished,
                  rs->name() + " J=" + J.to_string() + " w=" + to_string(s.w));
        }
      }
  }
}

void doubled(Tally &t)
{
  for (auto f : {"A1", "A2"}) {
    auto F = build_root_system(f);
    auto rs = product(*F, *F);
    auto sw = product_swap(rs);
    auto pair = make_involution_pair(sw, sw);
    int const h = F->rank();
    for (IndexSet J0 : IndexSet::full(h).subsets()) {
      IndexSet J(J0.bits() | (J0.bits() << h));
      std::vector<WeylElement> got, want;
      for (auto const &s : w_set(J, pair, JOracle::doubled(), JOracle::doubled()))
        got.push_back(s.w);
      auto reps = enumerate_min_reps(F, J0, Side::right);
      for (auto const &w : reps) {
        auto v = epsilon(J0, identity_automorphism(F), w).v;
        Word word = reduced_word(w);
        for (int letter : reduced_word(v))
          word.push_back(letter + h);
        want.push_back(from_word(rs, word));
      }
      sort_canonical(want);
      t.check(got == want && got.size() == reps.size(), std::string(f) + " J0=" + J0.to_string());
    }
  }
}

void oracle_equivalence(Tally &t)
{
  for (auto ty : suite) {
    auto rs = build_root_system(ty);
    for (IndexSet J : IndexSet::full(rs->rank()).subsets()) {
      t.check(enumerate_min_reps(rs, J, Side::right) ==
                  oracle::brute_min_reps(rs, J, oracle::CosetSide::right),
              rs->name() + " right reps J=" + J.to_string());
      t.check(enumerate_min_reps(rs, J, Side::left) ==
                  oracle::brute_min_reps(rs, J, oracle::CosetSide::left),
              rs->name() + " left reps J=" + J.to_string());
    }
  }
  each_config([&](RootSystemPtr const &rs, IndexSet J, RootAutomorphism const &d) {
    for (auto const &w : enumerate_min_reps(rs, d.on_set(J), Side::right)) {
      t.check(i_set(J, d, w) == oracle::brute_i_set(J, d, w), where(*rs, J, d, w) + " i_set");
      t.check(epsilon(J, d, w).v == oracle::brute_epsilon(J, d, w), where(*rs, J, d, w) + " epsilon");
    }
  });
  for (auto ty : suite) {
    auto rs = build_root_system(ty);
    for (auto const &pair : builtin_pairs(rs)) {
      auto set_I = twisted_involutions(rs, pair.sigma, IndexSet::full(rs->rank()));
      for (IndexSet J : IndexSet::full(rs->rank()).subsets()) {
        if (!stabilizes_levi(pair.tau, J))
          continue;
        std::vector<WeylElement> fast;
        for (auto const &s : w_set(J, pair, JOracle::full(), JOracle::full()))
          fast.push_back(s.w);
        t.check(fast == oracle::brute_w_set(J, pair.delta, set_I,
                                            twisted_involutions(rs, pair.tau, J)),
                rs->name() + " w_set J=" + J.to_string());
      }
    }
  }
}

void counting(Tally &t)
{
  auto a2 = build_root_system("A2");
  auto a3 = build_root_system("A3");
  auto one = IndexSet::from_labels({1}, 2);
  auto one_three = IndexSet::from_labels({1, 3}, 3);
  t.check(enumerate_min_reps(a2, one, Side::right).size() == 3 &&
              a2->weyl_order() / enumerate_parabolic(a2, one).size() == 3,
          "|W^{1}(A2)| != 3");
  t.check(enumerate_min_reps(a3, one_three, Side::right).size() == 6 &&
              a3->weyl_order() / enumerate_parabolic(a3, one_three).size() == 6,
          "|W^{1,3}(A3)| != 6");
  t.check(enumerate_pieces(a2, IndexSet::full(2), identity_automorphism(a2)).size() == 1,
          "A2 with J = I does not have exactly one piece");
}

} // namespace

int main()
{
  struct Criterion
  {
    int id;
    char const *title;
    std::function<std::string(Tally &)> run;
  };

  std::uint64_t wp_accepted = 0;
  std::vector<Criterion> criteria = {
      {1, "Bedard sequences round-trip to their limits",
       [](Tally &t) { bedard_round_trip(t); return std::string(); }},
      {2, "epsilon lands in W^J and is inverted by the reverse map",
       [](Tally &t) { epsilon_involutive(t); return std::string(); }},
      {3, "scan over W_J finds exactly one image, equal to epsilon",
       [](Tally &t) { epsilon_unique(t); return std::string(); }},
      {4, "dual sequences certified by the independent validator",
       [](Tally &t) { dual_certified(t); return std::string(); }},
      {5, "classifier lands in W^delta(J) and fixes it",
       [](Tally &t) { classifier(t); return std::string(); }},
      {6, "involution on piece indices squares to the identity",
       [&](Tally &t) {
         wp_involutive(t, wp_accepted);
         return "accepted configurations " + std::to_string(wp_accepted);
       }},
      {7, "support constraint scan on A1, A2, B2, A1xA1",
       [](Tally &t) { support_scan(t); return std::string(); }},
      {8, "solutions stabilize Phi_K and the distinguished element is unique",
       [](Tally &t) { distinguished(t); return std::string(); }},
      {9, "doubled group gives the graph of epsilon",
       [](Tally &t) { doubled(t); return std::string(); }},
      {10, "fast and brute implementations agree",
       [](Tally &t) { oracle_equivalence(t); return std::string(); }},
      {11, "counting spot checks",
       [](Tally &t) { counting(t); return std::string(); }},
  };

  int failed = 0;
  for (auto const &c : criteria) {
    Tally t;
    std::string extra;
    auto t0 = std::chrono::steady_clock::now();
    try {
      extra = c.run(t);
    } catch (std::exception const &e) {
      t.check(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = t.failures == 0 && t.cases > 0;
    failed += !pass;
    std::printf("[%s] criterion %2d: %s (cases %llu, failures %llu%s%s, %.2fs)%s%s\n",
                pass ? "PASS" : "FAIL", c.id, c.title,
                static_cast<unsigned long long>(t.cases),
                static_cast<unsigned long long>(t.failures), extra.empty() ? "" : ", ",
                extra.c_str(), secs, t.first.empty() ? "" : " first failure: ",
                t.first.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
