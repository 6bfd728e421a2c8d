#include "popstack/automata.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "popstack/errors.hpp"
#include "popstack/oracle.hpp"

using namespace popstack;

namespace {

bool nfa_accepts(const Nfa& n, const std::vector<Symbol>& word) {
  std::set<State> cur(n.initial.begin(), n.initial.end());
  for (Symbol a : word) {
    std::set<State> next;
    for (State s : cur)
      for (auto [sym, t] : n.edges[s])
        if (sym == a) next.insert(t);
    cur = std::move(next);
  }
  for (State s : cur)
    if (n.accepting[s]) return true;
  return false;
}

template <typename F>
void for_all_words(int alphabet, int max_len, F&& fn) {
  std::vector<Symbol> word;
  auto rec = [&](auto&& self, int left) -> void {
    fn(word);
    if (left == 0) return;
    for (Symbol a = 0; a < static_cast<Symbol>(alphabet); ++a) {
      word.push_back(a);
      self(self, left - 1);
      word.pop_back();
    }
  };
  rec(rec, max_len);
}

Nfa random_nfa(std::mt19937& rng) {
  std::uniform_int_distribution<int> alpha_d(2, 4), states_d(1, 6);
  Nfa n;
  n.alphabet_size = alpha_d(rng);
  int states = states_d(rng);
  n.accepting.resize(states);
  n.edges.resize(states);
  std::uniform_int_distribution<int> coin(0, 3), state_d(0, states - 1);
  n.initial.push_back(state_d(rng));
  for (int s = 0; s < states; ++s) {
    n.accepting[s] = coin(rng) == 0;
    for (Symbol a = 0; a < static_cast<Symbol>(n.alphabet_size); ++a)
      for (int t = 0; t < states; ++t)
        if (coin(rng) == 0) n.edges[s].emplace_back(a, t);
    std::sort(n.edges[s].begin(), n.edges[s].end());
  }
  return n;
}

Dfa random_complete_dfa(std::mt19937& rng) {
  std::uniform_int_distribution<int> alpha_d(2, 4), states_d(1, 7);
  Dfa d;
  d.alphabet_size = alpha_d(rng);
  int states = states_d(rng);
  d.accepting.resize(states);
  d.trans.resize(static_cast<size_t>(states) * d.alphabet_size);
  std::uniform_int_distribution<int> coin(0, 2), state_d(0, states - 1);
  d.initial = state_d(rng);
  for (auto& acc : d.accepting) acc = coin(rng) == 0;
  for (auto& t : d.trans) t = state_d(rng);
  return d;
}

}  // namespace

TEST_CASE("W recognizes boundary-zero words") {
  Dfa w = build_W(3);
  CHECK(w.accepts({0}));
  CHECK(w.accepts({0, 5, 0}));
  CHECK(w.accepts({0, 0}));
  CHECK_FALSE(w.accepts({}));
  CHECK_FALSE(w.accepts({3, 0}));
  CHECK_FALSE(w.accepts({0, 3}));
  Dfa w1 = minimize(build_W(1));
  CHECK(w1.num_states() == 4);
  CHECK(w1.trans.size() == 8);
}

TEST_CASE("R bounds runs without a bar in one row") {
  Dfa r = build_R(2, 2);
  CHECK(r.accepts({0, 3, 3, 0}));
  CHECK_FALSE(r.accepts({0, 3, 3, 3, 0}));
  CHECK(r.accepts({1, 1}));  // row-2 bars everywhere
  CHECK(r.accepts(std::vector<Symbol>(9, 0)));
  CHECK(r.accepts({}));
  CHECK_THROWS_AS(build_R(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_R(2, 3), std::invalid_argument);

  // Row 2 of every 2-sortable plan encoding passes R_2.
  for (int n = 0; n <= 6; ++n)
    for (const Encoding& enc : plans_bruteforce(2, n))
      REQUIRE(r.accepts(enc.symbols));
}

TEST_CASE("factor automata") {
  Segment seg{2, {0, 1, 0}};
  Nfa q = build_factor_nfa(seg);
  CHECK(q.num_states() == 4);
  Dfa d = determinize(q);
  CHECK(d.accepts({0, 0, 1, 0, 0}));
  CHECK(d.accepts({0, 1, 0}));
  CHECK_FALSE(d.accepts({0, 1, 1, 0}));
  CHECK_FALSE(d.accepts({0, 1}));
  Dfa no = complement(minimize(d));
  CHECK(no.accepts({0, 1, 1, 0}));
  CHECK_FALSE(no.accepts({0, 0, 1, 0}));
}

TEST_CASE("subset construction preserves the language") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 60; ++trial) {
    Nfa n = random_nfa(rng);
    Dfa d = determinize(n);
    CHECK(d.complete());
    for_all_words(n.alphabet_size, 5, [&](const std::vector<Symbol>& word) {
      REQUIRE(d.accepts(word) == nfa_accepts(n, word));
    });
  }
}

TEST_CASE("complement, intersection and minimization preserve languages") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Dfa a = random_complete_dfa(rng);
    Dfa b = random_complete_dfa(rng);
    while (b.alphabet_size != a.alphabet_size) b = random_complete_dfa(rng);
    Dfa na = complement(a);
    Dfa m = minimize(a);
    Dfa t = trim(a);
    Dfa both = intersect(a, b);
    CHECK(m.num_states() <= a.num_states());
    for_all_words(a.alphabet_size, 5, [&](const std::vector<Symbol>& word) {
      bool in_a = a.accepts(word);
      REQUIRE(na.accepts(word) == !in_a);
      REQUIRE(m.accepts(word) == in_a);
      REQUIRE(t.accepts(word) == in_a);
      REQUIRE(both.accepts(word) == (in_a && b.accepts(word)));
    });
    for (int len = 0; len <= 6; ++len)
      REQUIRE(count_words(m, len) == count_words(a, len));
  }
}

TEST_CASE("minimization is canonical") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    Dfa a = random_complete_dfa(rng);
    Dfa m = minimize(a);
    CHECK(minimize(m) == m);
    // Relabeling the states must not change the minimized result.
    int n = static_cast<int>(a.num_states());
    std::vector<State> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Dfa shuffled;
    shuffled.alphabet_size = a.alphabet_size;
    shuffled.initial = perm[a.initial];
    shuffled.accepting.resize(n);
    shuffled.trans.resize(a.trans.size());
    for (int s = 0; s < n; ++s) {
      shuffled.accepting[perm[s]] = a.accepting[s];
      for (int c = 0; c < a.alphabet_size; ++c)
        shuffled.trans[static_cast<size_t>(perm[s]) * a.alphabet_size + c] =
            perm[a.next(s, c)];
    }
    REQUIRE(minimize(shuffled) == m);
  }
}

TEST_CASE("complement is an involution up to canonical form") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Dfa a = random_complete_dfa(rng);
    CHECK(minimize(complement(complement(a))) == minimize(a));
  }
  Dfa empty;
  empty.alphabet_size = 2;
  empty.accepting = {0};
  empty.trans = {0, 0};
  Dfa all = complement(empty);
  CHECK(all.accepts({}));
  CHECK(all.accepts({1, 0, 1}));
}

TEST_CASE("intersection identities") {
  Dfa w = build_W(2);
  Dfa all = complement(minimize(intersect(w, complement(w))));
  CHECK(minimize(intersect(w, all)) == minimize(w));
  Dfa none = minimize(intersect(w, complement(w)));
  CHECK(none.num_states() == 1);
  CHECK_FALSE(none.accepting[0]);
  Dfa r = build_R(3, 2);
  CHECK_THROWS_AS(intersect(w, r), std::invalid_argument);

  Dfa wr = intersect(build_W(2), build_R(2, 2));
  CHECK(wr.accepts({0, 3, 3, 0}));
  CHECK_FALSE(wr.accepts({3, 0}));
  CHECK_FALSE(wr.accepts({0, 3, 3, 3, 0}));
}

TEST_CASE("trim removes dead states and keeps counts") {
  Dfa w1 = minimize(build_W(1));
  Dfa t = trim(w1);
  CHECK(t.num_states() == 3);
  CHECK(trim(t) == t);
  for (int len = 0; len <= 8; ++len)
    CHECK(count_words(t, len) == count_words(w1, len));
  CHECK_THROWS_AS(complement(t), std::invalid_argument);
}

TEST_CASE("word counts") {
  Dfa s2 = build_sorting_plan_dfa(2);
  CHECK(count_words(s2, 4) == 6);
  CHECK(count_words(s2, 0) == 0);
  CHECK(count_words(build_W(2), 1) == 1);
  Dfa empty;
  empty.alphabet_size = 2;
  empty.accepting = {0};
  empty.trans = {0, 0};
  CHECK(count_words(empty, 5) == 0);
}

TEST_CASE("sorting plan automata match the paper table sizes") {
  Dfa s1 = build_sorting_plan_dfa(1);
  auto st1 = dfa_stats(s1);
  CHECK(st1.complete_vertices == 4);
  CHECK(st1.complete_edges == 8);

  auto st2 = dfa_stats(build_sorting_plan_dfa(2));
  CHECK(st2.trimmed_vertices == 5);
  CHECK(st2.trimmed_edges == 11);

  auto st3 = dfa_stats(build_sorting_plan_dfa(3));
  CHECK(st3.trimmed_vertices == 12);
  CHECK(st3.trimmed_edges == 34);
}

TEST_CASE("plan automaton membership equals the plan test") {
  for (int k = 1; k <= 3; ++k) {
    Dfa s = build_sorting_plan_dfa(k);
    int max_len = k == 3 ? 7 : 8;
    Encoding enc;
    enc.order = k;
    for (int n = 0; n + 1 <= max_len; ++n) {
      enc.symbols.assign(n + 1, 0);
      uint64_t alpha = uint64_t(1) << k;
      uint64_t total = 1;
      for (int i = 0; i + 1 < n; ++i) total *= alpha;
      for (uint64_t word = 0; word < total; ++word) {
        uint64_t rest = word;
        for (int j = n - 1; j >= 1; --j) {
          enc.symbols[j] = static_cast<Symbol>(rest % alpha);
          rest /= alpha;
        }
        REQUIRE(s.accepts(enc.symbols) == is_sorting_plan(decode(enc, k)));
      }
    }
    // Nonzero boundaries are never plans.
    CHECK_FALSE(s.accepts({1}));
    CHECK_FALSE(s.accepts(std::vector<Symbol>{}));
  }
}

TEST_CASE("fold order does not matter") {
  for (int k = 2; k <= 3; ++k) {
    Dfa reference = build_sorting_plan_dfa(k);
    auto names = pipeline_stage_names(k);
    std::vector<Dfa> factors;
    for (const auto& name : names)
      if (name != "final") factors.push_back(build_pipeline_stage(k, name));
    std::mt19937 rng(k);
    for (int trial = 0; trial < 3; ++trial) {
      std::shuffle(factors.begin(), factors.end(), rng);
      Dfa acc = factors[0];
      for (size_t i = 1; i < factors.size(); ++i)
        acc = minimize(intersect(acc, factors[i]));
      REQUIRE(acc == reference);
    }
  }
}

TEST_CASE("pipeline stages are nameable") {
  auto names = pipeline_stage_names(2);
  CHECK(names.front() == "W");
  CHECK(names[1] == "R2");
  CHECK(names.back() == "final");
  CHECK(build_pipeline_stage(2, "W") == minimize(build_W(2)));
  CHECK(build_pipeline_stage(2, "final") == build_sorting_plan_dfa(2));
  CHECK_THROWS_AS(build_pipeline_stage(2, "nope"), std::invalid_argument);
  CHECK_THROWS_AS(build_pipeline_stage(2, "Q999"), std::invalid_argument);
}

TEST_CASE("state budgets stop runaway products") {
  PipelineOptions opts;
  opts.state_budget = 3;
  CHECK_THROWS_AS(build_sorting_plan_dfa(2, opts), ResourceLimitError);
  CHECK_THROWS_AS(intersect(build_W(2), build_R(2, 2), 2), ResourceLimitError);
}
