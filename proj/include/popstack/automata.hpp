#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "popstack/bigint.hpp"
#include "popstack/forbidden.hpp"
#include "popstack/plans.hpp"

namespace popstack {

using State = uint32_t;
inline constexpr State kNoState = std::numeric_limits<State>::max();
inline constexpr size_t kNoBudget = std::numeric_limits<size_t>::max();

struct Nfa {
  int alphabet_size = 0;
  std::vector<State> initial;
  std::vector<uint8_t> accepting;
  // Outgoing edges per state, sorted by symbol.
  std::vector<std::vector<std::pair<Symbol, State>>> edges;

  size_t num_states() const { return accepting.size(); }
};

// Complete unless produced by trim(); missing transitions are kNoState.
// Canonical numbering: breadth-first discovery from the initial state with
// symbols taken in increasing order, so equal minimized automata compare
// equal structurally.
struct Dfa {
  int alphabet_size = 0;
  State initial = 0;
  std::vector<State> trans;  // num_states * alphabet_size
  std::vector<uint8_t> accepting;

  size_t num_states() const { return accepting.size(); }
  State next(State s, Symbol a) const {
    return trans[static_cast<size_t>(s) * alphabet_size + a];
  }
  bool complete() const;
  bool accepts(const std::vector<Symbol>& word) const;

  bool operator==(const Dfa&) const = default;
};

Dfa build_W(int k);
Dfa build_R(int k, int i);

Nfa build_factor_nfa(const SegmentPattern& pat);
Nfa build_factor_nfa(const Segment& seg);

Dfa determinize(const Nfa& n, size_t state_budget = kNoBudget);
Dfa complement(const Dfa& d);
Dfa intersect(const Dfa& a, const Dfa& b, size_t state_budget = kNoBudget);
Dfa minimize(const Dfa& d);
Dfa trim(const Dfa& d);

// Renumber states in BFS order from the initial state; drops unreachable ones.
Dfa canonical_bfs(const Dfa& d);

BigInt count_words(const Dfa& d, int len);
std::vector<std::vector<Symbol>> words_of_length(const Dfa& d, int len);

struct PipelineOptions {
  size_t state_budget = 5'000'000;
  int workers = 0;  // 0 = all hardware threads
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

// The minimized DFA recognizing exactly the encodings of sorting plans of
// order k: W and R_2..R_k intersected with the complements of the factor
// automata of the bounded forbidden segment groups, folded pairwise with
// intermediate minimization.
Dfa build_sorting_plan_dfa(int k, const PipelineOptions& opts = {});

// Intermediate pipeline stages by name: "W", "R2".."Rk", "Q0".."Qm" (the
// complemented factor automata) and "final".
std::vector<std::string> pipeline_stage_names(int k);
Dfa build_pipeline_stage(int k, const std::string& stage,
                         const PipelineOptions& opts = {});

struct DfaStats {
  size_t complete_vertices = 0;
  size_t complete_edges = 0;
  size_t trimmed_vertices = 0;
  size_t trimmed_edges = 0;
};
DfaStats dfa_stats(const Dfa& d);

}  // namespace popstack
