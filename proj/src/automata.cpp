#include "popstack/automata.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "popstack/errors.hpp"
#include "parallel.hpp"

namespace popstack {

bool Dfa::complete() const {
  for (State t : trans)
    if (t == kNoState) return false;
  return true;
}

bool Dfa::accepts(const std::vector<Symbol>& word) const {
  State s = initial;
  for (Symbol a : word) {
    s = next(s, a);
    if (s == kNoState) return false;
  }
  return accepting[s] != 0;
}

namespace {

void check_deadline(const PipelineOptions& opts) {
  if (opts.deadline && std::chrono::steady_clock::now() > *opts.deadline)
    throw ResourceLimitError("pipeline deadline exceeded");
}

struct VecHash {
  size_t operator()(const std::vector<State>& v) const {
    size_t h = 1469598103934665603ull;
    for (State s : v) {
      h ^= s;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

Dfa canonical_bfs(const Dfa& d) {
  std::vector<State> order;
  std::vector<State> renum(d.num_states(), kNoState);
  order.reserve(d.num_states());
  renum[d.initial] = 0;
  order.push_back(d.initial);
  for (size_t head = 0; head < order.size(); ++head) {
    State s = order[head];
    for (int a = 0; a < d.alphabet_size; ++a) {
      State t = d.next(s, a);
      if (t != kNoState && renum[t] == kNoState) {
        renum[t] = static_cast<State>(order.size());
        order.push_back(t);
      }
    }
  }
  Dfa out;
  out.alphabet_size = d.alphabet_size;
  out.initial = 0;
  out.accepting.resize(order.size());
  out.trans.resize(order.size() * d.alphabet_size);
  for (size_t i = 0; i < order.size(); ++i) {
    State s = order[i];
    out.accepting[i] = d.accepting[s];
    for (int a = 0; a < d.alphabet_size; ++a) {
      State t = d.next(s, a);
      out.trans[i * d.alphabet_size + a] = t == kNoState ? kNoState : renum[t];
    }
  }
  return out;
}

Dfa build_W(int k) {
  if (k < 1) throw std::invalid_argument("order must be >= 1");
  int alpha = 1 << k;
  // 0 start, 1 accepting (last symbol 0), 2 inside a nonzero run, 3 dead.
  Dfa d;
  d.alphabet_size = alpha;
  d.initial = 0;
  d.accepting = {0, 1, 0, 0};
  d.trans.assign(4 * alpha, 0);
  for (int a = 0; a < alpha; ++a) {
    d.trans[0 * alpha + a] = a == 0 ? 1 : 3;
    d.trans[1 * alpha + a] = a == 0 ? 1 : 2;
    d.trans[2 * alpha + a] = a == 0 ? 1 : 2;
    d.trans[3 * alpha + a] = 3;
  }
  return d;
}

Dfa build_R(int k, int i) {
  if (k < 1) throw std::invalid_argument("order must be >= 1");
  if (i < 2 || i > k) throw std::invalid_argument("row must satisfy 2 <= i <= k");
  int alpha = 1 << k;
  // States 0..2 count consecutive symbols without a bar in row i; 3 is dead.
  Dfa d;
  d.alphabet_size = alpha;
  d.initial = 0;
  d.accepting = {1, 1, 1, 0};
  d.trans.assign(4 * alpha, 0);
  for (int a = 0; a < alpha; ++a) {
    bool gap = (a >> (k - i)) & 1;
    for (State s = 0; s < 3; ++s)
      d.trans[s * alpha + a] = gap ? (s == 2 ? 3 : s + 1) : 0;
    d.trans[3 * alpha + a] = 3;
  }
  return d;
}

Nfa build_factor_nfa(const SegmentPattern& pat) {
  if (pat.width() == 0) throw std::invalid_argument("empty pattern");
  int w = pat.width();
  int alpha = 1 << pat.order;
  Nfa n;
  n.alphabet_size = alpha;
  n.initial = {0};
  n.accepting.assign(w + 1, 0);
  n.accepting[w] = 1;
  n.edges.resize(w + 1);
  for (Symbol a = 0; a < static_cast<Symbol>(alpha); ++a) {
    n.edges[0].emplace_back(a, 0);
    if (pat.matches(a, 0)) n.edges[0].emplace_back(a, 1);
  }
  for (int j = 1; j < w; ++j)
    for (Symbol a = 0; a < static_cast<Symbol>(alpha); ++a)
      if (pat.matches(a, j)) n.edges[j].emplace_back(a, j + 1);
  for (Symbol a = 0; a < static_cast<Symbol>(alpha); ++a)
    n.edges[w].emplace_back(a, w);
  return n;
}

Nfa build_factor_nfa(const Segment& seg) {
  return build_factor_nfa(SegmentPattern::from_segment(seg));
}

Dfa determinize(const Nfa& n, size_t state_budget) {
  Dfa d;
  d.alphabet_size = n.alphabet_size;
  d.initial = 0;
  std::unordered_map<std::vector<State>, State, VecHash> ids;
  std::vector<std::vector<State>> subsets;
  auto intern = [&](std::vector<State> subset) -> State {
    auto it = ids.find(subset);
    if (it != ids.end()) return it->second;
    State id = static_cast<State>(subsets.size());
    if (subsets.size() >= state_budget)
      throw ResourceLimitError("subset construction exceeded the state budget");
    ids.emplace(subset, id);
    subsets.push_back(std::move(subset));
    bool acc = false;
    for (State s : subsets.back()) acc |= n.accepting[s] != 0;
    d.accepting.push_back(acc);
    return id;
  };
  std::vector<State> init(n.initial);
  std::sort(init.begin(), init.end());
  init.erase(std::unique(init.begin(), init.end()), init.end());
  intern(std::move(init));
  for (size_t head = 0; head < subsets.size(); ++head) {
    std::vector<std::vector<State>> images(n.alphabet_size);
    for (State s : subsets[head])
      for (auto [a, t] : n.edges[s]) images[a].push_back(t);
    for (int a = 0; a < n.alphabet_size; ++a) {
      auto& img = images[a];
      std::sort(img.begin(), img.end());
      img.erase(std::unique(img.begin(), img.end()), img.end());
      d.trans.push_back(intern(std::move(img)));
    }
  }
  return d;
}

Dfa complement(const Dfa& d) {
  if (!d.complete())
    throw std::invalid_argument("complement requires a complete automaton");
  Dfa out = d;
  for (auto& acc : out.accepting) acc = acc ? 0 : 1;
  return out;
}

Dfa intersect(const Dfa& a, const Dfa& b, size_t state_budget) {
  if (a.alphabet_size != b.alphabet_size)
    throw std::invalid_argument("alphabet sizes differ");
  if (!a.complete() || !b.complete())
    throw std::invalid_argument("intersect requires complete automata");
  Dfa d;
  d.alphabet_size = a.alphabet_size;
  d.initial = 0;
  std::unordered_map<uint64_t, State> ids;
  std::vector<uint64_t> pairs;
  auto intern = [&](State sa, State sb) -> State {
    uint64_t key = (static_cast<uint64_t>(sa) << 32) | sb;
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    State id = static_cast<State>(pairs.size());
    if (pairs.size() >= state_budget)
      throw ResourceLimitError("product construction exceeded the state budget");
    ids.emplace(key, id);
    pairs.push_back(key);
    d.accepting.push_back(a.accepting[sa] && b.accepting[sb]);
    return id;
  };
  intern(a.initial, b.initial);
  for (size_t head = 0; head < pairs.size(); ++head) {
    State sa = static_cast<State>(pairs[head] >> 32);
    State sb = static_cast<State>(pairs[head] & 0xffffffffu);
    for (int c = 0; c < d.alphabet_size; ++c)
      d.trans.push_back(intern(a.next(sa, c), b.next(sb, c)));
  }
  return d;
}

namespace {

// Hopcroft partition refinement on a complete DFA with only reachable states.
Dfa hopcroft(const Dfa& d) {
  const int n = static_cast<int>(d.num_states());
  const int alpha = d.alphabet_size;

  // Inverse transitions as one CSR indexed by symbol * n + target.
  std::vector<uint32_t> off(static_cast<size_t>(alpha) * n + 1, 0);
  for (int s = 0; s < n; ++s)
    for (int a = 0; a < alpha; ++a)
      ++off[static_cast<size_t>(a) * n + d.next(s, a) + 1];
  for (size_t i = 1; i < off.size(); ++i) off[i] += off[i - 1];
  std::vector<uint32_t> pre(static_cast<size_t>(alpha) * n);
  {
    std::vector<uint32_t> cursor(off.begin(), off.end() - 1);
    for (int s = 0; s < n; ++s)
      for (int a = 0; a < alpha; ++a)
        pre[cursor[static_cast<size_t>(a) * n + d.next(s, a)]++] = s;
  }

  std::vector<State> elems(n), pos(n);
  std::vector<int> block_of(n);
  std::vector<int> first, past;
  {
    int acc = 0;
    for (int s = 0; s < n; ++s) acc += d.accepting[s] ? 1 : 0;
    int ia = 0, ir = acc;
    for (int s = 0; s < n; ++s) {
      int p = d.accepting[s] ? ia++ : ir++;
      elems[p] = s;
      pos[s] = p;
      block_of[s] = d.accepting[s] ? 0 : 1;
    }
    if (acc == 0 || acc == n) {
      for (int s = 0; s < n; ++s) block_of[s] = 0;
      first = {0};
      past = {n};
    } else {
      first = {0, acc};
      past = {acc, n};
    }
  }

  std::vector<std::pair<int, int>> work;
  std::vector<uint8_t> in_work(first.size() * alpha, 0);
  auto push_work = [&](int b, int a) {
    in_work[static_cast<size_t>(b) * alpha + a] = 1;
    work.emplace_back(b, a);
  };
  if (first.size() == 2) {
    int smaller = (past[0] - first[0] <= past[1] - first[1]) ? 0 : 1;
    for (int a = 0; a < alpha; ++a) push_work(smaller, a);
  }

  std::vector<uint32_t> marked(first.size(), 0);
  std::vector<int> touched;
  std::vector<uint32_t> sources;

  while (!work.empty()) {
    auto [blk, c] = work.back();
    work.pop_back();
    in_work[static_cast<size_t>(blk) * alpha + c] = 0;

    sources.clear();
    for (int idx = first[blk]; idx < past[blk]; ++idx) {
      uint32_t t = elems[idx];
      for (uint32_t j = off[static_cast<size_t>(c) * n + t];
           j < off[static_cast<size_t>(c) * n + t + 1]; ++j)
        sources.push_back(pre[j]);
    }
    touched.clear();
    for (uint32_t s : sources) {
      int b = block_of[s];
      if (marked[b] == 0) touched.push_back(b);
      uint32_t dest = first[b] + marked[b]++;
      uint32_t p = pos[s];
      std::swap(elems[p], elems[dest]);
      pos[elems[p]] = p;
      pos[elems[dest]] = dest;
    }
    for (int b : touched) {
      int size_b = past[b] - first[b];
      int size_marked = static_cast<int>(marked[b]);
      if (size_marked == size_b) {
        marked[b] = 0;
        continue;
      }
      // Marked part becomes a new block; the rest keeps id b.
      int nb = static_cast<int>(first.size());
      int mid = first[b] + size_marked;
      first.push_back(first[b]);
      past.push_back(mid);
      first[b] = mid;
      marked[b] = 0;
      marked.push_back(0);
      for (int idx = first[nb]; idx < past[nb]; ++idx) block_of[elems[idx]] = nb;
      in_work.resize(first.size() * static_cast<size_t>(alpha), 0);
      for (int a = 0; a < alpha; ++a) {
        if (in_work[static_cast<size_t>(b) * alpha + a]) {
          push_work(nb, a);
        } else {
          int size_nb = past[nb] - first[nb];
          push_work(past[b] - first[b] <= size_nb ? b : nb, a);
        }
      }
    }
  }

  Dfa out;
  out.alphabet_size = alpha;
  out.initial = static_cast<State>(block_of[d.initial]);
  size_t blocks = first.size();
  out.accepting.resize(blocks);
  out.trans.resize(blocks * alpha);
  for (size_t b = 0; b < blocks; ++b) {
    State rep = elems[first[b]];
    out.accepting[b] = d.accepting[rep];
    for (int a = 0; a < alpha; ++a)
      out.trans[b * alpha + a] = static_cast<State>(block_of[d.next(rep, a)]);
  }
  return out;
}

}  // namespace

Dfa minimize(const Dfa& d) {
  if (!d.complete())
    throw std::invalid_argument("minimize requires a complete automaton");
  return canonical_bfs(hopcroft(canonical_bfs(d)));
}

Dfa trim(const Dfa& d) {
  size_t n = d.num_states();
  std::vector<uint8_t> reach(n, 0);
  std::deque<State> queue;
  reach[d.initial] = 1;
  queue.push_back(d.initial);
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    for (int a = 0; a < d.alphabet_size; ++a) {
      State t = d.next(s, a);
      if (t != kNoState && !reach[t]) {
        reach[t] = 1;
        queue.push_back(t);
      }
    }
  }
  std::vector<std::vector<State>> rev(n);
  for (State s = 0; s < n; ++s)
    for (int a = 0; a < d.alphabet_size; ++a) {
      State t = d.next(s, a);
      if (t != kNoState) rev[t].push_back(s);
    }
  std::vector<uint8_t> live(n, 0);
  for (State s = 0; s < n; ++s)
    if (d.accepting[s] && reach[s]) {
      live[s] = 1;
      queue.push_back(s);
    }
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    for (State p : rev[s])
      if (reach[p] && !live[p]) {
        live[p] = 1;
        queue.push_back(p);
      }
  }
  if (!live[d.initial]) {
    Dfa empty;
    empty.alphabet_size = d.alphabet_size;
    empty.initial = 0;
    empty.accepting = {0};
    empty.trans.assign(d.alphabet_size, kNoState);
    return empty;
  }
  Dfa partial = d;
  for (State s = 0; s < n; ++s)
    for (int a = 0; a < d.alphabet_size; ++a) {
      State& t = partial.trans[static_cast<size_t>(s) * d.alphabet_size + a];
      if (!live[s] || (t != kNoState && !live[t])) t = kNoState;
    }
  return canonical_bfs(partial);
}

BigInt count_words(const Dfa& d, int len) {
  if (len < 0) throw std::invalid_argument("length must be >= 0");
  std::vector<BigInt> v(d.num_states());
  v[d.initial] = 1;
  for (int step = 0; step < len; ++step) {
    std::vector<BigInt> next(d.num_states());
    for (State s = 0; s < d.num_states(); ++s) {
      if (v[s] == 0) continue;
      for (int a = 0; a < d.alphabet_size; ++a) {
        State t = d.next(s, a);
        if (t != kNoState) next[t] += v[s];
      }
    }
    v = std::move(next);
  }
  BigInt total = 0;
  for (State s = 0; s < d.num_states(); ++s)
    if (d.accepting[s]) total += v[s];
  return total;
}

std::vector<std::vector<Symbol>> words_of_length(const Dfa& d, int len) {
  std::vector<std::vector<Symbol>> out;
  std::vector<Symbol> word;
  auto rec = [&](auto&& self, State s, int left) -> void {
    if (left == 0) {
      if (d.accepting[s]) out.push_back(word);
      return;
    }
    for (Symbol a = 0; a < static_cast<Symbol>(d.alphabet_size); ++a) {
      State t = d.next(s, a);
      if (t == kNoState) continue;
      word.push_back(a);
      self(self, t, left - 1);
      word.pop_back();
    }
  };
  rec(rec, d.initial, len);
  return out;
}

namespace {

std::vector<Dfa> pipeline_factors(int k, const PipelineOptions& opts) {
  std::vector<Dfa> factors;
  factors.push_back(minimize(build_W(k)));
  for (int i = 2; i <= k; ++i) factors.push_back(minimize(build_R(k, i)));
  check_deadline(opts);
  auto patterns = forbidden_segment_patterns(k);
  check_deadline(opts);
  size_t base = factors.size();
  factors.resize(base + patterns.size());
  detail::parallel_for(patterns.size(), opts.workers, [&](size_t i) {
    check_deadline(opts);
    Dfa q = determinize(build_factor_nfa(patterns[i]), opts.state_budget);
    factors[base + i] = complement(minimize(q));
  });
  return factors;
}

Dfa fold_factors(std::vector<Dfa> level, const PipelineOptions& opts) {
  while (level.size() > 1) {
    size_t pairs = level.size() / 2;
    std::vector<Dfa> next(pairs + level.size() % 2);
    detail::parallel_for(pairs, opts.workers, [&](size_t i) {
      check_deadline(opts);
      next[i] = minimize(intersect(level[2 * i], level[2 * i + 1], opts.state_budget));
    });
    if (level.size() % 2) next.back() = std::move(level.back());
    level = std::move(next);
  }
  return std::move(level.front());
}

}  // namespace

Dfa build_sorting_plan_dfa(int k, const PipelineOptions& opts) {
  if (k < 1) throw std::invalid_argument("order must be >= 1");
  return fold_factors(pipeline_factors(k, opts), opts);
}

std::vector<std::string> pipeline_stage_names(int k) {
  std::vector<std::string> names{"W"};
  for (int i = 2; i <= k; ++i) names.push_back("R" + std::to_string(i));
  size_t groups = forbidden_segment_patterns(k).size();
  for (size_t i = 0; i < groups; ++i) names.push_back("Q" + std::to_string(i));
  names.push_back("final");
  return names;
}

Dfa build_pipeline_stage(int k, const std::string& stage,
                         const PipelineOptions& opts) {
  if (k < 1) throw std::invalid_argument("order must be >= 1");
  if (stage == "final" || stage.empty()) return build_sorting_plan_dfa(k, opts);
  if (stage == "W") return minimize(build_W(k));
  if (stage.size() > 1 && stage[0] == 'R') {
    int i = std::stoi(stage.substr(1));
    return minimize(build_R(k, i));
  }
  if (stage.size() > 1 && stage[0] == 'Q') {
    size_t i = std::stoul(stage.substr(1));
    auto patterns = forbidden_segment_patterns(k);
    if (i >= patterns.size())
      throw std::invalid_argument("no such factor group: " + stage);
    Dfa q = determinize(build_factor_nfa(patterns[i]), opts.state_budget);
    return complement(minimize(q));
  }
  throw std::invalid_argument("unknown stage: " + stage);
}

DfaStats dfa_stats(const Dfa& d) {
  DfaStats stats;
  stats.complete_vertices = d.num_states();
  stats.complete_edges = d.num_states() * d.alphabet_size;
  Dfa t = trim(d);
  stats.trimmed_vertices = t.num_states();
  stats.trimmed_edges = 0;
  for (State s : t.trans)
    if (s != kNoState) ++stats.trimmed_edges;
  return stats;
}

}  // namespace popstack
