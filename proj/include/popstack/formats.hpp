#pragma once

#include <string>

#include "popstack/automata.hpp"
#include "popstack/poly.hpp"

namespace popstack {

// Text form: header line, accepting line, then one `src sym dst` line per
// transition sorted by (src, sym). Missing transitions of a trimmed automaton
// are omitted.
std::string dfa_to_text(const Dfa& d, int k);

// Graphviz export; parallel edges are merged into one labeled edge.
std::string dfa_to_dot(const Dfa& d);

// Two lines of ascending coefficients: `num: c0 c1 ...` and `den: c0 c1 ...`.
std::string gf_to_text(const RationalFunction& f);

}  // namespace popstack
