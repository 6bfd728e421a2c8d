#pragma once

#include <vector>

#include "popstack/automata.hpp"
#include "popstack/poly.hpp"

namespace popstack {

// Generating function of the number of accepted words by length, computed
// exactly from the linear system F_q = [q accepting] + x * sum m(q,q') F_q'
// via fraction-free (Bareiss) elimination over integer polynomials.
RationalFunction gf_of_dfa(const Dfa& d);

// P_k(x): the generating function of the k-pop-stack-sortable permutations,
// obtained from the sorting-plan automaton as gf(S) / x.
RationalFunction sortable_gf(int k, const PipelineOptions& opts = {});

// First n+1 Taylor coefficients; requires den(0) != 0.
std::vector<BigInt> series(const RationalFunction& f, int n);

// max over denominator roots z of 1/|z|, to absolute error <= 1e-6. The
// dominant root is polished by exact-sign bisection when it is real.
double growth_rate(const RationalFunction& f);

}  // namespace popstack
