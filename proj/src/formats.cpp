#include "popstack/formats.hpp"

#include <map>
#include <sstream>

namespace popstack {

std::string dfa_to_text(const Dfa& d, int k) {
  std::ostringstream out;
  out << "dfa k=" << k << " alphabet=" << d.alphabet_size
      << " states=" << d.num_states() << " initial=" << d.initial << "\n";
  out << "accepting:";
  for (State s = 0; s < d.num_states(); ++s)
    if (d.accepting[s]) out << " " << s;
  out << "\n";
  for (State s = 0; s < d.num_states(); ++s)
    for (int a = 0; a < d.alphabet_size; ++a) {
      State t = d.next(s, a);
      if (t != kNoState) out << s << " " << a << " " << t << "\n";
    }
  return out.str();
}

std::string dfa_to_dot(const Dfa& d) {
  std::ostringstream out;
  out << "digraph dfa {\n  rankdir=LR;\n  node [shape=circle];\n";
  out << "  __start [shape=point];\n  __start -> " << d.initial << ";\n";
  for (State s = 0; s < d.num_states(); ++s)
    if (d.accepting[s]) out << "  " << s << " [shape=doublecircle];\n";
  for (State s = 0; s < d.num_states(); ++s) {
    std::map<State, std::string> merged;
    for (int a = 0; a < d.alphabet_size; ++a) {
      State t = d.next(s, a);
      if (t == kNoState) continue;
      auto& label = merged[t];
      if (!label.empty()) label += ",";
      label += std::to_string(a);
    }
    for (const auto& [t, label] : merged)
      out << "  " << s << " -> " << t << " [label=\"" << label << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

static void append_coeffs(std::ostringstream& out, const Polynomial& p) {
  if (p.is_zero()) {
    out << " 0";
    return;
  }
  for (const BigInt& c : p.coeffs()) out << " " << c.str();
}

std::string gf_to_text(const RationalFunction& f) {
  std::ostringstream out;
  out << "num:";
  append_coeffs(out, f.num());
  out << "\nden:";
  append_coeffs(out, f.den());
  out << "\n";
  return out.str();
}

}  // namespace popstack
