#pragma once

#include <iosfwd>
#include <string>

#include "crwp/automata/dfa.hpp"
#include "crwp/automata/gsm.hpp"
#include "crwp/automata/ops.hpp"
#include "crwp/automata/pda.hpp"

namespace crwp {

// Line-oriented text: a header block, then one transition per line,
//   pda:  state , input , pop -> state , push
//   dfa:  state , input -> state
//   gsm:  state , input -> state , output
// with `_` spelling epsilon and the empty word. Transition lines are sorted
// lexicographically so that outputs diff cleanly.

void write_pda(std::ostream& os, const Pda& m);
void write_dfa(std::ostream& os, const Dfa& d);
void write_gsm(std::ostream& os, const Gsm& g);
void write_recognizer(std::ostream& os, const Recognizer& r);

std::string to_text(const Pda& m);
std::string to_text(const Dfa& d);
std::string to_text(const Gsm& g);

}  // namespace crwp
