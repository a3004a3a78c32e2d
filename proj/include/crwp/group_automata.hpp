#pragma once

#include "crwp/automata/ops.hpp"
#include "crwp/groups.hpp"

namespace crwp {

/// Recognizer for { u#v^rev : u, v nonempty words over A_G, u = v in G }.
///
/// Finite groups get a DFA whose states carry the value of u and, after `#`,
/// the value of the part of v read so far (left-multiplied, since v arrives
/// reversed). Free groups get a deterministic PDA that keeps the reduced form
/// of u on its stack and cancels the inverted letters of v^rev against it.
Recognizer group_wp_automaton(const GroupOracle& g);

/// Input alphabet of `group_wp_automaton`: A_G followed by `#`.
Alphabet group_wp_alphabet(const GroupOracle& g);

}  // namespace crwp
