#ifndef TRACESYNTH_DOT_HPP
#define TRACESYNTH_DOT_HPP

#include <string>

#include "tracesynth/alphabet.hpp"
#include "tracesynth/automaton.hpp"

namespace tracesynth {

/// Renders the automaton as a DOT digraph. The initial state is marked with
/// an entry arrow, finals are double-circled, and nodes and edges are emitted
/// in a fixed order so equal inputs yield byte-identical output.
std::string export_dot(const Automaton& a, const IndependenceAlphabet& alphabet,
                       const std::string& graph_name = "automaton");

} // namespace tracesynth

#endif
