#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "epset/dfa.hpp"

namespace epset {

// Text format, one automaton per file, '#' starts a comment:
//
//   base <b>
//   states <n>
//   initial <q>
//   finals <q1> <q2> ...
//   <src> <digit> <dst>      (one line per transition)
//
// Missing transitions are allowed; the parsed automaton is completed with a
// sink. Errors are reported as ParseError carrying the line number.
Dfa parse_dfa(std::istream& in);
Dfa parse_dfa(std::string_view text);
Dfa read_dfa_file(const std::string& path);

// Header followed by every defined transition in (src, digit) order.
void write_dfa(std::ostream& out, const Dfa& a);
std::string to_text(const Dfa& a);

// Graphviz rendering. Final states are doubled circles, states on 0-circuits
// are filled, digit-0 edges are thin and the other digits bold. The initial
// state gets an arrow from an invisible phantom node.
void write_dot(std::ostream& out, const Dfa& a);
std::string to_dot(const Dfa& a);

}  // namespace epset
