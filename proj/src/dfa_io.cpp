#include "epset/dfa_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "epset/errors.hpp"
#include "epset/structure.hpp"

namespace epset {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t to_number(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  return v;
}

}  // namespace

Dfa parse_dfa(std::istream& in) {
  std::optional<std::uint64_t> base, states, initial;
  std::vector<std::pair<std::size_t, std::uint64_t>> finals;  // (line, state)
  struct Edge {
    std::size_t line;
    std::uint64_t src, digit, dst;
  };
  std::vector<Edge> edges;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = tokenize(line);
    if (tok.empty()) continue;

    auto single = [&](std::optional<std::uint64_t>& slot, const char* key) {
      if (tok.size() != 2) throw ParseError(line_no, std::string("'") + key + "' takes exactly one value");
      if (slot) throw ParseError(line_no, std::string("duplicate '") + key + "' line");
      slot = to_number(tok[1], line_no);
    };
    if (tok[0] == "base") {
      single(base, "base");
    } else if (tok[0] == "states") {
      single(states, "states");
    } else if (tok[0] == "initial") {
      single(initial, "initial");
    } else if (tok[0] == "finals") {
      for (std::size_t i = 1; i < tok.size(); ++i) finals.emplace_back(line_no, to_number(tok[i], line_no));
    } else {
      if (tok.size() != 3) throw ParseError(line_no, "expected '<src> <digit> <dst>' or a header keyword");
      edges.push_back({line_no, to_number(tok[0], line_no), to_number(tok[1], line_no), to_number(tok[2], line_no)});
    }
  }

  if (!base) throw ParseError(line_no, "missing 'base' line");
  if (!states) throw ParseError(line_no, "missing 'states' line");
  if (!initial) throw ParseError(line_no, "missing 'initial' line");
  if (*base < 2 || *base > (1u << 16)) throw ParseError(line_no, "base must lie in [2, 65536]");
  if (*states == 0 || *states >= kNoState) throw ParseError(line_no, "state count out of range");
  if (*initial >= *states) throw ParseError(line_no, "initial state " + std::to_string(*initial) + " out of range");

  Dfa a(static_cast<unsigned>(*base), static_cast<std::size_t>(*states), static_cast<State>(*initial));
  for (auto [ln, q] : finals) {
    if (q >= *states) throw ParseError(ln, "final state " + std::to_string(q) + " out of range");
    a.set_final(static_cast<State>(q), true);
  }
  for (const Edge& e : edges) {
    if (e.src >= *states) throw ParseError(e.line, "source state " + std::to_string(e.src) + " out of range");
    if (e.dst >= *states) throw ParseError(e.line, "target state " + std::to_string(e.dst) + " out of range");
    if (e.digit >= *base) throw ParseError(e.line, "digit " + std::to_string(e.digit) + " not below base " + std::to_string(*base));
    State src = static_cast<State>(e.src), dst = static_cast<State>(e.dst);
    Digit d = static_cast<Digit>(e.digit);
    State old = a.next(src, d);
    if (old != kNoState && old != dst) throw ParseError(e.line, "conflicting transition from state " + std::to_string(src) + " on digit " + std::to_string(d));
    a.set_transition(src, d, dst);
  }
  return complete(a);
}

Dfa parse_dfa(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dfa(in);
}

Dfa read_dfa_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_dfa(in);
}

void write_dfa(std::ostream& out, const Dfa& a) {
  out << "base " << a.base() << '\n'
      << "states " << a.num_states() << '\n'
      << "initial " << a.initial() << '\n'
      << "finals";
  for (State f : a.finals()) out << ' ' << f;
  out << '\n';
  for (State s = 0; s < a.num_states(); ++s) {
    auto row = a.successors(s);
    for (Digit d = 0; d < a.base(); ++d)
      if (row[d] != kNoState) out << s << ' ' << d << ' ' << row[d] << '\n';
  }
}

std::string to_text(const Dfa& a) {
  std::ostringstream out;
  write_dfa(out, a);
  return out.str();
}

void write_dot(std::ostream& out, const Dfa& a) {
  std::vector<std::uint8_t> on_zero_circuit(a.num_states(), 0);
  if (a.is_complete())
    for (State s : zero_circuit_states(a)) on_zero_circuit[s] = 1;

  out << "digraph automaton {\n"
      << "  rankdir=LR;\n"
      << "  node [shape=circle];\n"
      << "  __start [shape=none, label=\"\", width=0, height=0];\n"
      << "  __start -> " << a.initial() << ";\n";
  for (State s = 0; s < a.num_states(); ++s) {
    out << "  " << s << " [";
    out << (a.is_final(s) && !a.finals_unspecified() ? "shape=doublecircle" : "shape=circle");
    if (on_zero_circuit[s]) out << ", style=filled, fillcolor=lightgrey";
    out << "];\n";
  }
  for (State s = 0; s < a.num_states(); ++s) {
    // Parallel edges are merged; digit 0 stays separate since it is drawn thin.
    std::map<State, std::vector<Digit>> bold;
    auto row = a.successors(s);
    for (Digit d = 0; d < a.base(); ++d) {
      if (row[d] == kNoState) continue;
      if (d == 0) {
        out << "  " << s << " -> " << row[d] << " [label=\"0\", penwidth=0.6];\n";
      } else {
        bold[row[d]].push_back(d);
      }
    }
    for (const auto& [dst, digits] : bold) {
      out << "  " << s << " -> " << dst << " [label=\"";
      for (std::size_t i = 0; i < digits.size(); ++i) out << (i ? "," : "") << digits[i];
      out << "\", style=bold];\n";
    }
  }
  out << "}\n";
}

std::string to_dot(const Dfa& a) {
  std::ostringstream out;
  write_dot(out, a);
  return out.str();
}

}  // namespace epset
