#include "galaxia/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include "galaxia/error.hpp"

namespace galaxia {
namespace {

// Splits a line into whitespace-separated tokens, dropping any comment.
std::vector<std::string_view> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int to_int(std::string_view tok, int line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line_no, "expected an integer, got '" + std::string(tok) + "'");
  return value;
}

void expect_fields(const std::vector<std::string_view>& toks, std::size_t lo, std::size_t hi, int line_no) {
  if (toks.size() < lo || toks.size() > hi)
    throw ParseError(line_no, "wrong number of fields for '" + std::string(toks[0]) + "' line");
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse, "cannot open " + path);
  return in;
}

}  // namespace

LabelledDigraph read_digraph(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int vertex_count = 0, arc_count = 0, m = 1;
  std::vector<LabelledArc> arcs;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "p") {
      if (have_header) throw ParseError(line_no, "second header line");
      expect_fields(toks, 5, 5, line_no);
      if (toks[1] != "dsa") throw ParseError(line_no, "unknown problem type '" + std::string(toks[1]) + "'");
      vertex_count = to_int(toks[2], line_no);
      arc_count = to_int(toks[3], line_no);
      m = to_int(toks[4], line_no);
      if (vertex_count < 0 || arc_count < 0) throw ParseError(line_no, "negative size");
      if (m < 1) throw ParseError(line_no, "label count must be positive");
      have_header = true;
      arcs.reserve(arc_count);
    } else if (toks[0] == "a") {
      if (!have_header) throw ParseError(line_no, "arc before header");
      expect_fields(toks, 3, 4, line_no);
      const int t = to_int(toks[1], line_no);
      const int h = to_int(toks[2], line_no);
      const int label = toks.size() == 4 ? to_int(toks[3], line_no) : 1;
      if (t < 0 || t >= vertex_count || h < 0 || h >= vertex_count)
        throw ParseError(line_no, "vertex id out of range");
      if (label < 1 || label > m) throw ParseError(line_no, "label outside 1.." + std::to_string(m));
      arcs.push_back({t, h, label});
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(toks[0]) + "'");
    }
  }
  if (!have_header) throw ParseError(line_no, "missing header");
  if (static_cast<int>(arcs.size()) != arc_count)
    throw ParseError(line_no, "header announces " + std::to_string(arc_count) + " arcs, found " +
                                  std::to_string(arcs.size()));
  return LabelledDigraph(vertex_count, m, std::move(arcs));
}

LabelledDigraph read_digraph_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_digraph(in);
}

void write_digraph(std::ostream& out, const LabelledDigraph& ld, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << "p dsa " << ld.vertex_count() << ' ' << ld.arc_count() << ' ' << ld.label_count() << '\n';
  for (const auto& a : ld.arcs()) {
    out << "a " << a.tail << ' ' << a.head;
    if (ld.label_count() > 1) out << ' ' << a.label;
    out << '\n';
  }
}

Solution read_solution(std::istream& in, int arc_count) {
  Solution sol;
  sol.colouring.colour.assign(arc_count, 0);
  std::vector<Wavelength> wl(arc_count, Wavelength{0, 0, 0});
  bool any_w = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "c" || toks[0] == "w") {
      const bool is_w = toks[0] == "w";
      expect_fields(toks, is_w ? 5 : 3, is_w ? 5 : 3, line_no);
      const int arc = to_int(toks[1], line_no);
      const int colour = to_int(toks[2], line_no);
      if (arc < 0 || arc >= arc_count) throw ParseError(line_no, "arc index out of range");
      if (colour < 1) throw ParseError(line_no, "colours are positive");
      if (sol.colouring.colour[arc] != 0) throw ParseError(line_no, "arc " + std::to_string(arc) + " coloured twice");
      sol.colouring.colour[arc] = colour;
      if (is_w) {
        any_w = true;
        wl[arc] = {colour, to_int(toks[3], line_no), to_int(toks[4], line_no)};
      }
    } else if (toks[0] == "i") {
      expect_fields(toks, 4, 4, line_no);
      const int v = to_int(toks[1], line_no);
      const int start = to_int(toks[2], line_no);
      const int k = to_int(toks[3], line_no);
      if (k < 1 || start < 1 || start > 2 * k) throw ParseError(line_no, "bad interval");
      sol.intervals[v] = CyclicInterval(2 * k, start, k);
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(toks[0]) + "'");
    }
  }
  for (int a = 0; a < arc_count; ++a) {
    if (sol.colouring.colour[a] == 0) throw ParseError(line_no, "arc " + std::to_string(a) + " has no colour");
    if (any_w && wl[a].colour == 0) throw ParseError(line_no, "arc " + std::to_string(a) + " has no wavelength");
  }
  sol.colouring.colour_count = sol.colouring.max_colour();
  if (any_w) sol.wavelengths = std::move(wl);
  return sol;
}

Solution read_solution_file(const std::string& path, int arc_count) {
  auto in = open_or_throw(path);
  return read_solution(in, arc_count);
}

void write_colouring(std::ostream& out, const ArcColouring& c) {
  for (std::size_t a = 0; a < c.colour.size(); ++a) out << "c " << a << ' ' << c.colour[a] << '\n';
}

void write_intervals(std::ostream& out, const std::vector<CyclicInterval>& intervals) {
  for (std::size_t v = 0; v < intervals.size(); ++v)
    out << "i " << v << ' ' << intervals[v].start << ' ' << intervals[v].length << '\n';
}

void write_wavelengths(std::ostream& out, const WavelengthAssignment& wa) {
  for (std::size_t a = 0; a < wa.size(); ++a)
    out << "w " << a << ' ' << wa[a].colour << ' ' << wa[a].fibre_out << ' ' << wa[a].fibre_in << '\n';
}

}  // namespace galaxia
