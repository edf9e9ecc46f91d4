#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "galaxia/colouring.hpp"
#include "galaxia/digraph.hpp"
#include "galaxia/fibre.hpp"
#include "galaxia/interval.hpp"

namespace galaxia {

// Instance format:
//   p dsa <vertex_count> <arc_count> <m>
//   a <tail> <head> [label]        (label defaults to 1)
// Solution files hold any of
//   c <arc> <colour>
//   i <vertex> <start> <k>         (cyclic k-interval of 1..2k)
//   w <arc> <colour> <fibre_out> <fibre_in>
// '#' starts a comment anywhere on a line.

LabelledDigraph read_digraph(std::istream& in);
LabelledDigraph read_digraph_file(const std::string& path);
void write_digraph(std::ostream& out, const LabelledDigraph& ld, const std::vector<std::string>& comments = {});

struct Solution {
  ArcColouring colouring;
  std::map<int, CyclicInterval> intervals;
  WavelengthAssignment wavelengths;  // empty unless the file had w lines
};

/// Every arc must receive exactly one colour, either by a c line or a w line.
Solution read_solution(std::istream& in, int arc_count);
Solution read_solution_file(const std::string& path, int arc_count);

void write_colouring(std::ostream& out, const ArcColouring& c);
void write_intervals(std::ostream& out, const std::vector<CyclicInterval>& intervals);
void write_wavelengths(std::ostream& out, const WavelengthAssignment& wa);

}  // namespace galaxia
