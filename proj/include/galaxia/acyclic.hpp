#pragma once

#include <vector>

#include "galaxia/colouring.hpp"
#include "galaxia/digraph.hpp"
#include "galaxia/interval.hpp"

namespace galaxia {

struct IntervalSdr {
  CyclicInterval interval;
  std::vector<int> representatives;  // one per input interval, pairwise distinct
};

/// Given k cyclic k-intervals of {1..2k}, finds distinct representatives that
/// together form a cyclic k-interval. Candidate intervals are tried by
/// ascending start. Throws BadShape on malformed input; a failure on every
/// candidate is reported as InternalDefect.
IntervalSdr sdr_in_cyclic_interval(const std::vector<CyclicInterval>& intervals);

struct AcyclicStarColouring {
  ArcColouring colouring;                // colours in 1..2k
  std::vector<CyclicInterval> intervals;  // per vertex, holds its in-colours
};

/// Colours an acyclic digraph with maximum indegree k using 2k colours so the
/// colours entering each vertex lie in one cyclic k-interval. Throws
/// CyclicError. With no arcs the result is empty (colour_count 0, no intervals).
AcyclicStarColouring star_colouring_acyclic(const Digraph& d);

/// True if each vertex's in-colours lie in its reported interval.
bool intervals_hold(const Digraph& d, const ArcColouring& c, const std::vector<CyclicInterval>& intervals);

}  // namespace galaxia
