#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galaxia/colouring.hpp"
#include "galaxia/digraph.hpp"
#include "galaxia/fibre.hpp"
#include "galaxia/interval.hpp"

namespace galaxia {

enum class Algorithm { automatic, upper_2k1, acyclic, subcubic, diregular4, acircuitic, smallm, fibre_acyclic };

std::string algorithm_name(Algorithm a);
/// Accepts the CLI spellings: auto, 2k1, acyclic, subcubic, diregular4, acircuitic, smallm, fibre-acyclic.
std::optional<Algorithm> parse_algorithm(const std::string& name);

struct InstanceClass {
  bool acyclic = false;
  int max_degree = 0;  // d- + d+
  int max_in = 0;
  int max_out = 0;
  int labels = 1;  // m
  int fibres = 1;  // n
};

InstanceClass classify(const LabelledDigraph& ld, int fibres);

/// The automatic choice: for plain instances the applicable algorithm with the
/// smallest guaranteed bound. Throws NoApplicableAlgorithm for labelled or
/// multi-fibre instances with a circuit and m >= n.
Algorithm select_algorithm(const InstanceClass& c);

struct SolveResult {
  Algorithm algorithm = Algorithm::automatic;
  ArcColouring colouring;                 // colours per arc (fibre colouring when fibres/labels > 1)
  std::vector<CyclicInterval> intervals;  // acyclic algorithm only
  WavelengthAssignment wavelengths;       // fibre problems only
  int bound = 0;
  std::string bound_formula;
};

/// Runs the algorithm (resolving `automatic`) and verifies the result; a
/// failed verification throws InternalDefect, so a returned result is valid.
SolveResult solve(const LabelledDigraph& ld, int fibres, Algorithm algorithm);

}  // namespace galaxia
