#pragma once

#include <optional>
#include <vector>

#include "galaxia/digraph.hpp"

namespace galaxia {

/// Arc colouring where at every vertex v and colour w,
/// in(v,w) + out(v,w) <= fibres; out counts distinct labels, not arcs.
struct FibreColouring {
  int fibres = 1;
  std::vector<int> colour;
  int colour_count = 0;
};

struct Wavelength {
  int colour;
  int fibre_out;  // fibre used at the tail
  int fibre_in;   // fibre used at the head
  friend bool operator==(const Wavelength&, const Wavelength&) = default;
};

using WavelengthAssignment = std::vector<Wavelength>;

/// ceil((m * ceil(k/n) + k) / n): colours used for acyclic inputs with m >= n.
int fibre_bound_acyclic(int n, int m, int k);
/// ceil(k / (n - m)) for m < n.
int fibre_bound_smallm(int n, int m, int k);

FibreColouring fibre_colouring_acyclic(const LabelledDigraph& ld, int fibres);
FibreColouring fibre_colouring_smallm(const LabelledDigraph& ld, int fibres);

WavelengthAssignment expand_to_wavelength_assignment(const LabelledDigraph& ld, const FibreColouring& fc);

struct FibreViolation {
  int vertex;
  int colour;
  int in;
  int out;
};

std::optional<FibreViolation> verify_fibre_colouring(const LabelledDigraph& ld, const FibreColouring& fc);

struct WavelengthViolation {
  int condition;  // 1, 2 or 3
  int first_arc;
  int second_arc;
};

/// Checks, for fibre count n:
///  (i)   at v, (colour, head fibre) of an entering arc differs from
///        (colour, tail fibre) of every leaving arc;
///  (ii)  arcs entering v differ in (colour, head fibre);
///  (iii) leaving arcs with different labels differ in (colour, tail fibre).
/// Fibres must lie in 1..n.
std::optional<WavelengthViolation> verify_wavelength_assignment(const LabelledDigraph& ld, int fibres,
                                                                const WavelengthAssignment& wa);

}  // namespace galaxia
