#include "galaxia/solve.hpp"

#include <string>

#include "galaxia/acircuitic.hpp"
#include "galaxia/acyclic.hpp"
#include "galaxia/error.hpp"
#include "galaxia/galaxy.hpp"
#include "galaxia/oracle.hpp"
#include "galaxia/spanning.hpp"
#include "galaxia/subcubic.hpp"

namespace galaxia {

namespace {

constexpr std::pair<Algorithm, const char*> kNames[] = {
    {Algorithm::automatic, "auto"},       {Algorithm::upper_2k1, "2k1"},         {Algorithm::acyclic, "acyclic"},
    {Algorithm::subcubic, "subcubic"},    {Algorithm::diregular4, "diregular4"}, {Algorithm::acircuitic, "acircuitic"},
    {Algorithm::smallm, "smallm"},        {Algorithm::fibre_acyclic, "fibre-acyclic"},
};

bool is_fibre_problem(const InstanceClass& c) { return c.labels > 1 || c.fibres > 1; }

void check_star(const Digraph& d, const ArcColouring& c) {
  if (auto bad = verify_star_colouring(d, c))
    throw Error(Errc::internal_defect, "arcs " + std::to_string(bad->first_arc) + " and " + std::to_string(bad->second_arc) +
                                           " break star rule " + std::to_string(bad->rule));
}

}  // namespace

std::string algorithm_name(Algorithm a) {
  for (auto [alg, name] : kNames)
    if (alg == a) return name;
  return "?";
}

std::optional<Algorithm> parse_algorithm(const std::string& name) {
  for (auto [alg, n] : kNames)
    if (name == n) return alg;
  return std::nullopt;
}

InstanceClass classify(const LabelledDigraph& ld, int fibres) {
  const auto p = degree_profile(ld.digraph());
  return InstanceClass{is_acyclic(ld.digraph()), p.max_total, p.max_in, p.max_out, ld.label_count(), fibres};
}

Algorithm select_algorithm(const InstanceClass& c) {
  if (!is_fibre_problem(c)) {
    // smallest guaranteed bound wins; on ties the earlier entry
    Algorithm best = Algorithm::upper_2k1;
    int bound = 2 * c.max_in + 1;
    auto offer = [&](bool applies, Algorithm a, int b) {
      if (applies && b <= bound) best = a, bound = b;
    };
    offer(c.max_in <= 2 && c.max_out <= 2, Algorithm::diregular4, 4);
    offer(c.max_degree <= 3, Algorithm::subcubic, 3);
    offer(c.acyclic, Algorithm::acyclic, 2 * c.max_in);
    return best;
  }
  if (c.labels < c.fibres) return Algorithm::smallm;
  if (c.acyclic) return Algorithm::fibre_acyclic;
  throw Error(Errc::no_applicable_algorithm, "no algorithm for a digraph with a circuit, " + std::to_string(c.labels) +
                                                 " labels and " + std::to_string(c.fibres) + " fibres");
}

SolveResult solve(const LabelledDigraph& ld, int fibres, Algorithm algorithm) {
  if (fibres < 1) throw Error(Errc::bad_params, "at least one fibre is needed");
  const InstanceClass cls = classify(ld, fibres);
  if (algorithm == Algorithm::automatic) algorithm = select_algorithm(cls);
  const bool fibre_alg = algorithm == Algorithm::smallm || algorithm == Algorithm::fibre_acyclic;
  if (is_fibre_problem(cls) && !fibre_alg)
    throw Error(Errc::no_applicable_algorithm, algorithm_name(algorithm) + " colours unlabelled single-fibre instances only");

  const Digraph& d = ld.digraph();
  const int k = cls.max_in;
  SolveResult r;
  r.algorithm = algorithm;
  switch (algorithm) {
    case Algorithm::upper_2k1:
      r.colouring = dst_upper_2k1(d);
      r.bound = 2 * k + 1;
      r.bound_formula = "2Δ⁻+1";
      break;
    case Algorithm::acyclic: {
      auto a = star_colouring_acyclic(d);
      if (!intervals_hold(d, a.colouring, a.intervals))
        throw Error(Errc::internal_defect, "in-colours escape their cyclic interval");
      r.colouring = std::move(a.colouring);
      r.intervals = std::move(a.intervals);
      r.bound = 2 * k;
      r.bound_formula = "2Δ⁻";
      break;
    }
    case Algorithm::subcubic:
      r.colouring = star_colouring_subcubic(d);
      r.bound = 3;
      r.bound_formula = "Δ ≤ 3";
      break;
    case Algorithm::diregular4:
      r.colouring = dst4_colouring(d);
      r.bound = 4;
      r.bound_formula = "Δ⁻,Δ⁺ ≤ 2";
      break;
    case Algorithm::acircuitic:
      r.colouring = acircuitic_colouring(d);
      r.bound = 4;
      r.bound_formula = "acircuitic, Δ ≤ 3";
      break;
    case Algorithm::smallm:
    case Algorithm::fibre_acyclic: {
      const FibreColouring fc =
          algorithm == Algorithm::smallm ? fibre_colouring_smallm(ld, fibres) : fibre_colouring_acyclic(ld, fibres);
      if (auto bad = verify_fibre_colouring(ld, fc))
        throw Error(Errc::internal_defect, "fibre limit exceeded at vertex " + std::to_string(bad->vertex));
      r.wavelengths = expand_to_wavelength_assignment(ld, fc);
      if (auto bad = verify_wavelength_assignment(ld, fibres, r.wavelengths))
        throw Error(Errc::internal_defect, "wavelength condition fails for arcs " + std::to_string(bad->first_arc) + " and " +
                                               std::to_string(bad->second_arc));
      r.colouring = ArcColouring{fc.colour, fc.colour_count};
      if (algorithm == Algorithm::smallm) {
        r.bound = fibre_bound_smallm(fibres, cls.labels, k);
        r.bound_formula = "⌈k/(n−m)⌉";
      } else {
        r.bound = fibre_bound_acyclic(fibres, cls.labels, k);
        r.bound_formula = "⌈(m/n)⌈k/n⌉+k/n⌉";
      }
      break;
    }
    case Algorithm::automatic:
      break;
  }
  if (!fibre_alg) check_star(d, r.colouring);
  if (r.colouring.max_colour() > r.bound)
    throw Error(Errc::internal_defect, algorithm_name(algorithm) + " used " + std::to_string(r.colouring.max_colour()) +
                                           " colours, above its bound " + std::to_string(r.bound));
  return r;
}

}  // namespace galaxia
