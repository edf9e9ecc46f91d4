#include "galaxia/fibre.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "galaxia/error.hpp"
#include "galaxia/matching.hpp"

namespace galaxia {
namespace {

int ceil_div(long long a, long long b) { return static_cast<int>((a + b - 1) / b); }

void check_total(const LabelledDigraph& ld, const std::vector<int>& colour, int colour_count) {
  if (static_cast<int>(colour.size()) != ld.arc_count())
    throw Error(Errc::invalid_colouring, "colouring does not cover every arc");
  for (int c : colour)
    if (c < 1 || c > colour_count) throw Error(Errc::invalid_colouring, "colour outside 1.." + std::to_string(colour_count));
}

}  // namespace

int fibre_bound_acyclic(int n, int m, int k) {
  const long long t = ceil_div(k, n);
  return ceil_div(m * t + k, n);
}

int fibre_bound_smallm(int n, int m, int k) {
  if (m >= n) throw Error(Errc::bad_params, "needs fewer labels than fibres");
  return ceil_div(k, n - m);
}

FibreColouring fibre_colouring_acyclic(const LabelledDigraph& ld, int n) {
  const int m = ld.label_count();
  if (n < 1 || m < n) throw Error(Errc::bad_params, "needs m >= n >= 1");
  const Digraph& d = ld.digraph();
  const int k = degree_profile(d).max_in;
  FibreColouring fc{n, std::vector<int>(ld.arc_count(), 0), 0};
  if (ld.arc_count() == 0) return fc;
  const int t = ceil_div(k, n);
  const int bound = fibre_bound_acyclic(n, m, k);
  fc.colour_count = bound;

  // potential[v][i-1] = colours an arc with label i leaving v may take.
  std::vector<std::vector<std::vector<int>>> potential(d.vertex_count());
  for (int v : topological_order(d)) {
    const auto ins = d.in_arcs(v);
    auto& pv = potential[v];
    pv.assign(m, {});
    if (ins.empty()) {
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < t; ++j) pv[i].push_back((i * t + j) % bound + 1);
      continue;
    }
    std::vector<std::vector<int>> options;
    for (int a : ins) {
      const auto& arc = ld.arc(a);
      options.push_back(potential[arc.tail][arc.label - 1]);
      for (int& c : options.back()) --c;
    }
    const auto chosen = capacitated_assignment(options, std::vector<int>(bound, n));
    if (!chosen)
      throw Error(Errc::internal_defect, "no colour assignment for the arcs entering vertex " + std::to_string(v));
    std::vector<int> used(bound + 1, 0);
    for (std::size_t i = 0; i < ins.size(); ++i) {
      fc.colour[ins[i]] = (*chosen)[i] + 1;
      ++used[(*chosen)[i] + 1];
    }
    // Colour c entering j times may still leave on n - j labels.
    std::vector<int> sequence;
    for (int c = 1; c <= bound; ++c)
      for (int r = 0; r < n - used[c]; ++r) sequence.push_back(c);
    for (std::size_t a = 0; a < sequence.size(); ++a) {
      auto& set = pv[a % m];
      if (static_cast<int>(set.size()) < t) set.push_back(sequence[a]);
    }
    for (const auto& set : pv)
      if (static_cast<int>(set.size()) < t)
        throw Error(Errc::internal_defect, "too few potential colours at vertex " + std::to_string(v));
  }
  return fc;
}

FibreColouring fibre_colouring_smallm(const LabelledDigraph& ld, int n) {
  const int m = ld.label_count();
  if (m >= n) throw Error(Errc::bad_params, "needs m < n");
  const Digraph& d = ld.digraph();
  const int k = degree_profile(d).max_in;
  FibreColouring fc{n, std::vector<int>(ld.arc_count(), 0), 0};
  if (ld.arc_count() == 0) return fc;
  fc.colour_count = fibre_bound_smallm(n, m, k);
  for (int v = 0; v < d.vertex_count(); ++v) {
    const auto ins = d.in_arcs(v);
    for (std::size_t j = 0; j < ins.size(); ++j) fc.colour[ins[j]] = static_cast<int>(j) % fc.colour_count + 1;
  }
  return fc;
}

std::optional<FibreViolation> verify_fibre_colouring(const LabelledDigraph& ld, const FibreColouring& fc) {
  check_total(ld, fc.colour, fc.colour_count);
  const Digraph& d = ld.digraph();
  for (int v = 0; v < d.vertex_count(); ++v) {
    std::map<int, int> in;
    std::map<int, std::set<int>> out;
    for (int a : d.in_arcs(v)) ++in[fc.colour[a]];
    for (int a : d.out_arcs(v)) out[fc.colour[a]].insert(ld.arc(a).label);
    std::set<int> colours;
    for (const auto& [c, _] : in) colours.insert(c);
    for (const auto& [c, _] : out) colours.insert(c);
    for (int c : colours) {
      const int i = in.count(c) ? in[c] : 0;
      const int o = out.count(c) ? static_cast<int>(out[c].size()) : 0;
      if (i + o > fc.fibres) return FibreViolation{v, c, i, o};
    }
  }
  return std::nullopt;
}

WavelengthAssignment expand_to_wavelength_assignment(const LabelledDigraph& ld, const FibreColouring& fc) {
  if (auto bad = verify_fibre_colouring(ld, fc))
    throw Error(Errc::invalid_colouring, "vertex " + std::to_string(bad->vertex) + " colour " +
                                             std::to_string(bad->colour) + " exceeds the fibre count");
  const Digraph& d = ld.digraph();
  WavelengthAssignment wa(ld.arc_count(), Wavelength{0, 0, 0});
  for (int a = 0; a < ld.arc_count(); ++a) wa[a].colour = fc.colour[a];
  for (int v = 0; v < d.vertex_count(); ++v) {
    std::map<int, int> next;  // colour -> last fibre handed out at v
    for (int a : d.in_arcs(v)) wa[a].fibre_in = ++next[fc.colour[a]];
    std::map<std::pair<int, int>, int> group;  // (colour, label) -> fibre
    std::vector<int> outs(d.out_arcs(v).begin(), d.out_arcs(v).end());
    std::stable_sort(outs.begin(), outs.end(), [&](int x, int y) { return ld.arc(x).label < ld.arc(y).label; });
    for (int a : outs) {
      const auto key = std::make_pair(fc.colour[a], ld.arc(a).label);
      auto it = group.find(key);
      if (it == group.end()) it = group.emplace(key, ++next[fc.colour[a]]).first;
      wa[a].fibre_out = it->second;
    }
  }
  return wa;
}

std::optional<WavelengthViolation> verify_wavelength_assignment(const LabelledDigraph& ld, int n,
                                                                const WavelengthAssignment& wa) {
  if (static_cast<int>(wa.size()) != ld.arc_count())
    throw Error(Errc::invalid_colouring, "assignment does not cover every arc");
  for (const auto& w : wa)
    if (w.colour < 1 || w.fibre_in < 1 || w.fibre_in > n || w.fibre_out < 1 || w.fibre_out > n)
      throw Error(Errc::invalid_colouring, "colour or fibre out of range");
  const Digraph& d = ld.digraph();
  for (int v = 0; v < d.vertex_count(); ++v) {
    const auto ins = d.in_arcs(v);
    const auto outs = d.out_arcs(v);
    for (std::size_t i = 0; i < ins.size(); ++i)
      for (std::size_t j = i + 1; j < ins.size(); ++j)
        if (wa[ins[i]].colour == wa[ins[j]].colour && wa[ins[i]].fibre_in == wa[ins[j]].fibre_in)
          return WavelengthViolation{2, ins[i], ins[j]};
    for (int a : ins)
      for (int b : outs)
        if (wa[a].colour == wa[b].colour && wa[a].fibre_in == wa[b].fibre_out) return WavelengthViolation{1, a, b};
    for (std::size_t i = 0; i < outs.size(); ++i)
      for (std::size_t j = i + 1; j < outs.size(); ++j)
        if (ld.arc(outs[i]).label != ld.arc(outs[j]).label && wa[outs[i]].colour == wa[outs[j]].colour &&
            wa[outs[i]].fibre_out == wa[outs[j]].fibre_out)
          return WavelengthViolation{3, outs[i], outs[j]};
  }
  return std::nullopt;
}

}  // namespace galaxia
