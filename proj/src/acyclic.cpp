#include "galaxia/acyclic.hpp"

#include "galaxia/error.hpp"
#include "galaxia/matching.hpp"

namespace galaxia {

IntervalSdr sdr_in_cyclic_interval(const std::vector<CyclicInterval>& intervals) {
  const int k = static_cast<int>(intervals.size());
  if (k == 0) throw Error(Errc::bad_shape, "no intervals given");
  for (const auto& iv : intervals)
    if (iv.modulus != 2 * k || iv.length != k) throw Error(Errc::bad_shape, "expected k-intervals of 1..2k");
  for (int start = 1; start <= 2 * k; ++start) {
    const CyclicInterval j(2 * k, start, k);
    const auto members = j.members();
    std::vector<std::vector<int>> options(k);
    for (int i = 0; i < k; ++i)
      for (int pos = 0; pos < k; ++pos)
        if (intervals[i].contains(members[pos])) options[i].push_back(pos);
    if (auto match = distinct_representatives(options, k)) {
      IntervalSdr out{j, {}};
      for (int pos : *match) out.representatives.push_back(members[pos]);
      return out;
    }
  }
  throw Error(Errc::internal_defect, "no cyclic interval admits distinct representatives");
}

AcyclicStarColouring star_colouring_acyclic(const Digraph& d) {
  const int k = degree_profile(d).max_in;
  AcyclicStarColouring out;
  out.colouring.colour.assign(d.arc_count(), 0);
  if (k == 0) return out;
  out.colouring.colour_count = 2 * k;
  out.intervals.assign(d.vertex_count(), CyclicInterval(2 * k, 1, k));
  for (int x : topological_order(d)) {
    const auto ins = d.in_arcs(x);
    if (ins.empty()) continue;
    std::vector<CyclicInterval> family;
    for (int a : ins) family.push_back(out.intervals[d.arc(a).tail].complement());
    while (static_cast<int>(family.size()) < k) family.push_back(family.back());
    const auto sdr = sdr_in_cyclic_interval(family);
    for (std::size_t i = 0; i < ins.size(); ++i) out.colouring.colour[ins[i]] = sdr.representatives[i];
    out.intervals[x] = sdr.interval;
  }
  return out;
}

bool intervals_hold(const Digraph& d, const ArcColouring& c, const std::vector<CyclicInterval>& intervals) {
  if (static_cast<int>(intervals.size()) != d.vertex_count()) return d.arc_count() == 0;
  for (int a = 0; a < d.arc_count(); ++a)
    if (!intervals[d.arc(a).head].contains(c.colour[a])) return false;
  return true;
}

}  // namespace galaxia
