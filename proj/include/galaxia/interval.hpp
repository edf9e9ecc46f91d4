#pragma once

#include <vector>

namespace galaxia {

/// {start, start+1, ..., start+length-1} with wrap-around, values in 1..modulus.
struct CyclicInterval {
  int modulus = 2;
  int start = 1;
  int length = 1;

  CyclicInterval() = default;
  CyclicInterval(int modulus, int start, int length);

  bool contains(int value) const;
  std::vector<int> members() const;
  /// Complement of a k-interval of {1..2k}: the opposite k-interval.
  CyclicInterval complement() const;

  friend bool operator==(const CyclicInterval&, const CyclicInterval&) = default;
};

}  // namespace galaxia
