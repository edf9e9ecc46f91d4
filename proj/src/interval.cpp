#include "galaxia/interval.hpp"

#include "galaxia/error.hpp"

namespace galaxia {

CyclicInterval::CyclicInterval(int modulus, int start, int length)
    : modulus(modulus), start(start), length(length) {
  if (modulus < 1 || start < 1 || start > modulus || length < 1 || length > modulus)
    throw Error(Errc::bad_shape, "cyclic interval out of shape");
}

bool CyclicInterval::contains(int value) const {
  if (value < 1 || value > modulus) return false;
  return (value - start + modulus) % modulus < length;
}

std::vector<int> CyclicInterval::members() const {
  std::vector<int> out;
  out.reserve(length);
  for (int i = 0; i < length; ++i) out.push_back((start - 1 + i) % modulus + 1);
  return out;
}

CyclicInterval CyclicInterval::complement() const {
  if (modulus != 2 * length) throw Error(Errc::bad_shape, "complement needs modulus = 2 * length");
  return CyclicInterval(modulus, (start - 1 + length) % modulus + 1, length);
}

}  // namespace galaxia
