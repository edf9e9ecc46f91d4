#include "galaxia/colouring.hpp"

#include <algorithm>
#include <set>

namespace galaxia {

int ArcColouring::used_colours() const {
  return static_cast<int>(std::set<int>(colour.begin(), colour.end()).size());
}

int ArcColouring::max_colour() const {
  return colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end());
}

}  // namespace galaxia
