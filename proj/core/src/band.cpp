#include "ranlb/band.hpp"

#include <stdexcept>

namespace ranlb {

Band band_from_name(const std::string& name) {
  if (name == "n29") return Band::n29;
  if (name == "n66") return Band::n66;
  if (name == "n1") return Band::n1;
  throw std::invalid_argument("unknown band: " + name);
}

std::array<BandConfig, 3> default_bands() {
  return {BandConfig::make(Band::n29, 725e6, 10e6),
          BandConfig::make(Band::n66, 2190e6, 5e6),
          BandConfig::make(Band::n1, 2140e6, 5e6)};
}

}  // namespace ranlb
