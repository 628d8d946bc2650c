#include "ranlb/mcs.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ranlb {

McsTable::McsTable(std::vector<double> thresholds_db)
    : thresholds_db_(std::move(thresholds_db)) {
  if (thresholds_db_.empty())
    throw std::invalid_argument("McsTable: empty threshold list");
  if (!std::is_sorted(thresholds_db_.begin(), thresholds_db_.end()))
    throw std::invalid_argument("McsTable: thresholds must be nondecreasing");
}

const McsTable& McsTable::builtin() {
  static const McsTable table = [] {
    std::vector<double> t(29);
    for (int i = 0; i < 29; ++i) t[i] = -6.0 + 1.0 * i;
    return McsTable(std::move(t));
  }();
  return table;
}

McsTable McsTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("McsTable: cannot open " + path);
  std::string line;
  if (!std::getline(in, line) ||
      line.rfind("# ranlb-mcs-thresholds v1", 0) != 0)
    throw std::runtime_error("McsTable: missing version tag in " + path);
  std::vector<double> t;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ss(line);
    double v;
    if (!(ss >> v))
      throw std::runtime_error("McsTable: bad threshold line: " + line);
    t.push_back(v);
  }
  return McsTable(std::move(t));
}

std::optional<int> McsTable::index_for(double sinr_db) const {
  if (sinr_db < thresholds_db_.front()) return std::nullopt;
  auto it = std::upper_bound(thresholds_db_.begin(), thresholds_db_.end(), sinr_db);
  return static_cast<int>(it - thresholds_db_.begin()) - 1;
}

}  // namespace ranlb
