#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ranlb {

// Wideband-SINR -> MCS index lookup. Index i is usable iff the SINR is at or
// above threshold i; below threshold 0 the link cannot be served at all.
class McsTable {
 public:
  McsTable() = default;
  explicit McsTable(std::vector<double> thresholds_db);

  // 29 entries, 1 dB apart starting at -6 dB. Matches data/mcs_thresholds.txt.
  static const McsTable& builtin();

  // Plain text, one threshold per line, '#' comments; first line must carry
  // the format tag "# ranlb-mcs-thresholds v1".
  static McsTable load(const std::string& path);

  // Highest supported index, or nullopt when below the MCS-0 threshold.
  std::optional<int> index_for(double sinr_db) const;

  double threshold_db(int index) const { return thresholds_db_.at(index); }
  int size() const { return static_cast<int>(thresholds_db_.size()); }
  int max_index() const { return size() - 1; }
  const std::vector<double>& thresholds() const { return thresholds_db_; }

 private:
  std::vector<double> thresholds_db_;
};

}  // namespace ranlb
