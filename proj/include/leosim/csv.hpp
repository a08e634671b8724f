#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace leosim {

// 6 significant digits, "nan"/"inf"/"-inf" for non-finite values. All CSV
// numbers go through this so re-runs are byte-identical.
std::string fmt_g6(double v);

std::string fmt_int(long long v);

class CsvWriter {
  public:
    // Throws std::runtime_error if the file cannot be created.
    CsvWriter(const std::string& path, const std::string& header);

    void row(const std::vector<std::string>& cells);

    // Flushes and reports stream health.
    bool close();

  private:
    std::ofstream out_;
    std::string path_;
};

}  // namespace leosim
