#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "ramanpump/params.hpp"

namespace ramanpump::cli {

/// Scientific notation with 13 significant digits; all CSV numbers go
/// through here so outputs are reproducible byte for byte.
std::string format_number(double v);

/// Minimal CSV emitter; UTF-8, '.' decimal separator.
class CsvWriter {
  public:
    explicit CsvWriter(std::vector<std::string> header);

    void add_row(const std::vector<std::string>& cells);
    void write(const std::filesystem::path& path) const;

  private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

struct RunReport {
    int schema_version = 1;
    std::string command;
    nlohmann::ordered_json config;
    nlohmann::ordered_json result;
    Diagnostics diagnostics;
    double duration_ms = 0.0;
};

nlohmann::ordered_json diagnostics_to_json(const Diagnostics& diag);
nlohmann::ordered_json report_to_json(const RunReport& report);
void write_report(const RunReport& report, const std::filesystem::path& path);

}  // namespace ramanpump::cli
