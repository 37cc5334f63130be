#include "report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace ramanpump::cli {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12e", v);
    return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> header)
    : header_(std::move(header)) {}

void CsvWriter::add_row(const std::vector<std::string>& cells) {
    if (cells.size() != header_.size())
        throw std::logic_error("csv: row width mismatch");
    rows_.push_back(cells);
}

void CsvWriter::write(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    for (std::size_t i = 0; i < header_.size(); ++i)
        out << header_[i] << (i + 1 < header_.size() ? "," : "\n");
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << row[i] << (i + 1 < row.size() ? "," : "\n");
    }
}

nlohmann::ordered_json diagnostics_to_json(const Diagnostics& diag) {
    return {{"epsilon", diag.epsilon},
            {"warnings", diag.warnings},
            {"valid", diag.valid}};
}

nlohmann::ordered_json report_to_json(const RunReport& report) {
    nlohmann::ordered_json j;
    j["schema_version"] = report.schema_version;
    j["command"] = report.command;
    j["diagnostics"] = diagnostics_to_json(report.diagnostics);
    j["config"] = report.config;
    j["result"] = report.result;
    j["duration_ms"] = report.duration_ms;
    return j;
}

void write_report(const RunReport& report, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << report_to_json(report).dump(2) << "\n";
}

}  // namespace ramanpump::cli
