#pragma once

#include "dps/analyzer.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace dps {

struct TableRow {
  int i = 0; // 1-based, as written in tables
  Rational s;
  int m = 1;
  std::string regular; // "reg" | "non-reg"
  std::string verdict; // "red" | "irr" | "inconclusive"
  std::string socle;   // "case_I" | "case_II" | "case_III" | "regular" | "bound:<k>" | "-"
  std::string partner; // "[i,s,m]" | "[[i1,i2],[s1,s2],[k1,k2]]" | "*" | "-"
  std::string cite;
};

std::vector<TableRow> read_table(const std::filesystem::path& path);
void write_table(const std::filesystem::path& path, const std::string& group, const std::vector<TableRow>& rows);
std::filesystem::path default_golden_path();

TableRow to_row(const ClassificationRecord& r);
std::string socle_cell(const ClassificationRecord& r);

struct ScanConfig {
  std::vector<int> parabolics;            // 0-based; empty = all
  std::optional<std::vector<int>> orders; // empty = Y_i of each parabolic
  std::optional<std::vector<Rational>> s_list;
  bool include_positive = false;
  int jobs = 1;
  bool trace = false;
};

// Cells to classify: columns = union over orders of non-regular or unit points.
std::vector<Triple> scan_points(const RootDatum& d, const ScanConfig& cfg);
std::vector<ClassificationRecord> scan(const RootDatum& d, const ScanConfig& cfg);
std::vector<ClassificationRecord> classify_all(const RootDatum& d, const std::vector<Triple>& pts, int jobs, bool trace);

std::string record_json(const ClassificationRecord& r, int indent = -1);
std::string report_json(const std::vector<ClassificationRecord>& rs);

// Rows keyed by (i, s, m); compares the regularity flag and the verdict.
std::vector<std::string> diff_tables(const std::vector<TableRow>& report, const std::vector<TableRow>& golden);

} // namespace dps
