#include "nambu/trajectory_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "nambu/errors.hpp"

namespace nambu {

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

namespace {

std::vector<std::string> state_names(const Trajectory& t,
                                     const std::vector<std::string>& names) {
  if (!names.empty()) {
    if (names.size() != t.dim()) {
      throw DomainError("coordinate names do not match the state dimension");
    }
    return names;
  }
  std::vector<std::string> generated;
  for (std::size_t i = 0; i < t.dim(); ++i) {
    generated.push_back("x" + std::to_string(i + 1));
  }
  return generated;
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

void write_csv(const Trajectory& trajectory,
               const std::vector<std::string>& coord_names, std::ostream& out) {
  const auto names = state_names(trajectory, coord_names);
  out << 't';
  for (const auto& n : names) out << ',' << n;
  for (const auto& n : trajectory.invariant_names) out << ',' << n;
  out << '\n';
  for (std::size_t k = 0; k < trajectory.size(); ++k) {
    out << format_double(trajectory.times[k]);
    for (double v : trajectory.states[k]) out << ',' << format_double(v);
    for (const auto& log : trajectory.invariant_logs) {
      out << ',' << format_double(log[k]);
    }
    out << '\n';
  }
}

void write_jsonl(const Trajectory& trajectory,
                 const std::vector<std::string>& coord_names,
                 std::ostream& out) {
  const auto names = state_names(trajectory, coord_names);
  for (std::size_t k = 0; k < trajectory.size(); ++k) {
    out << "{\"t\":" << format_double(trajectory.times[k]) << ",\"state\":{";
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i) out << ',';
      out << json_string(names[i]) << ':'
          << format_double(trajectory.states[k][i]);
    }
    out << "},\"invariants\":{";
    for (std::size_t j = 0; j < trajectory.invariant_names.size(); ++j) {
      if (j) out << ',';
      out << json_string(trajectory.invariant_names[j]) << ':'
          << format_double(trajectory.invariant_logs[j][k]);
    }
    out << "}}\n";
  }
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw DomainError("CSV input is empty");
  for (auto& c : split(line)) table.columns.push_back(trim(c));
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split(line);
    if (cells.size() != table.columns.size()) {
      throw DomainError("CSV line " + std::to_string(line_no) + " has " +
                        std::to_string(cells.size()) + " cells, expected " +
                        std::to_string(table.columns.size()));
    }
    std::vector<double> row;
    for (const auto& raw : cells) {
      const std::string cell = trim(raw);
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw DomainError("CSV line " + std::to_string(line_no) +
                          ": non-numeric cell '" + cell + "'");
      }
      row.push_back(v);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

Trajectory trajectory_from_csv(const CsvTable& table, std::size_t state_dim) {
  if (table.columns.size() < state_dim + 1 || table.columns.front() != "t") {
    throw DomainError("CSV does not hold a trajectory of this dimension");
  }
  Trajectory t;
  const std::size_t n_inv = table.columns.size() - state_dim - 1;
  for (std::size_t j = 0; j < n_inv; ++j) {
    t.invariant_names.push_back(table.columns[state_dim + 1 + j]);
  }
  t.invariant_logs.resize(n_inv);
  for (const auto& row : table.rows) {
    t.times.push_back(row[0]);
    t.states.emplace_back(row.begin() + 1, row.begin() + 1 + state_dim);
    for (std::size_t j = 0; j < n_inv; ++j) {
      t.invariant_logs[j].push_back(row[state_dim + 1 + j]);
    }
  }
  for (const auto& log : t.invariant_logs) {
    double worst = 0.0;
    for (double v : log) worst = std::max(worst, std::abs(v - log.front()));
    t.drift.push_back(worst);
  }
  return t;
}

}  // namespace nambu
