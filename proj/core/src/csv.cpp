#include "septensor/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include "septensor/errors.hpp"
#include "septensor/numfmt.hpp"

namespace septensor {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_cells(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  std::istringstream in(line);
  while (std::getline(in, cur, ',')) {
    cells.push_back(trim(cur));
  }
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

double parse_cell(const std::string& cell, std::size_t row, std::size_t col) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
    throw ConfigError("tabulated CSV: cell at row " + std::to_string(row) + ", column " +
                      std::to_string(col) + " is not a number: '" + cell + "'");
  }
  return v;
}

}  // namespace

TabulatedData read_tabulated_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "'");
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw ConfigError("tabulated CSV: file is empty");
  }
  std::vector<std::string> header = split_cells(line);
  if (header.empty() || header[0] != "x\\y") {
    throw ConfigError("tabulated CSV: header must start with 'x\\y'");
  }
  if (header.size() < 3) {
    throw ConfigError("tabulated CSV: need at least 2 y nodes");
  }

  TabulatedData data;
  for (std::size_t j = 1; j < header.size(); ++j) {
    data.y_nodes.push_back(parse_cell(header[j], 0, j));
  }

  std::vector<std::vector<double>> rows;
  std::size_t row_index = 1;
  while (std::getline(in, line)) {
    if (trim(line).empty()) {
      ++row_index;
      continue;
    }
    std::vector<std::string> cells = split_cells(line);
    if (cells.size() != header.size()) {
      throw ConfigError("tabulated CSV: row " + std::to_string(row_index) + " has " +
                        std::to_string(cells.size()) + " cells, expected " +
                        std::to_string(header.size()));
    }
    data.x_nodes.push_back(parse_cell(cells[0], row_index, 0));
    std::vector<double> vals;
    for (std::size_t j = 1; j < cells.size(); ++j) {
      vals.push_back(parse_cell(cells[j], row_index, j));
    }
    rows.push_back(std::move(vals));
    ++row_index;
  }
  if (rows.size() < 2) {
    throw ConfigError("tabulated CSV: need at least 2 x nodes");
  }

  data.values.resize(static_cast<Eigen::Index>(rows.size()),
                     static_cast<Eigen::Index>(data.y_nodes.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      data.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
  }
  return data;
}

void write_tabulated_csv(const std::filesystem::path& path, const std::vector<double>& x_nodes,
                         const std::vector<double>& y_nodes, const Eigen::MatrixXd& values) {
  std::string out = "x\\y";
  for (double y : y_nodes) {
    out += ',';
    out += format_double(y);
  }
  out += '\n';
  for (std::size_t i = 0; i < x_nodes.size(); ++i) {
    out += format_double(x_nodes[i]);
    for (std::size_t j = 0; j < y_nodes.size(); ++j) {
      out += ',';
      out += format_double(values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
    }
    out += '\n';
  }
  write_text_file(path, out);
}

void write_csv_table(const std::filesystem::path& path, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows) {
  std::string out;
  for (std::size_t j = 0; j < header.size(); ++j) {
    if (j > 0) out += ',';
    out += header[j];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out += ',';
      if (!std::isnan(row[j])) out += format_double(row[j]);
    }
    out += '\n';
  }
  write_text_file(path, out);
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot write '" + path.string() + "'");
  }
  out << content;
  if (!out) {
    throw IoError("failed while writing '" + path.string() + "'");
  }
}

}  // namespace septensor
