#pragma once

#include <Eigen/Core>
#include <filesystem>
#include <string>
#include <vector>

namespace septensor {

// Matrix-with-axes payload of the tabulated CSV format. The header row reads
// "x\y, y1, y2, ..."; each data row starts with an x node followed by the
// function values along that row.
struct TabulatedData {
  std::vector<double> x_nodes;
  std::vector<double> y_nodes;
  Eigen::MatrixXd values;  // values(i, j) = f(x_nodes[i], y_nodes[j])
};

/// Parses the tabulated format. Throws IoError when the file cannot be read
/// and ConfigError with a row/column diagnostic on malformed content
/// (ragged rows, non-numeric cells, missing header).
TabulatedData read_tabulated_csv(const std::filesystem::path& path);

void write_tabulated_csv(const std::filesystem::path& path, const std::vector<double>& x_nodes,
                         const std::vector<double>& y_nodes, const Eigen::MatrixXd& values);

/// Plain table writer: one header line, then rows of round-trip formatted
/// numbers. An empty cell is written for NaN entries.
void write_csv_table(const std::filesystem::path& path, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows);

void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace septensor
