#include "risim/export.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace risim {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

void write_text_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

void write_csv_atomic(const std::string& path,
                      const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
  std::string content;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) content += ',';
    content += header[i];
  }
  content += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) content += ',';
      content += row[i];
    }
    content += '\n';
  }
  write_text_atomic(path, content);
}

void write_complex_matrix_csv(const std::string& path,
                              const Eigen::MatrixXcd& m) {
  std::vector<std::string> header;
  for (int c = 0; c < m.cols(); ++c) {
    header.push_back("re" + std::to_string(c));
    header.push_back("im" + std::to_string(c));
  }
  std::vector<std::vector<std::string>> rows;
  rows.reserve(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    std::vector<std::string> row;
    row.reserve(2 * m.cols());
    for (int c = 0; c < m.cols(); ++c) {
      row.push_back(format_number(m(r, c).real()));
      row.push_back(format_number(m(r, c).imag()));
    }
    rows.push_back(std::move(row));
  }
  write_csv_atomic(path, header, rows);
}

}  // namespace risim
