#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace risim {

// Fixed 9-significant-digit rendering so identical runs produce
// byte-identical files.
std::string format_number(double v);

// Writes via a temp file in the same directory plus rename.
void write_text_atomic(const std::string& path, const std::string& content);

// UTF-8, comma separated, LF line endings, header row first.
void write_csv_atomic(const std::string& path,
                      const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows);

// Complex matrix as "re,im" cell pairs, row-major, with a header row.
void write_complex_matrix_csv(const std::string& path,
                              const Eigen::MatrixXcd& m);

}  // namespace risim
