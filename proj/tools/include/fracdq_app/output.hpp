#ifndef FRACDQ_APP_OUTPUT_HPP
#define FRACDQ_APP_OUTPUT_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "fracdq/densela.hpp"
#include "fracdq/error.hpp"
#include "json.hpp"

namespace fracdq::app {

class IoError : public Error {
 public:
  IoError(const std::string& what, std::filesystem::path path)
      : Error(what + ": " + path.string()), path_(std::move(path)) {}
  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
};

using CsvRow = std::vector<std::string>;

/// %.15g: 15 significant digits, shortest form.
std::string format_real(double v);

/// Comma-joined line without trailing newline.
std::string csv_line(const CsvRow& cells);

/// Writes header (if non-empty) and rows through a temporary file renamed
/// into place. Throws IoError.
void emit_csv(const std::filesystem::path& path, const CsvRow& header,
              const std::vector<CsvRow>& rows);

/// Headerless numeric matrix.
void emit_matrix_csv(const std::filesystem::path& path, const DenseMatrix& m);

/// Pretty-printed JSON, written atomically. Throws IoError.
void emit_json(const std::filesystem::path& path, const nlohmann::json& doc);

/// Reads a CSV back into string cells (no quoting support). Throws IoError.
std::vector<CsvRow> read_csv(const std::filesystem::path& path);

/// Whole file contents. Throws IoError.
std::string read_text(const std::filesystem::path& path);

}  // namespace fracdq::app

#endif  // FRACDQ_APP_OUTPUT_HPP
