#include "fracdq_app/output.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

namespace fracdq::app {
namespace {

void write_atomically(const std::filesystem::path& path, const std::string& content) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (path.has_parent_path()) {
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create directory", path.parent_path());
  }
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing", tmp);
    out << content;
    out.flush();
    if (!out) throw IoError("write failed", tmp);
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot rename into place", path);
  }
}

}  // namespace

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string csv_line(const CsvRow& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) line += ',';
    line += cells[i];
  }
  return line;
}

void emit_csv(const std::filesystem::path& path, const CsvRow& header,
              const std::vector<CsvRow>& rows) {
  std::string content;
  if (!header.empty()) content += csv_line(header) + '\n';
  for (const auto& r : rows) content += csv_line(r) + '\n';
  write_atomically(path, content);
}

void emit_matrix_csv(const std::filesystem::path& path, const DenseMatrix& m) {
  std::vector<CsvRow> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (double v : m.row(i)) rows[i].push_back(format_real(v));
  }
  emit_csv(path, {}, rows);
}

void emit_json(const std::filesystem::path& path, const nlohmann::json& doc) {
  write_atomically(path, doc.dump(2) + '\n');
}

std::vector<CsvRow> read_csv(const std::filesystem::path& path) {
  std::istringstream in(read_text(path));
  std::vector<CsvRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    CsvRow row;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) row.push_back(cell);
    if (!line.empty() && line.back() == ',') row.emplace_back();
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading", path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace fracdq::app
