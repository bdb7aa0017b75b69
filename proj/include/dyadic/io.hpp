#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "dyadic/grid.hpp"
#include "dyadic/haar.hpp"
#include "json.hpp"

namespace dyadic::io {

/// {"depth": [J1, J2], "values": [...]} with values row-major (s rows, t columns).
nlohmann::json function_to_json(const GridFunction2D& f);
GridFunction2D function_from_json(const nlohmann::json& j);

/// {"depth": [J1, J2], "coefficients": [...]}: the heap matrix, row-major.
nlohmann::json spectrum_to_json(const HaarSpectrum2D& c);
HaarSpectrum2D spectrum_from_json(const nlohmann::json& j);

nlohmann::json read_json(const std::filesystem::path& path);
/// Written to a sibling temporary file and renamed over the target.
void write_atomic(const std::filesystem::path& path, const std::string& contents);
std::string dump(const nlohmann::json& j);

GridFunction2D load_function(const std::filesystem::path& path);
void save_function(const std::filesystem::path& path, const GridFunction2D& f);
HaarSpectrum2D load_spectrum(const std::filesystem::path& path);
void save_spectrum(const std::filesystem::path& path, const HaarSpectrum2D& c);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  class Row {
   public:
    Row& operator<<(double v);
    Row& operator<<(int v);
    Row& operator<<(const std::string& v);
    Row& operator<<(const char* v) { return *this << std::string(v); }

   private:
    friend class CsvTable;
    explicit Row(std::vector<std::string>& cells) : cells_(cells) {}
    std::vector<std::string>& cells_;
  };

  /// Starts a new row; fill it with operator<<.
  Row row();
  const std::vector<std::string>& header() const noexcept { return header_; }
  std::size_t size() const noexcept { return rows_.size(); }
  std::string to_string() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace dyadic::io
