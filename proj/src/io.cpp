#include "dyadic/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include "dyadic/error.hpp"

namespace dyadic::io {

namespace {

Depth depth_from_json(const nlohmann::json& j) {
  if (!j.contains("depth") || !j["depth"].is_array() || j["depth"].size() != 2) {
    throw ValidationError("expected \"depth\": [J1, J2]");
  }
  for (const auto& v : j["depth"]) {
    if (!v.is_number_integer()) throw ValidationError("depth entries must be integers");
  }
  const Depth d{j["depth"][0].get<int>(), j["depth"][1].get<int>()};
  validate_depth(d);
  return d;
}

std::vector<double> numbers_from_json(const nlohmann::json& j, const char* key, std::size_t expected) {
  if (!j.contains(key) || !j[key].is_array()) throw ValidationError(std::string("expected array \"") + key + "\"");
  const auto& arr = j[key];
  if (arr.size() != expected) {
    throw ValidationError(std::string("\"") + key + "\" must hold " + std::to_string(expected) + " entries, got " +
                          std::to_string(arr.size()));
  }
  std::vector<double> out;
  out.reserve(expected);
  for (const auto& v : arr) {
    if (!v.is_number()) throw NonFiniteError(std::string("non-numeric entry in \"") + key + "\"");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

nlohmann::json function_to_json(const GridFunction2D& f) {
  return {{"depth", {f.depth().s, f.depth().t}}, {"values", f.values()}};
}

GridFunction2D function_from_json(const nlohmann::json& j) {
  const Depth d = depth_from_json(j);
  return {d, numbers_from_json(j, "values", static_cast<std::size_t>(d.cell_count()))};
}

nlohmann::json spectrum_to_json(const HaarSpectrum2D& c) {
  const auto m = c.heap_matrix();
  return {{"depth", {c.depth().s, c.depth().t}}, {"coefficients", std::vector<double>(m.begin(), m.end())}};
}

HaarSpectrum2D spectrum_from_json(const nlohmann::json& j) {
  const Depth d = depth_from_json(j);
  return {d, numbers_from_json(j, "coefficients", static_cast<std::size_t>(d.cell_count()))};
}

nlohmann::json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

void write_atomic(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) throw ValidationError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw ValidationError("cannot rename onto " + path.string() + ": " + ec.message());
  }
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

GridFunction2D load_function(const std::filesystem::path& path) { return function_from_json(read_json(path)); }

void save_function(const std::filesystem::path& path, const GridFunction2D& f) {
  write_atomic(path, dump(function_to_json(f)));
}

HaarSpectrum2D load_spectrum(const std::filesystem::path& path) { return spectrum_from_json(read_json(path)); }

void save_spectrum(const std::filesystem::path& path, const HaarSpectrum2D& c) {
  write_atomic(path, dump(spectrum_to_json(c)));
}

std::string format_double(double v) {
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) throw ValidationError("cannot format value");
  return {buf.data(), end};
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

CsvTable::Row& CsvTable::Row::operator<<(double v) {
  cells_.push_back(format_double(v));
  return *this;
}

CsvTable::Row& CsvTable::Row::operator<<(int v) {
  cells_.push_back(std::to_string(v));
  return *this;
}

CsvTable::Row& CsvTable::Row::operator<<(const std::string& v) {
  if (v.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char ch : v) {
      if (ch == '"') quoted += '"';
      quoted += ch;
    }
    cells_.push_back(quoted + "\"");
  } else {
    cells_.push_back(v);
  }
  return *this;
}

CsvTable::Row CsvTable::row() {
  rows_.emplace_back();
  return Row(rows_.back());
}

std::string CsvTable::to_string() const {
  std::ostringstream out;
  const auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) out << (k ? "," : "") << cells[k];
    out << '\n';
  };
  line(header_);
  for (const auto& r : rows_) {
    if (r.size() != header_.size()) throw std::logic_error("csv row width does not match header");
    line(r);
  }
  return out.str();
}

}  // namespace dyadic::io
