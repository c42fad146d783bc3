#include "rbnlab/io.hpp"

#include <charconv>
#include <fstream>

#include "rbnlab/version.hpp"

namespace rbnlab {

namespace {

nlohmann::ordered_json parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open " + path.string());
  }
  try {
    return nlohmann::ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  out << text;
}

}  // namespace

DensityMatrix load_state_json(const std::filesystem::path& path) {
  const nlohmann::ordered_json doc = parse_file(path);
  if (!doc.is_object() || !doc.contains("dims") || !doc.contains("matrix")) {
    throw ParseError(path.string() + ": expected keys 'dims' and 'matrix'");
  }
  const auto& dims = doc["dims"];
  if (!dims.is_array() || dims.size() != 2 || !dims[0].is_number_integer() ||
      !dims[1].is_number_integer()) {
    throw ParseError(path.string() + ": 'dims' must be two integers");
  }
  const int da = dims[0].get<int>();
  const int db = dims[1].get<int>();
  if (da < 1 || db < 1) {
    throw ParseError(path.string() + ": dimensions must be positive");
  }
  const int n = da * db;
  const auto& rows = doc["matrix"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
    throw ParseError(path.string() + ": 'matrix' must have dA*dB rows");
  }
  Cmat m(n, n);
  for (int i = 0; i < n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw ParseError(path.string() + ": matrix rows must have dA*dB entries");
    }
    for (int j = 0; j < n; ++j) {
      const auto& entry = row[j];
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number()) {
        throw ParseError(path.string() +
                         ": matrix entries must be [re, im] number pairs");
      }
      m(i, j) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  return DensityMatrix(da, db, std::move(m));
}

void save_state_json(const DensityMatrix& rho,
                     const std::filesystem::path& path) {
  nlohmann::ordered_json doc;
  doc["dims"] = {rho.dim_a(), rho.dim_b()};
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int i = 0; i < rho.dim(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int j = 0; j < rho.dim(); ++j) {
      const Complex v = rho.matrix()(i, j);
      row.push_back({v.real(), v.imag()});
    }
    rows.push_back(std::move(row));
  }
  doc["matrix"] = std::move(rows);
  write_text(path, doc.dump(2) + "\n");
}

std::string format_double(double x) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x,
                                 std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::invalid_argument("row width does not match column count");
  }
  rows.push_back(std::move(row));
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      if (const double* d = std::get_if<double>(&row[c])) {
        out += format_double(*d);
      } else if (const std::string* s = std::get_if<std::string>(&row[c])) {
        out += *s;
      }
    }
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json to_json(const Table& table) {
  nlohmann::ordered_json doc;
  doc["columns"] = table.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (const double* d = std::get_if<double>(&row[c])) {
        obj[table.columns[c]] = *d;
      } else if (const std::string* s = std::get_if<std::string>(&row[c])) {
        obj[table.columns[c]] = *s;
      } else {
        obj[table.columns[c]] = nullptr;
      }
    }
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  return doc;
}

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown format '" + name + "' (csv|json)");
}

std::string_view format_name(OutputFormat format) {
  return format == OutputFormat::Csv ? "csv" : "json";
}

void write_table(const Table& table, const std::filesystem::path& path,
                 OutputFormat format) {
  if (format == OutputFormat::Csv) {
    write_text(path, to_csv(table));
  } else {
    write_text(path, to_json(table).dump(2) + "\n");
  }
}

std::filesystem::path manifest_path_for(const std::filesystem::path& output) {
  std::filesystem::path p = output;
  p += ".manifest.json";
  return p;
}

void write_manifest(const RunManifest& manifest) {
  nlohmann::ordered_json doc;
  doc["command"] = manifest.command;
  doc["params"] = manifest.params;
  doc["seed"] = manifest.seed;
  doc["rng"] = manifest.rng;
  doc["version"] = manifest.version;
  doc["duration_seconds"] = manifest.duration_seconds;
  doc["output"] = manifest.output;
  write_text(manifest_path_for(manifest.output), doc.dump(2) + "\n");
}

RunManifest load_manifest(const std::filesystem::path& path) {
  const nlohmann::ordered_json doc = parse_file(path);
  RunManifest m;
  try {
    m.command = doc.at("command").get<std::string>();
    m.params = doc.at("params");
    m.seed = doc.at("seed").get<std::uint64_t>();
    m.rng = doc.at("rng").get<std::string>();
    m.version = doc.at("version").get<std::string>();
    m.duration_seconds = doc.at("duration_seconds").get<double>();
    m.output = doc.at("output").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return m;
}

}  // namespace rbnlab
