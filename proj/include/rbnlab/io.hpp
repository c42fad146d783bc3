#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "rbnlab/matcore.hpp"

namespace rbnlab {

/// Thrown on malformed input files (JSON syntax or schema violations).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// State-file schema: {"dims": [dA, dB], "matrix": [[[re, im], ...], ...]}
/// row-major. Schema violations raise ParseError; a well-formed file holding
/// an unphysical matrix raises InvalidStateError from the DensityMatrix check.
DensityMatrix load_state_json(const std::filesystem::path& path);
void save_state_json(const DensityMatrix& rho, const std::filesystem::path& path);

/// Locale-independent formatting with 12 significant digits.
std::string format_double(double x);

/// Tabular output cell: blank, number, or text.
using Cell = std::variant<std::monostate, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

std::string to_csv(const Table& table);
nlohmann::ordered_json to_json(const Table& table);

enum class OutputFormat { Csv, Json };

OutputFormat parse_format(const std::string& name);
std::string_view format_name(OutputFormat format);

void write_table(const Table& table, const std::filesystem::path& path,
                 OutputFormat format);

/// Record of one CLI invocation, written next to every output file as
/// <output>.manifest.json. Re-running from a manifest reproduces the output
/// byte-for-byte (the duration field is informational only).
struct RunManifest {
  std::string command;
  nlohmann::ordered_json params;
  std::uint64_t seed = 0;
  std::string rng;
  std::string version;
  double duration_seconds = 0.0;
  std::string output;
};

std::filesystem::path manifest_path_for(const std::filesystem::path& output);
void write_manifest(const RunManifest& manifest);
RunManifest load_manifest(const std::filesystem::path& path);

}  // namespace rbnlab
