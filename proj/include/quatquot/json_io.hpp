#pragma once

// Fixture ingestion ({"lattice_data": [[a, b], ...],
// "conformal_angles": [t, ...]}) with field-level diagnostics, plus the
// small formatting helpers shared by the command line reports.

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "quatquot/lattice.hpp"
#include "quatquot/toric.hpp"

namespace qq {

struct SchemaError : std::runtime_error {
  std::string pointer;

  SchemaError(std::string ptr, const std::string& message)
      : std::runtime_error(message + " (" + ptr + ")"), pointer(std::move(ptr)) {}
};

struct InputData {
  CombinatorialData s;
  ConformalData r;
};

InputData parse_input_text(const std::string& text);
InputData load_input(const std::string& path);

// Row-major array-of-arrays views used across the report schemas.
nlohmann::ordered_json json_rows(const IMat& m);
nlohmann::ordered_json json_rows(const std::vector<LatticeVec>& v);
nlohmann::ordered_json json_complex_list(const std::vector<std::complex<double>>& v);

// "x,y,det" lines with full round-trip precision.
std::string csv_grid(const std::vector<double>& xt, const std::vector<double>& yt,
                     const std::vector<double>& det);

}  // namespace qq
