#include "quatquot/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace qq {

namespace {

using nlohmann::ordered_json;

long long integer_at(const ordered_json& j, const std::string& ptr) {
  if (!j.is_number_integer()) {
    throw SchemaError(ptr, "expected an integer");
  }
  return j.get<long long>();
}

double number_at(const ordered_json& j, const std::string& ptr) {
  if (!j.is_number()) {
    throw SchemaError(ptr, "expected a number");
  }
  return j.get<double>();
}

}  // namespace

InputData parse_input_text(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("/", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw SchemaError("/", "expected a JSON object");
  }
  if (!j.contains("lattice_data")) {
    throw SchemaError("/lattice_data", "missing field");
  }
  if (!j.contains("conformal_angles")) {
    throw SchemaError("/conformal_angles", "missing field");
  }
  const ordered_json& ld = j["lattice_data"];
  const ordered_json& ca = j["conformal_angles"];
  if (!ld.is_array()) {
    throw SchemaError("/lattice_data", "expected an array of pairs");
  }
  if (!ca.is_array()) {
    throw SchemaError("/conformal_angles", "expected an array of numbers");
  }

  InputData in;
  for (std::size_t i = 0; i < ld.size(); ++i) {
    const std::string ptr = "/lattice_data/" + std::to_string(i);
    const ordered_json& row = ld[i];
    if (!row.is_array() || row.size() != 2) {
      throw SchemaError(ptr, "expected a pair [a, b]");
    }
    LatticeVec u;
    u.a = integer_at(row[0], ptr + "/0");
    u.b = integer_at(row[1], ptr + "/1");
    in.s.u.push_back(u);
  }
  for (std::size_t i = 0; i < ca.size(); ++i) {
    const std::string ptr = "/conformal_angles/" + std::to_string(i);
    in.r.theta.push_back(number_at(ca[i], ptr));
  }
  if (in.s.u.size() != in.r.theta.size()) {
    throw SchemaError("/conformal_angles",
                      "length differs from lattice_data (" +
                          std::to_string(in.r.theta.size()) + " vs " +
                          std::to_string(in.s.u.size()) + ")");
  }
  return in;
}

InputData load_input(const std::string& path) {
  std::ifstream f(path);
  if (!f) {
    throw SchemaError("/", "cannot open input file: " + path);
  }
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_input_text(buf.str());
}

nlohmann::ordered_json json_rows(const IMat& m) {
  ordered_json out = ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(m(r, c));
    }
    out.push_back(std::move(row));
  }
  return out;
}

nlohmann::ordered_json json_rows(const std::vector<LatticeVec>& v) {
  ordered_json out = ordered_json::array();
  for (const LatticeVec& u : v) {
    out.push_back(ordered_json::array({u.a, u.b}));
  }
  return out;
}

nlohmann::ordered_json json_complex_list(const std::vector<std::complex<double>>& v) {
  ordered_json out = ordered_json::array();
  for (const std::complex<double>& z : v) {
    out.push_back(ordered_json::array({z.real(), z.imag()}));
  }
  return out;
}

std::string csv_grid(const std::vector<double>& xt, const std::vector<double>& yt,
                     const std::vector<double>& det) {
  std::string out = "x,y,det\n";
  char line[96];
  for (std::size_t i = 0; i < det.size(); ++i) {
    std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g\n", xt[i], yt[i], det[i]);
    out += line;
  }
  return out;
}

}  // namespace qq
