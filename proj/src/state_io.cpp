#include "qbloch/state_io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace qbloch {

namespace {

using nlohmann::json;

double number_at(const json& node, const std::string& where) {
  if (!node.is_number()) throw StateIoError(where + " must be a number");
  return node.get<double>();
}

ComplexMatrix parse_rho(const json& node, int d, const std::string& origin) {
  if (!node.is_array() || node.size() != static_cast<std::size_t>(d)) {
    throw StateIoError(origin + ": rho must be an array of " + std::to_string(d) + " rows");
  }
  ComplexMatrix rho(d);
  for (int r = 0; r < d; ++r) {
    const json& row = node[r];
    const std::string row_where = origin + ": rho[" + std::to_string(r) + "]";
    if (!row.is_array() || row.size() != static_cast<std::size_t>(d)) {
      throw StateIoError(row_where + " must be an array of " + std::to_string(d) + " entries");
    }
    for (int c = 0; c < d; ++c) {
      const json& cell = row[c];
      const std::string cell_where = row_where + "[" + std::to_string(c) + "]";
      if (!cell.is_array() || cell.size() != 2) {
        throw StateIoError(cell_where + " must be a [re, im] pair");
      }
      rho(r, c) = Complex{number_at(cell[0], cell_where + "[0]"),
                          number_at(cell[1], cell_where + "[1]")};
    }
  }
  return rho;
}

std::vector<double> parse_real_array(const json& node, std::size_t count,
                                     const std::string& where) {
  if (!node.is_array() || node.size() != count) {
    throw StateIoError(where + " must be an array of " + std::to_string(count) + " numbers");
  }
  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k) {
    out[k] = number_at(node[k], where + "[" + std::to_string(k) + "]");
  }
  return out;
}

QuditCoefficients parse_coefficients(const json& node, int d, const std::string& origin) {
  if (!node.is_object()) throw StateIoError(origin + ": coefficients must be an object");
  for (const char* key : {"omega", "alpha", "beta"}) {
    if (!node.contains(key)) {
      throw StateIoError(origin + ": coefficients is missing key \"" + key + "\"");
    }
  }
  const std::size_t npairs = qudit_pairs(d).size();
  QuditCoefficients c;
  c.d = d;
  c.omega = parse_real_array(node["omega"], d, origin + ": coefficients.omega");
  c.alpha = parse_real_array(node["alpha"], npairs, origin + ": coefficients.alpha");
  c.beta = parse_real_array(node["beta"], npairs, origin + ": coefficients.beta");
  return c;
}

const char* pad(int indent) { return indent > 0 ? "  " : ""; }

}  // namespace

StateFile parse_state_json(const std::string& text, const std::string& origin) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw StateIoError(origin + ": " + e.what());
  }
  if (!root.is_object()) throw StateIoError(origin + ": top level must be a JSON object");

  const bool has_rho = root.contains("rho");
  const bool has_coeffs = root.contains("coefficients");
  if (has_rho == has_coeffs) {
    throw StateIoError(origin + ": exactly one of \"rho\" or \"coefficients\" is required");
  }

  int d = 3;
  if (root.contains("d")) {
    const json& dn = root["d"];
    if (!dn.is_number_integer()) throw StateIoError(origin + ": d must be an integer");
    d = dn.get<int>();
  } else if (has_rho && root["rho"].is_array()) {
    d = static_cast<int>(root["rho"].size());
  } else if (has_coeffs && root["coefficients"].is_object() &&
             root["coefficients"].contains("omega") &&
             root["coefficients"]["omega"].is_array()) {
    d = static_cast<int>(root["coefficients"]["omega"].size());
  }
  if (d < 2 || d > kMaxDim) {
    throw StateIoError(origin + ": d must be in [2, " + std::to_string(kMaxDim) + "], got " +
                       std::to_string(d));
  }

  StateFile state;
  state.d = d;
  if (has_rho) {
    state.rho = parse_rho(root["rho"], d, origin);
  } else {
    state.coefficients = parse_coefficients(root["coefficients"], d, origin);
  }
  return state;
}

StateFile read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw StateIoError(path.string() + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_state_json(buffer.str(), path.string());
}

ComplexMatrix state_matrix(const StateFile& state) {
  if (state.rho) return *state.rho;
  return reconstruct_qudit(*state.coefficients);
}

QuditCoefficients state_coefficients(const StateFile& state, double herm_tol, double trace_tol) {
  if (state.coefficients) return *state.coefficients;
  return decompose_qudit(*state.rho, herm_tol, trace_tol);
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void write_rho_json(std::ostream& os, const ComplexMatrix& rho, int indent) {
  const char* nl = indent > 0 ? "\n" : "";
  os << "{" << nl << pad(indent) << "\"d\": " << rho.dim() << "," << nl << pad(indent)
     << "\"rho\": [";
  for (int r = 0; r < rho.dim(); ++r) {
    if (r > 0) os << ", ";
    os << "[";
    for (int c = 0; c < rho.dim(); ++c) {
      if (c > 0) os << ", ";
      os << "[" << fmt17(rho(r, c).real()) << ", " << fmt17(rho(r, c).imag()) << "]";
    }
    os << "]";
  }
  os << "]" << nl << "}" << nl;
}

void write_coefficients_json(std::ostream& os, const QuditCoefficients& c, int indent) {
  const char* nl = indent > 0 ? "\n" : "";
  auto list = [&os](const std::vector<double>& values) {
    os << "[";
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (k > 0) os << ", ";
      os << fmt17(values[k]);
    }
    os << "]";
  };
  os << "{" << nl << pad(indent) << "\"d\": " << c.d << "," << nl << pad(indent)
     << "\"coefficients\": {\"omega\": ";
  list(c.omega);
  os << ", \"alpha\": ";
  list(c.alpha);
  os << ", \"beta\": ";
  list(c.beta);
  os << "}" << nl << "}" << nl;
}

}  // namespace qbloch
