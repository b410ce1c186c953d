#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "qbloch/qudit.hpp"

namespace qbloch {

// Malformed or unreadable state file; the message names the offending
// key/index.
class StateIoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parsed state file: a JSON object carrying either "rho" (d x d array of
// [re, im] pairs, row-major) or "coefficients" ({omega, alpha, beta} with the
// pair arrays in lexicographic order), plus an optional "d" (default 3).
struct StateFile {
  int d = 3;
  std::optional<ComplexMatrix> rho;
  std::optional<QuditCoefficients> coefficients;
};

StateFile read_state_file(const std::filesystem::path& path);
StateFile parse_state_json(const std::string& text, const std::string& origin);

// The matrix view of a state file (reconstructing from coefficients when
// necessary) and the coefficient view (decomposing when necessary).
ComplexMatrix state_matrix(const StateFile& state);
QuditCoefficients state_coefficients(const StateFile& state,
                                     double herm_tol = tol::kHermiticity,
                                     double trace_tol = tol::kTrace);

// 17-significant-digit rendering; round-trips any finite double.
std::string fmt17(double x);

// Writers; emitted numbers use fmt17.
void write_rho_json(std::ostream& os, const ComplexMatrix& rho, int indent = 0);
void write_coefficients_json(std::ostream& os, const QuditCoefficients& c, int indent = 0);

}  // namespace qbloch
