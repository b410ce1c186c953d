#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qbloch/linalg.hpp"

namespace qbloch {

inline constexpr int kMaxDim = 8;

// Level pair (i, j), 1-based with i < j. Construction normalizes a swapped
// pair, so (2,1) and (1,2) name the same object.
struct PairIndex {
  int i = 1;
  int j = 2;

  PairIndex() = default;
  PairIndex(int a, int b);
  bool operator==(const PairIndex&) const = default;

  // The remaining level of a three-level system.
  int complement3() const { return 6 - i - j; }
};

enum class GeneratorKind { A, B, C, O };

// Names one element of the operator family: symmetric A_ij, antisymmetric
// B_ij, diagonal difference C_ij, or projector O_k.
struct GeneratorId {
  GeneratorKind kind = GeneratorKind::A;
  PairIndex pair{1, 2};
  int level = 0;  // O only

  static GeneratorId A(int i, int j) { return {GeneratorKind::A, PairIndex(i, j), 0}; }
  static GeneratorId B(int i, int j) { return {GeneratorKind::B, PairIndex(i, j), 0}; }
  static GeneratorId C(int i, int j) { return {GeneratorKind::C, PairIndex(i, j), 0}; }
  static GeneratorId O(int k);

  bool operator==(const GeneratorId&) const = default;
  std::string name() const;  // "A12", "C23", "O1", ...

  // Accepts names like "A12", "b13", "A21" (normalized), "O2".
  static std::optional<GeneratorId> parse(std::string_view text);
};

// The d x d matrix for a basis element:
//   A_ij = |i><j| + |j><i|
//   B_ij = -i|i><j| + i|j><i|
//   O_k  = |k><k|
//   C_ij = O_i - O_j   (equivalently -i/2 [A_ij, B_ij])
ComplexMatrix basis_operator(const GeneratorId& id, int d = 3);

// The nine qutrit dynamics generators in the fixed order
// A12, B12, C12, A13, B13, C13, A23, B23, C23.
const std::array<GeneratorId, 9>& qutrit_generators();

struct CommutatorEntry {
  Complex coeff{0.0, 0.0};
  std::optional<GeneratorId> op;  // nullopt <=> the commutator vanishes
};
using CommutatorTable = std::array<std::array<CommutatorEntry, 9>, 9>;

// [G, H] expanded as coeff * single basis operator, computed by direct
// matrix arithmetic for every ordered pair of the nine generators.
CommutatorTable commutator_table();

// Hardcoded transcription of the same table, kept separate so that the
// computed version can be checked against it (and vice versa).
const CommutatorTable& commutator_table_reference();

// Ordered triple with [X,Y] = multiplier*i*Z cyclically.
struct CyclicTriple {
  std::array<GeneratorId, 3> ops;
  double multiplier;
};

// The three su(2)-like triples {A_ij, B_ij, C_ij} (multiplier 2) followed by
// the four extra triples (multiplier 1). Each is verified by direct
// computation at construction.
std::vector<CyclicTriple> cyclic_triples();

struct Spin1Matrices {
  ComplexMatrix sx, sy, sz;  // A_23, B_12, A_13
};

// Spin-1 operators in the basis of their zero-eigenvalue vectors. Verifies
// the cyclic commutation relations and the {-1, 0, 1} spectra.
Spin1Matrices spin1_matrices();

struct IdentityCheck {
  std::string name;
  double residual;  // elementwise infinity norm of (lhs - rhs)
  bool pass;
};

// The three anticommutator identities {B12,A13}=-B23, {B12,A23}=B13,
// {A13,A23}=A12 plus the nine squares A_ij^2 = B_ij^2 = C_ij^2 = I - O_k.
std::vector<IdentityCheck> countertwisting_identities(double tol = tol::kBasisIdentity);

}  // namespace qbloch
