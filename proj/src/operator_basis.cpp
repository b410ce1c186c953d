#include "qbloch/operator_basis.hpp"

#include <cctype>
#include <stdexcept>

namespace qbloch {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_level(int k, int d, const char* where) {
  if (k < 1 || k > d) {
    throw std::out_of_range(std::string(where) + ": level " + std::to_string(k) +
                            " out of range for dimension " + std::to_string(d));
  }
}

}  // namespace

PairIndex::PairIndex(int a, int b) {
  if (a == b) throw std::invalid_argument("PairIndex: levels must differ");
  if (a < 1 || b < 1) throw std::invalid_argument("PairIndex: levels are 1-based");
  i = std::min(a, b);
  j = std::max(a, b);
}

GeneratorId GeneratorId::O(int k) {
  if (k < 1) throw std::invalid_argument("GeneratorId::O: level is 1-based");
  GeneratorId id;
  id.kind = GeneratorKind::O;
  id.level = k;
  return id;
}

std::string GeneratorId::name() const {
  switch (kind) {
    case GeneratorKind::A:
      return "A" + std::to_string(pair.i) + std::to_string(pair.j);
    case GeneratorKind::B:
      return "B" + std::to_string(pair.i) + std::to_string(pair.j);
    case GeneratorKind::C:
      return "C" + std::to_string(pair.i) + std::to_string(pair.j);
    case GeneratorKind::O:
      return "O" + std::to_string(level);
  }
  return {};
}

std::optional<GeneratorId> GeneratorId::parse(std::string_view text) {
  if (text.size() < 2) return std::nullopt;
  const char kind_ch = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  for (std::size_t k = 1; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) return std::nullopt;
  }
  if (kind_ch == 'O') {
    if (text.size() != 2) return std::nullopt;
    const int level = text[1] - '0';
    if (level < 1 || level > kMaxDim) return std::nullopt;
    return GeneratorId::O(level);
  }
  if (text.size() != 3) return std::nullopt;
  const int a = text[1] - '0';
  const int b = text[2] - '0';
  if (a < 1 || b < 1 || a > kMaxDim || b > kMaxDim || a == b) return std::nullopt;
  switch (kind_ch) {
    case 'A':
      return GeneratorId::A(a, b);
    case 'B':
      return GeneratorId::B(a, b);
    case 'C':
      return GeneratorId::C(a, b);
    default:
      return std::nullopt;
  }
}

ComplexMatrix basis_operator(const GeneratorId& id, int d) {
  if (d < 2 || d > kMaxDim) {
    throw std::invalid_argument("basis_operator: dimension must be in [2, " +
                                std::to_string(kMaxDim) + "]");
  }
  ComplexMatrix m(d);
  switch (id.kind) {
    case GeneratorKind::O:
      require_level(id.level, d, "basis_operator");
      m(id.level - 1, id.level - 1) = 1.0;
      break;
    case GeneratorKind::A:
      require_level(id.pair.j, d, "basis_operator");
      m(id.pair.i - 1, id.pair.j - 1) = 1.0;
      m(id.pair.j - 1, id.pair.i - 1) = 1.0;
      break;
    case GeneratorKind::B:
      require_level(id.pair.j, d, "basis_operator");
      m(id.pair.i - 1, id.pair.j - 1) = -kI;
      m(id.pair.j - 1, id.pair.i - 1) = kI;
      break;
    case GeneratorKind::C:
      require_level(id.pair.j, d, "basis_operator");
      m(id.pair.i - 1, id.pair.i - 1) = 1.0;
      m(id.pair.j - 1, id.pair.j - 1) = -1.0;
      break;
  }
  return m;
}

const std::array<GeneratorId, 9>& qutrit_generators() {
  static const std::array<GeneratorId, 9> gens = {
      GeneratorId::A(1, 2), GeneratorId::B(1, 2), GeneratorId::C(1, 2),
      GeneratorId::A(1, 3), GeneratorId::B(1, 3), GeneratorId::C(1, 3),
      GeneratorId::A(2, 3), GeneratorId::B(2, 3), GeneratorId::C(2, 3),
  };
  return gens;
}

CommutatorTable commutator_table() {
  const auto& gens = qutrit_generators();
  std::array<ComplexMatrix, 9> mats;
  for (int k = 0; k < 9; ++k) mats[k] = basis_operator(gens[k], 3);

  CommutatorTable table;
  for (int r = 0; r < 9; ++r) {
    for (int c = 0; c < 9; ++c) {
      const ComplexMatrix comm = commutator(mats[r], mats[c]);
      CommutatorEntry entry;
      if (comm.max_abs() > 1e-14) {
        bool matched = false;
        for (int k = 0; k < 9 && !matched; ++k) {
          const Complex coeff = trace_inner(mats[k], comm) / trace_inner(mats[k], mats[k]);
          if ((comm - coeff * mats[k]).max_abs() <= 1e-12) {
            entry.coeff = coeff;
            entry.op = gens[k];
            matched = true;
          }
        }
        if (!matched) {
          throw std::runtime_error("commutator_table: [" + gens[r].name() + ", " +
                                   gens[c].name() + "] is not a single basis operator");
        }
      }
      table[r][c] = entry;
    }
  }
  return table;
}

namespace {

// One table cell as written: multiple of i times a named operator.
struct RefCell {
  int mult;  // 0, +-1, +-2
  const char* op;
};

// Rows/columns ordered A12, B12, C12, A13, B13, C13, A23, B23, C23.
constexpr RefCell kRefTable[9][9] = {
    // A12
    {{0, ""}, {2, "C12"}, {-2, "B12"}, {1, "B23"}, {-1, "A23"}, {-1, "B12"}, {1, "B13"},
     {-1, "A13"}, {1, "B12"}},
    // B12
    {{-2, "C12"}, {0, ""}, {2, "A12"}, {1, "A23"}, {1, "B23"}, {1, "A12"}, {-1, "A13"},
     {-1, "B13"}, {-1, "A12"}},
    // C12
    {{2, "B12"}, {-2, "A12"}, {0, ""}, {1, "B13"}, {-1, "A13"}, {0, ""}, {-1, "B23"},
     {1, "A23"}, {0, ""}},
    // A13
    {{-1, "B23"}, {-1, "A23"}, {-1, "B13"}, {0, ""}, {2, "C13"}, {-2, "B13"}, {1, "B12"},
     {1, "A12"}, {-1, "B13"}},
    // B13
    {{1, "A23"}, {-1, "B23"}, {1, "A13"}, {-2, "C13"}, {0, ""}, {2, "A13"}, {-1, "A12"},
     {1, "B12"}, {1, "A13"}},
    // C13
    {{1, "B12"}, {-1, "A12"}, {0, ""}, {2, "B13"}, {-2, "A13"}, {0, ""}, {1, "B23"},
     {-1, "A23"}, {0, ""}},
    // A23
    {{-1, "B13"}, {1, "A13"}, {1, "B23"}, {-1, "B12"}, {1, "A12"}, {-1, "B23"}, {0, ""},
     {2, "C23"}, {-2, "B23"}},
    // B23
    {{1, "A13"}, {1, "B13"}, {-1, "A23"}, {-1, "A12"}, {-1, "B12"}, {1, "A23"}, {-2, "C23"},
     {0, ""}, {2, "A23"}},
    // C23
    {{-1, "B12"}, {1, "A12"}, {0, ""}, {1, "B13"}, {-1, "A13"}, {0, ""}, {2, "B23"},
     {-2, "A23"}, {0, ""}},
};

}  // namespace

const CommutatorTable& commutator_table_reference() {
  static const CommutatorTable table = [] {
    CommutatorTable t;
    for (int r = 0; r < 9; ++r) {
      for (int c = 0; c < 9; ++c) {
        const RefCell& cell = kRefTable[r][c];
        CommutatorEntry entry;
        if (cell.mult != 0) {
          entry.coeff = Complex{0.0, static_cast<double>(cell.mult)};
          entry.op = GeneratorId::parse(cell.op);
          if (!entry.op) throw std::logic_error("commutator_table_reference: bad operator name");
        }
        t[r][c] = entry;
      }
    }
    return t;
  }();
  return table;
}

std::vector<CyclicTriple> cyclic_triples() {
  std::vector<CyclicTriple> triples;
  for (const auto& [i, j] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
    triples.push_back({{GeneratorId::A(i, j), GeneratorId::B(i, j), GeneratorId::C(i, j)}, 2.0});
  }
  triples.push_back({{GeneratorId::A(1, 2), GeneratorId::A(1, 3), GeneratorId::B(2, 3)}, 1.0});
  triples.push_back({{GeneratorId::A(1, 2), GeneratorId::A(2, 3), GeneratorId::B(1, 3)}, 1.0});
  triples.push_back({{GeneratorId::A(1, 3), GeneratorId::A(2, 3), GeneratorId::B(1, 2)}, 1.0});
  triples.push_back({{GeneratorId::B(1, 2), GeneratorId::B(1, 3), GeneratorId::B(2, 3)}, 1.0});

  for (const CyclicTriple& t : triples) {
    for (int k = 0; k < 3; ++k) {
      const ComplexMatrix x = basis_operator(t.ops[k], 3);
      const ComplexMatrix y = basis_operator(t.ops[(k + 1) % 3], 3);
      const ComplexMatrix z = basis_operator(t.ops[(k + 2) % 3], 3);
      const ComplexMatrix residual = commutator(x, y) - (t.multiplier * kI) * z;
      if (residual.max_abs() > 1e-12) {
        throw std::logic_error("cyclic_triples: triple starting at " + t.ops[0].name() +
                               " is not cyclic");
      }
    }
  }
  return triples;
}

Spin1Matrices spin1_matrices() {
  Spin1Matrices s{basis_operator(GeneratorId::A(2, 3), 3), basis_operator(GeneratorId::B(1, 2), 3),
                  basis_operator(GeneratorId::A(1, 3), 3)};
  const ComplexMatrix* ops[3] = {&s.sx, &s.sy, &s.sz};
  for (int k = 0; k < 3; ++k) {
    const ComplexMatrix residual =
        commutator(*ops[k], *ops[(k + 1) % 3]) - kI * (*ops[(k + 2) % 3]);
    if (residual.max_abs() > 1e-12) {
      throw std::logic_error("spin1_matrices: commutation relations violated");
    }
    const std::vector<double> spectrum = eigenvalues_hermitian(*ops[k]);
    if (std::abs(spectrum[0] + 1.0) > 1e-12 || std::abs(spectrum[1]) > 1e-12 ||
        std::abs(spectrum[2] - 1.0) > 1e-12) {
      throw std::logic_error("spin1_matrices: spectrum is not {-1, 0, 1}");
    }
  }
  return s;
}

std::vector<IdentityCheck> countertwisting_identities(double tol) {
  std::vector<IdentityCheck> checks;
  auto op = [](const GeneratorId& id) { return basis_operator(id, 3); };
  auto add = [&](std::string name, const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    const double res = (lhs - rhs).max_abs();
    checks.push_back({std::move(name), res, res <= tol});
  };

  add("{B12,A13} = -B23", anticommutator(op(GeneratorId::B(1, 2)), op(GeneratorId::A(1, 3))),
      -1.0 * op(GeneratorId::B(2, 3)));
  add("{B12,A23} = B13", anticommutator(op(GeneratorId::B(1, 2)), op(GeneratorId::A(2, 3))),
      op(GeneratorId::B(1, 3)));
  add("{A13,A23} = A12", anticommutator(op(GeneratorId::A(1, 3)), op(GeneratorId::A(2, 3))),
      op(GeneratorId::A(1, 2)));

  const ComplexMatrix eye = ComplexMatrix::identity(3);
  for (const auto& [i, j] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
    const int k = 6 - i - j;
    const ComplexMatrix target = eye - op(GeneratorId::O(k));
    for (const GeneratorId& id :
         {GeneratorId::A(i, j), GeneratorId::B(i, j), GeneratorId::C(i, j)}) {
      const ComplexMatrix sq = op(id) * op(id);
      add(id.name() + "^2 = I - O" + std::to_string(k), sq, target);
    }
  }
  return checks;
}

}  // namespace qbloch
