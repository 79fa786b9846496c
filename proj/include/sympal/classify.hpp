#pragma once

// Trichotomy for subgroups of GSp(V) containing a symplectic transvection:
// reducible, induced from orthogonal nonsingular blocks, or huge.

#include <string_view>
#include <variant>

#include "sympal/groupkit.hpp"

namespace sympal {

struct Reducible {
  Subspace witness;  // proper, nonzero, invariant under every generator
};

struct Induced {
  std::vector<Subspace> blocks;  // S_1, ..., S_h; blocks[0] is S_1
  std::size_t m = 0;             // block dimension
  std::size_t h = 0;             // block count, h * m = n
  /// action[k][i] = j when generator k maps S_i onto S_j.
  std::vector<std::vector<std::size_t>> action;
};

struct Huge {
  unsigned subfield_degree = 0;  // d with |H| = |Sp_n(ell^d)|
  std::uint64_t transvection_subgroup_order = 0;
};

using Classification = std::variant<Reducible, Induced, Huge>;

std::string_view case_name(const Classification& c) noexcept;

/// Requires ell >= 5 and a nontrivial transvection in G; cases are tested in the
/// order reducible, induced, huge.
Classification classify(const MatrixGroup& g, std::size_t cap = kDefaultCap);

/// The divisor d of the field degree with |H| = |Sp_n(ell^d)|; throws NoOrderMatch.
unsigned recognize_sp_over_subfield(const MatrixGroup& h, std::size_t cap = kDefaultCap);

/// classify(g) is Huge, cross-checked against |Sp_n(ell)| <= |H|.
bool is_huge(const MatrixGroup& g, std::size_t cap = kDefaultCap);

/// Checks every witness invariant of the verdict; throws WitnessCheckFailed.
void verify_classification(const MatrixGroup& g, const Classification& c);

struct InductionData {
  std::vector<Matrix> stabilizer_generators;  // generate the stabiliser of S_1
  std::vector<Matrix> block_action;           // their m x m matrices on S_1's basis
  std::vector<Matrix> transversal;            // transversal[i] S_1 = S_i, transversal[0] = I
  std::uint64_t index = 0;                    // (G : stabiliser), equal to h
  std::uint64_t stabilizer_order = 0;
};

/// Stabiliser of the first block and its action there; verifies the index and
/// that the induced character of the block action is the character of G on V.
InductionData extract_induction(const MatrixGroup& g, const Induced& verdict, std::size_t cap = kDefaultCap);

}  // namespace sympal
