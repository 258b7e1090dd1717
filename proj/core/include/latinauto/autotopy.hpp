#ifndef LATINAUTO_AUTOTOPY_HPP
#define LATINAUTO_AUTOTOPY_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "latinauto/latin.hpp"
#include "latinauto/perm.hpp"

namespace latinauto {

/// Thrown when an exhaustive-search size guard trips without an override.
struct guard_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BoolMatrix {
  int n = 0;
  std::vector<std::uint8_t> bits;  // row-major
  bool at(int r, int c) const { return bits[(r - 1) * n + (c - 1)] != 0; }
};

/// One assembled row map together with the choices that produced it:
/// alpha sends k to 1 and i to the pivot row, and j is the column the
/// candidate isotopism was built from.
struct ThetaCandidate {
  Permutation alpha;
  int j = 0;
  int k = 0;
  int i = 0;
};

/// The pruned candidate matrix for one (pivot, i, j, k) choice. Cell (r, c)
/// survives iff alpha(r) = c is still possible. Rows are grouped by the
/// cycles of the conjugated quotient permutation, columns by the cycles of
/// the pivot row; after pruning every surviving 1 lies in a block whose row
/// and column cycles have equal length.
struct CandidateMatrix {
  int n = 0;
  std::vector<std::uint8_t> bits;  // row-major, original 1-based indices
  std::vector<int> row_order;      // original row indices, cycle by cycle
  std::vector<int> col_order;
  std::vector<int> row_blocks;     // cycle start offsets into row_order, plus n
  std::vector<int> col_blocks;
  struct Origin {
    int pivot = 0, i = 0, j = 0, k = 0;
  } origin;

  bool bit(int r, int c) const { return bits[(r - 1) * n + (c - 1)] != 0; }
  int row_block_count() const { return static_cast<int>(row_blocks.size()) - 1; }
  int col_block_count() const { return static_cast<int>(col_blocks.size()) - 1; }
  std::span<const int> row_block(int b) const {
    return {row_order.data() + row_blocks[b], row_order.data() + row_blocks[b + 1]};
  }
  std::span<const int> col_block(int b) const {
    return {col_order.data() + col_blocks[b], col_order.data() + col_blocks[b + 1]};
  }
};

/// The full set of isotopisms fixing a square, sorted by (alpha, beta)
/// image lists and deduplicated.
struct AutotopyGroup {
  int n = 0;
  std::vector<Isotopism> elements;

  long long order() const { return static_cast<long long>(elements.size()); }
  bool contains(const Isotopism& theta) const;
};

/// The unique isotopism with row map alpha and column choice j that keeps
/// reduced squares reduced: (alpha, alpha pi_j^{-1} sigma_{alpha^{-1}(1)},
/// alpha pi_j^{-1}).
Isotopism reduced_isotopism(const LatinSquare& square, const Permutation& alpha, int j);

/// Row i of apply_isotopism(square, reduced_isotopism(square, alpha, j)),
/// computed purely by permutation algebra.
Permutation transformed_row(const LatinSquare& square, const Permutation& alpha, int j, int i);

/// Cell (r, c) is 1 iff row_quotient(r, k) and row c share a cycle
/// structure; grouping rows and columns by structure yields all-1 square
/// diagonal blocks. Requires a profile-preserving k.
BoolMatrix structure_match_matrix(const LatinSquare& square, int k);

/// Builds the pruned candidate matrix for pivot row `pivot`, i with
/// alpha(i) = pivot, column j, and k with alpha(k) = 1.
CandidateMatrix build_candidate_matrix(const LatinSquare& square, int pivot, int i, int j,
                                       int k);

/// Offsets t (0-based) such that pairing the row cycle with the column
/// cycle shifted by t crosses only surviving 1s. The blocks must be square.
std::vector<int> block_shift_offsets(const CandidateMatrix& m, int row_block, int col_block);

/// All complete row maps assembled from block shifted diagonals: each row
/// cycle is matched to an equal-length column cycle order-compatibly, and
/// every matched pair contributes an all-1 shifted diagonal.
std::vector<Permutation> assemble_row_maps(const CandidateMatrix& m);

/// True iff apply_isotopism(square, theta) == square; checked cell by cell
/// with early exit.
bool verify_autotopism(const LatinSquare& square, const Isotopism& theta);

/// The autotopy group of a reduced square, by candidate-matrix search over
/// all profile-preserving k, all i matching the pivot row, and all columns.
AutotopyGroup autotopy_group(const LatinSquare& square, bool parallel = false);

/// Exhaustive reference: checks all n! * n reduced-to-reduced isotopisms.
/// Guarded to n <= 8 unless forced.
AutotopyGroup autotopy_group_brute(const LatinSquare& square, bool force = false);

/// Any square: reduces, computes the group, and conjugates it back.
AutotopyGroup autotopy_group_any(const LatinSquare& square, bool parallel = false);

/// {theta g theta^{-1} : g in group}.
AutotopyGroup conjugate_group(const AutotopyGroup& group, const Isotopism& theta);

struct PivotResult {
  LatinSquare square;     // reduced; isotopic to the input
  Isotopism iso;          // apply_isotopism(input, iso) == square
  int pivot_cycle_count;  // fewest row cycles realized in `square`
};

/// If some pair of rows is related by a permutation with fewer cycles than
/// any single row has, transforms the square so that such a row exists.
PivotResult pivot_optimize(const LatinSquare& square);

/// {"n": ..., "group_order": ..., "elements": [{"alpha": [...], ...}]}
std::string group_to_json(const AutotopyGroup& group);

}  // namespace latinauto

#endif
