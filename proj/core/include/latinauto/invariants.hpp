#ifndef LATINAUTO_INVARIANTS_HPP
#define LATINAUTO_INVARIANTS_HPP

#include <vector>

#include "latinauto/latin.hpp"
#include "latinauto/perm.hpp"

namespace latinauto {

/// Cycle-structure summary of a reduced square's rows. Isotopy-search
/// pruning data: which rows attain the fewest cycles, how often each row's
/// structure recurs, and which rows k leave the structure profile unchanged
/// when every row is divided by row k on the right.
struct SquareInvariants {
  int n = 0;
  int min_cycle_count = 0;              // fewest disjoint cycles over all rows
  std::vector<int> min_cycle_rows;      // rows attaining it, ascending
  std::vector<int> row_multiplicity;    // [k-1] = rows sharing row k's structure
  int max_multiplicity = 0;
  std::vector<int> stable_rows;         // profile-preserving rows k, ascending
  int stable_count() const { return static_cast<int>(stable_rows.size()); }
};

/// Requires a reduced square.
SquareInvariants compute_invariants(const LatinSquare& square);

/// row_perm(i) o row_perm(k)^{-1}: the permutation carrying row k to row i.
Permutation row_quotient(const LatinSquare& square, int i, int k);

/// Rows i such that row_quotient(i, k) has row t's cycle structure. Only
/// defined for profile-preserving k (rejected otherwise); then the result
/// has exactly row_multiplicity[t-1] members, and for t = 1 it is {k}.
std::vector<int> matching_rows(const LatinSquare& square, int k, int t);

/// Least row multiplicity over the points of a cycle.
int cycle_min_multiplicity(const LatinSquare& square, const std::vector<int>& cycle_points);
int cycle_min_multiplicity(const SquareInvariants& inv, const std::vector<int>& cycle_points);

}  // namespace latinauto

#endif
