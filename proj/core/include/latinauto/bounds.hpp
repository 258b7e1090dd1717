#ifndef LATINAUTO_BOUNDS_HPP
#define LATINAUTO_BOUNDS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include "latinauto/latin.hpp"

namespace latinauto {

// Bound values are exact integers; the factorial-based ones overflow 64 bits
// by n around 21.
using BigInt = boost::multiprecision::cpp_int;

/// n^2 * prod_{t=1}^{floor(log2 n)} (n - 2^{t-1}); depends on the order only.
BigInt universal_bound(int n);

/// n * (n-k)! * k!, where k counts the even rows. The formula is symmetric
/// in k and n-k. Not dominant on all squares; reported for context only.
BigInt parity_bound(const LatinSquare& square);

/// n^2 * prod m_i! over the multiplicities of the distinct row cycle
/// structures. Requires a reduced square.
BigInt cycle_partition_bound(const LatinSquare& square);

struct PivotBound {
  BigInt value;
  int pivot;  // the row realizing the bound
};

/// n * s * m(l) * prod over cycles of row l not containing l of the cycle's
/// least row multiplicity, where s counts the profile-preserving rows and
/// m(l) is row l's multiplicity. Minimized over rows with the fewest
/// cycles; lowest index breaks ties. Requires a reduced square.
PivotBound pivot_product_bound(const LatinSquare& square);

/// n * s * m^k with m the largest row multiplicity and k the fewest cycles
/// over all lines (rows and columns). Requires a reduced square.
BigInt line_cycle_bound(const LatinSquare& square);

/// n^2 (n-1): the line-cycle bound specialized to a single-cycle line.
BigInt single_cycle_line_bound(int n);

/// n^2 (n-1)^k: the bound when two rows or two columns are related by a
/// permutation with at most k cycles.
BigInt relative_cycle_bound(int n, int k);

/// n^2 * aut_size: the exact group order for the Cayley table of a group
/// with aut_size automorphisms.
BigInt group_table_order(int n, const BigInt& aut_size);

/// Fixed-point-free permutations of n points with exactly k cycles, by the
/// recurrence d(n,k) = (n-1) d(n-1,k) + (n-1) d(n-2,k-1), zero for k > n/2,
/// with d(0,0) = 1 and d(n,0) = 0 for n >= 1.
BigInt derangements_with_k_cycles(int n, int k);

struct BoundReport {
  int n = 0;
  BigInt universal;
  BigInt parity;
  BigInt cycle_partition;
  BigInt pivot_product;
  int pivot_row = 0;
  BigInt line_cycle;
  int line_cycle_count = 0;
};

/// All five bounds for one reduced square.
BoundReport make_bound_report(const LatinSquare& square);

}  // namespace latinauto

#endif
