// Internal helpers shared by the invariants, autotopy and bounds translation
// units. Not installed.
#ifndef LATINAUTO_SRC_DETAIL_HPP
#define LATINAUTO_SRC_DETAIL_HPP

#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "latinauto/latin.hpp"
#include "latinauto/perm.hpp"

namespace latinauto::detail {

using BigInt = boost::multiprecision::cpp_int;

// Dense ids for cycle structures given as descending part lists.
class StructureTable {
 public:
  int intern(std::vector<int> parts) {
    auto [it, inserted] = ids_.try_emplace(std::move(parts), next_);
    if (inserted) ++next_;
    return it->second;
  }
  int size() const { return next_; }

 private:
  std::map<std::vector<int>, int> ids_;
  int next_ = 0;
};

// Descending cycle-length parts of the map x -> p(q(x)), without
// materializing the composition. `seen` is scratch of size n.
std::vector<int> product_parts(const std::vector<int>& p_img, const std::vector<int>& q_img,
                               std::vector<char>& seen);

// Row permutations of one square plus everything derived from their cycle
// structures that the group search and the bounds share.
struct RowContext {
  explicit RowContext(const LatinSquare& square);

  int n;
  std::vector<Permutation> rows;     // index i-1 = row i
  std::vector<Permutation> row_inv;
  StructureTable table;
  std::vector<int> sid;              // structure id per row
  std::vector<int> count_by_sid;     // rows per structure id (base profile)
  std::vector<int> multiplicity;     // per row: rows sharing its structure
  std::vector<int> cycle_count;      // per row
  int min_cycle_count = 0;
  std::vector<int> min_cycle_rows;   // 1-based, ascending
  int max_multiplicity = 0;

  // Rows k for which the structure profile of {row_i o row_k^{-1}}_i equals
  // the base profile. Sorted ascending; contains 1 for reduced squares.
  std::vector<int> compute_stable_rows();

  // Structure id of row_i o row_k^{-1} for every i (interned in `table`).
  std::vector<int> quotient_sids(int k);

  // multiplicity(l) * prod over cycles of row l not containing l of the
  // cycle's least row multiplicity. The variable part of the pivot bound.
  BigInt pivot_product_value(int l) const;

  // Among rows with the fewest cycles: least pivot_product_value, then
  // lowest index.
  int choose_pivot() const;
};

}  // namespace latinauto::detail

#endif
