#include "latinauto/invariants.hpp"

#include <algorithm>
#include <stdexcept>

#include "detail.hpp"

namespace latinauto {

SquareInvariants compute_invariants(const LatinSquare& square) {
  if (!square.is_reduced())
    throw std::invalid_argument("invariants are defined for reduced squares only");
  detail::RowContext ctx(square);
  SquareInvariants inv;
  inv.n = ctx.n;
  inv.min_cycle_count = ctx.min_cycle_count;
  inv.min_cycle_rows = std::move(ctx.min_cycle_rows);
  inv.row_multiplicity = std::move(ctx.multiplicity);
  inv.max_multiplicity = ctx.max_multiplicity;
  inv.stable_rows = ctx.compute_stable_rows();
  return inv;
}

Permutation row_quotient(const LatinSquare& square, int i, int k) {
  return compose(square.row_perm(i), inverse(square.row_perm(k)));
}

std::vector<int> matching_rows(const LatinSquare& square, int k, int t) {
  if (!square.is_reduced())
    throw std::invalid_argument("matching_rows is defined for reduced squares only");
  const int n = square.size();
  if (t < 1 || t > n)
    throw std::out_of_range("row index " + std::to_string(t) + " out of range 1.." +
                            std::to_string(n));
  if (k < 1 || k > n)
    throw std::out_of_range("row index " + std::to_string(k) + " out of range 1.." +
                            std::to_string(n));
  detail::RowContext ctx(square);
  auto stable = ctx.compute_stable_rows();
  if (!std::binary_search(stable.begin(), stable.end(), k))
    throw std::invalid_argument("row " + std::to_string(k) +
                                " does not preserve the structure profile");
  auto sids = ctx.quotient_sids(k);
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (sids[i - 1] == ctx.sid[t - 1]) out.push_back(i);
  return out;
}

namespace {

int min_multiplicity_over(const std::vector<int>& multiplicity, int n,
                          const std::vector<int>& cycle_points) {
  if (cycle_points.empty()) throw std::invalid_argument("empty cycle");
  int least = -1;
  for (int s : cycle_points) {
    if (s < 1 || s > n)
      throw std::out_of_range("cycle point " + std::to_string(s) + " out of range 1.." +
                              std::to_string(n));
    int m = multiplicity[s - 1];
    if (least < 0 || m < least) least = m;
  }
  return least;
}

}  // namespace

int cycle_min_multiplicity(const LatinSquare& square, const std::vector<int>& cycle_points) {
  detail::RowContext ctx(square);
  return min_multiplicity_over(ctx.multiplicity, ctx.n, cycle_points);
}

int cycle_min_multiplicity(const SquareInvariants& inv, const std::vector<int>& cycle_points) {
  return min_multiplicity_over(inv.row_multiplicity, inv.n, cycle_points);
}

}  // namespace latinauto
