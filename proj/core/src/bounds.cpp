#include "latinauto/bounds.hpp"

#include <stdexcept>

#include "detail.hpp"
#include "latinauto/perm.hpp"

namespace latinauto {

namespace {

BigInt factorial(int n) {
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

void require_reduced(const LatinSquare& square, const char* op) {
  if (!square.is_reduced())
    throw std::invalid_argument(std::string(op) + " requires a reduced square");
}

}  // namespace

BigInt universal_bound(int n) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  BigInt out = BigInt(n) * n;
  for (long long p = 1; p * 2 <= n; p *= 2) out *= n - p;
  return out;
}

BigInt parity_bound(const LatinSquare& square) {
  const int n = square.size();
  int even_rows = 0;
  for (int i = 1; i <= n; ++i)
    if (parity(square.row_perm(i)) == Parity::even) ++even_rows;
  return BigInt(n) * factorial(n - even_rows) * factorial(even_rows);
}

BigInt cycle_partition_bound(const LatinSquare& square) {
  require_reduced(square, "cycle_partition_bound");
  detail::RowContext rows(square);
  BigInt out = BigInt(square.size()) * square.size();
  for (int id = 0; id < static_cast<int>(rows.count_by_sid.size()); ++id)
    out *= factorial(rows.count_by_sid[id]);
  return out;
}

PivotBound pivot_product_bound(const LatinSquare& square) {
  require_reduced(square, "pivot_product_bound");
  detail::RowContext rows(square);
  const BigInt stable_count = static_cast<int>(rows.compute_stable_rows().size());
  const int pivot = rows.choose_pivot();
  BigInt value = BigInt(square.size()) * stable_count * rows.pivot_product_value(pivot);
  return PivotBound{std::move(value), pivot};
}

BigInt line_cycle_bound(const LatinSquare& square) {
  require_reduced(square, "line_cycle_bound");
  detail::RowContext rows(square);
  detail::RowContext cols(square.transposed());
  const int line_cycles = std::min(rows.min_cycle_count, cols.min_cycle_count);
  const int stable_count = static_cast<int>(rows.compute_stable_rows().size());
  BigInt out = BigInt(square.size()) * stable_count;
  for (int t = 0; t < line_cycles; ++t) out *= rows.max_multiplicity;
  return out;
}

BigInt single_cycle_line_bound(int n) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  return BigInt(n) * n * (n - 1);
}

BigInt relative_cycle_bound(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("order and cycle count must be positive");
  BigInt out = BigInt(n) * n;
  for (int t = 0; t < k; ++t) out *= n - 1;
  return out;
}

BigInt group_table_order(int n, const BigInt& aut_size) {
  if (n < 1 || aut_size < 1)
    throw std::invalid_argument("order and automorphism count must be positive");
  return BigInt(n) * n * aut_size;
}

BigInt derangements_with_k_cycles(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("arguments must be nonnegative");
  if (n == 0) return k == 0 ? 1 : 0;
  if (k == 0) return 0;
  if (2 * k > n) return 0;
  // table[m][c] for m <= n, c <= k
  std::vector<std::vector<BigInt>> table(n + 1, std::vector<BigInt>(k + 1, 0));
  table[0][0] = 1;
  for (int m = 2; m <= n; ++m) {
    for (int c = 1; c <= k && 2 * c <= m; ++c)
      table[m][c] = BigInt(m - 1) * table[m - 1][c] + BigInt(m - 1) * table[m - 2][c - 1];
  }
  return table[n][k];
}

BoundReport make_bound_report(const LatinSquare& square) {
  require_reduced(square, "make_bound_report");
  BoundReport report;
  report.n = square.size();
  report.universal = universal_bound(report.n);
  report.parity = parity_bound(square);
  report.cycle_partition = cycle_partition_bound(square);
  PivotBound pivot = pivot_product_bound(square);
  report.pivot_product = std::move(pivot.value);
  report.pivot_row = pivot.pivot;
  detail::RowContext rows(square);
  detail::RowContext cols(square.transposed());
  report.line_cycle_count = std::min(rows.min_cycle_count, cols.min_cycle_count);
  report.line_cycle = line_cycle_bound(square);
  return report;
}

}  // namespace latinauto
