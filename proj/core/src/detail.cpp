#include "detail.hpp"

#include <algorithm>

namespace latinauto::detail {

std::vector<int> product_parts(const std::vector<int>& p_img, const std::vector<int>& q_img,
                               std::vector<char>& seen) {
  const int n = static_cast<int>(p_img.size());
  std::fill(seen.begin(), seen.end(), 0);
  std::vector<int> parts;
  for (int start = 1; start <= n; ++start) {
    if (seen[start - 1]) continue;
    int len = 0;
    for (int x = start; !seen[x - 1]; x = p_img[q_img[x - 1] - 1]) {
      seen[x - 1] = 1;
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return parts;
}

RowContext::RowContext(const LatinSquare& square) : n(square.size()) {
  rows.reserve(n);
  row_inv.reserve(n);
  sid.resize(n);
  cycle_count.resize(n);
  for (int i = 1; i <= n; ++i) {
    rows.push_back(square.row_perm(i));
    row_inv.push_back(inverse(rows.back()));
    auto parts = cycle_structure(rows.back()).parts();
    cycle_count[i - 1] = static_cast<int>(parts.size());
    sid[i - 1] = table.intern(std::move(parts));
  }
  count_by_sid.assign(table.size(), 0);
  for (int i = 0; i < n; ++i) ++count_by_sid[sid[i]];
  multiplicity.resize(n);
  for (int i = 0; i < n; ++i) multiplicity[i] = count_by_sid[sid[i]];
  max_multiplicity = *std::max_element(multiplicity.begin(), multiplicity.end());
  min_cycle_count = *std::min_element(cycle_count.begin(), cycle_count.end());
  for (int i = 0; i < n; ++i)
    if (cycle_count[i] == min_cycle_count) min_cycle_rows.push_back(i + 1);
}

std::vector<int> RowContext::compute_stable_rows() {
  const int base_size = static_cast<int>(count_by_sid.size());
  std::vector<int> stable;
  std::vector<char> seen(n);
  std::vector<int> cnt(base_size);
  for (int k = 1; k <= n; ++k) {
    std::fill(cnt.begin(), cnt.end(), 0);
    bool ok = true;
    for (int i = 1; i <= n; ++i) {
      int id = table.intern(product_parts(rows[i - 1].images(), row_inv[k - 1].images(), seen));
      if (id >= base_size || ++cnt[id] > count_by_sid[id]) {
        ok = false;
        break;
      }
    }
    if (ok) stable.push_back(k);
  }
  return stable;
}

std::vector<int> RowContext::quotient_sids(int k) {
  std::vector<int> out(n);
  std::vector<char> seen(n);
  for (int i = 1; i <= n; ++i)
    out[i - 1] = table.intern(product_parts(rows[i - 1].images(), row_inv[k - 1].images(), seen));
  return out;
}

BigInt RowContext::pivot_product_value(int l) const {
  BigInt value = multiplicity[l - 1];
  for (const auto& cyc : cycles(rows[l - 1]).cycles) {
    if (std::find(cyc.begin(), cyc.end(), l) != cyc.end()) continue;
    int least = multiplicity[cyc.front() - 1];
    for (int s : cyc) least = std::min(least, multiplicity[s - 1]);
    value *= least;
  }
  return value;
}

int RowContext::choose_pivot() const {
  int best = min_cycle_rows.front();
  BigInt best_value = pivot_product_value(best);
  for (std::size_t idx = 1; idx < min_cycle_rows.size(); ++idx) {
    int l = min_cycle_rows[idx];
    BigInt value = pivot_product_value(l);
    if (value < best_value) {
      best = l;
      best_value = std::move(value);
    }
  }
  return best;
}

}  // namespace latinauto::detail
