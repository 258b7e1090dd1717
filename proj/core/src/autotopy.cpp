#include "latinauto/autotopy.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "json.hpp"

#include "detail.hpp"
#include "latinauto/invariants.hpp"

namespace latinauto {

namespace {

void require_reduced(const LatinSquare& square, const char* op) {
  if (!square.is_reduced())
    throw std::invalid_argument(std::string(op) + " requires a reduced square");
}

void require_row_index(int v, int n) {
  if (v < 1 || v > n)
    throw std::out_of_range("index " + std::to_string(v) + " out of range 1.." +
                            std::to_string(n));
}

// Everything about one square that the candidate search reads. The column
// grouping comes from the pivot row's cycles and is shared by all matrices.
struct SearchContext {
  explicit SearchContext(const LatinSquare& sq) : square(sq), rows(sq), n(sq.size()) {
    col_inv.reserve(n);
    for (int j = 1; j <= n; ++j) col_inv.push_back(inverse(sq.col_perm(j)));
    stable = rows.compute_stable_rows();
    is_stable.assign(n + 1, 0);
    for (int k : stable) is_stable[k] = 1;
    pivot = rows.choose_pivot();
    set_pivot(pivot);
  }

  void set_pivot(int l) {
    pivot = l;
    col_order.clear();
    col_blocks.assign(1, 0);
    col_len.assign(n + 1, 0);
    for (const auto& cyc : cycles(rows.rows[l - 1]).cycles) {
      for (int c : cyc) {
        col_order.push_back(c);
        col_len[c] = static_cast<int>(cyc.size());
      }
      col_blocks.push_back(static_cast<int>(col_order.size()));
    }
  }

  const LatinSquare& square;
  detail::RowContext rows;
  int n;
  std::vector<Permutation> col_inv;
  std::vector<int> stable;
  std::vector<char> is_stable;  // 1-based lookup
  int pivot = 0;
  std::vector<int> col_order, col_blocks;
  std::vector<int> col_len;  // per column: its cycle length in the pivot row
};

CandidateMatrix make_matrix(const SearchContext& ctx, const std::vector<int>& quotient_sid,
                            const Permutation& conj_quotient, int i, int j, int k) {
  const int n = ctx.n;
  CandidateMatrix m;
  m.n = n;
  m.origin = {ctx.pivot, i, j, k};
  m.col_order = ctx.col_order;
  m.col_blocks = ctx.col_blocks;

  m.row_blocks.assign(1, 0);
  std::vector<int> row_len(n + 1, 0);
  for (const auto& cyc : cycles(conj_quotient).cycles) {
    for (int r : cyc) {
      m.row_order.push_back(r);
      row_len[r] = static_cast<int>(cyc.size());
    }
    m.row_blocks.push_back(static_cast<int>(m.row_order.size()));
  }

  const int pivot = ctx.pivot;
  m.bits.assign(static_cast<std::size_t>(n) * n, 0);
  for (int r = 1; r <= n; ++r) {
    const int qs = quotient_sid[r - 1];
    auto* row = m.bits.data() + static_cast<std::size_t>(r - 1) * n;
    for (int c = 1; c <= n; ++c) {
      bool keep = qs == ctx.rows.sid[c - 1] && row_len[r] == ctx.col_len[c];
      if (r == i && c != pivot) keep = false;
      if (c == pivot && r != i) keep = false;
      if (r == 1 && !ctx.is_stable[c]) keep = false;
      if (r == k && c != 1) keep = false;
      if (c == 1 && r != k) keep = false;
      row[c - 1] = keep ? 1 : 0;
    }
  }
  return m;
}

// gamma = alpha pi_j^{-1}, beta = gamma sigma_k; valid whenever alpha(k) = 1.
Isotopism make_theta(const SearchContext& ctx, const Permutation& alpha, int j, int k) {
  Permutation gamma = compose(alpha, ctx.col_inv[j - 1]);
  Permutation beta = compose(gamma, ctx.rows.rows[k - 1]);
  return Isotopism(alpha, std::move(beta), std::move(gamma));
}

void finalize(AutotopyGroup& group) {
  std::sort(group.elements.begin(), group.elements.end());
  group.elements.erase(std::unique(group.elements.begin(), group.elements.end()),
                       group.elements.end());
}

}  // namespace

bool AutotopyGroup::contains(const Isotopism& theta) const {
  return std::binary_search(elements.begin(), elements.end(), theta);
}

Isotopism reduced_isotopism(const LatinSquare& square, const Permutation& alpha, int j) {
  require_reduced(square, "reduced_isotopism");
  const int n = square.size();
  if (alpha.size() != n)
    throw std::invalid_argument("row map order does not match square order");
  require_row_index(j, n);
  int k = 0;  // alpha^{-1}(1)
  for (int x = 1; x <= n; ++x)
    if (alpha(x) == 1) k = x;
  Permutation gamma = compose(alpha, inverse(square.col_perm(j)));
  Permutation beta = compose(gamma, square.row_perm(k));
  return Isotopism(alpha, std::move(beta), std::move(gamma));
}

Permutation transformed_row(const LatinSquare& square, const Permutation& alpha, int j,
                            int i) {
  require_reduced(square, "transformed_row");
  const int n = square.size();
  if (alpha.size() != n)
    throw std::invalid_argument("row map order does not match square order");
  require_row_index(j, n);
  require_row_index(i, n);
  int src = 0, base = 0;  // alpha^{-1}(i), alpha^{-1}(1)
  for (int x = 1; x <= n; ++x) {
    if (alpha(x) == i) src = x;
    if (alpha(x) == 1) base = x;
  }
  Permutation pj = square.col_perm(j);
  Permutation out = compose(alpha, inverse(pj));
  out = compose(out, square.row_perm(src));
  out = compose(out, inverse(square.row_perm(base)));
  out = compose(out, pj);
  return compose(out, inverse(alpha));
}

BoolMatrix structure_match_matrix(const LatinSquare& square, int k) {
  require_reduced(square, "structure_match_matrix");
  const int n = square.size();
  require_row_index(k, n);
  detail::RowContext rows(square);
  auto stable = rows.compute_stable_rows();
  if (!std::binary_search(stable.begin(), stable.end(), k))
    throw std::invalid_argument("row " + std::to_string(k) +
                                " does not preserve the structure profile");
  auto qsid = rows.quotient_sids(k);
  BoolMatrix m;
  m.n = n;
  m.bits.assign(static_cast<std::size_t>(n) * n, 0);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c)
      m.bits[(r - 1) * n + (c - 1)] = qsid[r - 1] == rows.sid[c - 1] ? 1 : 0;
  return m;
}

CandidateMatrix build_candidate_matrix(const LatinSquare& square, int pivot, int i, int j,
                                       int k) {
  require_reduced(square, "build_candidate_matrix");
  const int n = square.size();
  require_row_index(pivot, n);
  require_row_index(i, n);
  require_row_index(j, n);
  require_row_index(k, n);
  SearchContext ctx(square);
  if (!ctx.is_stable[k])
    throw std::invalid_argument("row " + std::to_string(k) +
                                " does not preserve the structure profile");
  ctx.set_pivot(pivot);
  auto qsid = ctx.rows.quotient_sids(k);
  if (qsid[i - 1] != ctx.rows.sid[pivot - 1])
    throw std::invalid_argument("row " + std::to_string(i) +
                                " does not match the pivot row's quotient structure");
  Permutation quotient = compose(ctx.rows.rows[i - 1], ctx.rows.row_inv[k - 1]);
  Permutation conj = conjugate(quotient, ctx.col_inv[j - 1]);
  return make_matrix(ctx, qsid, conj, i, j, k);
}

std::vector<int> block_shift_offsets(const CandidateMatrix& m, int row_block,
                                     int col_block) {
  if (row_block < 0 || row_block >= m.row_block_count() || col_block < 0 ||
      col_block >= m.col_block_count())
    throw std::out_of_range("block index out of range");
  auto rowc = m.row_block(row_block);
  auto colc = m.col_block(col_block);
  if (rowc.size() != colc.size())
    throw std::invalid_argument("block is not square");
  const int len = static_cast<int>(rowc.size());
  std::vector<int> out;
  for (int t = 0; t < len; ++t) {
    bool all = true;
    for (int s = 0; s < len; ++s) {
      if (!m.bit(rowc[s], colc[(s + t) % len])) {
        all = false;
        break;
      }
    }
    if (all) out.push_back(t);
  }
  return out;
}

std::vector<Permutation> assemble_row_maps(const CandidateMatrix& m) {
  const int blocks = m.col_block_count();
  if (m.row_block_count() != blocks) return {};

  // Per column cycle: the (row cycle, offset) pairs that give an all-1
  // shifted diagonal. A cycle with no candidate kills the matrix outright.
  std::vector<std::vector<std::pair<int, int>>> cand(blocks);
  for (int cb = 0; cb < blocks; ++cb) {
    const auto want = m.col_block(cb).size();
    for (int rb = 0; rb < blocks; ++rb) {
      if (m.row_block(rb).size() != want) continue;
      for (int t : block_shift_offsets(m, rb, cb)) cand[cb].emplace_back(rb, t);
    }
    if (cand[cb].empty()) return {};
  }

  // Scarce cycles first, so dead ends surface early.
  std::vector<int> order(blocks);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::pair(cand[a].size(), a) < std::pair(cand[b].size(), b);
  });

  std::vector<Permutation> out;
  std::vector<char> used(blocks, 0);
  std::vector<int> img(m.n);
  auto descend = [&](auto&& self, int depth) -> void {
    if (depth == blocks) {
      out.emplace_back(img);
      return;
    }
    const int cb = order[depth];
    auto colc = m.col_block(cb);
    const int len = static_cast<int>(colc.size());
    for (auto [rb, t] : cand[cb]) {
      if (used[rb]) continue;
      used[rb] = 1;
      auto rowc = m.row_block(rb);
      for (int s = 0; s < len; ++s) img[rowc[s] - 1] = colc[(s + t) % len];
      self(self, depth + 1);
      used[rb] = 0;
    }
  };
  descend(descend, 0);
  return out;
}

bool verify_autotopism(const LatinSquare& square, const Isotopism& theta) {
  const int n = square.size();
  if (theta.size() != n)
    throw std::invalid_argument("isotopism order does not match square order");
  for (int i = 1; i <= n; ++i) {
    const int ai = theta.alpha(i);
    for (int x = 1; x <= n; ++x)
      if (square.at(ai, theta.beta(x)) != theta.gamma(square.at(i, x))) return false;
  }
  return true;
}

namespace {

struct Subproblem {
  int k;
  int i;
  int j;
  const std::vector<int>* quotient_sid;
};

void run_subproblem(const SearchContext& ctx, const Subproblem& task,
                    std::vector<Isotopism>& out) {
  Permutation quotient =
      compose(ctx.rows.rows[task.i - 1], ctx.rows.row_inv[task.k - 1]);
  Permutation conj = conjugate(quotient, ctx.col_inv[task.j - 1]);
  CandidateMatrix m = make_matrix(ctx, *task.quotient_sid, conj, task.i, task.j, task.k);
  for (Permutation& alpha : assemble_row_maps(m)) {
    ThetaCandidate cand{std::move(alpha), task.j, task.k, task.i};
    Isotopism theta = make_theta(ctx, cand.alpha, cand.j, cand.k);
    if (verify_autotopism(ctx.square, theta)) out.push_back(std::move(theta));
  }
}

}  // namespace

AutotopyGroup autotopy_group(const LatinSquare& square, bool parallel) {
  require_reduced(square, "autotopy_group");
  SearchContext ctx(square);
  const int n = ctx.n;
  const int pivot_sid = ctx.rows.sid[ctx.pivot - 1];

  std::vector<std::vector<int>> qsid_by_k;
  std::vector<Subproblem> tasks;
  qsid_by_k.reserve(ctx.stable.size());
  for (int k : ctx.stable) {
    qsid_by_k.push_back(ctx.rows.quotient_sids(k));
    const auto& qsid = qsid_by_k.back();
    for (int i = 1; i <= n; ++i) {
      if (qsid[i - 1] != pivot_sid) continue;
      for (int j = 1; j <= n; ++j) tasks.push_back({k, i, j, &qsid});
    }
  }

  AutotopyGroup group;
  group.n = n;
  const unsigned hw = std::thread::hardware_concurrency();
  if (!parallel || hw <= 1 || tasks.size() < 2) {
    for (const auto& task : tasks) run_subproblem(ctx, task, group.elements);
  } else {
    const std::size_t workers = std::min<std::size_t>(hw, tasks.size());
    std::vector<std::vector<Isotopism>> found(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t t = w; t < tasks.size(); t += workers)
          run_subproblem(ctx, tasks[t], found[w]);
      });
    }
    for (auto& th : pool) th.join();
    for (auto& part : found)
      for (auto& theta : part) group.elements.push_back(std::move(theta));
  }
  finalize(group);
  return group;
}

AutotopyGroup autotopy_group_brute(const LatinSquare& square, bool force) {
  require_reduced(square, "autotopy_group_brute");
  const int n = square.size();
  if (n > 8 && !force)
    throw guard_error("exhaustive search is guarded to order <= 8; pass force to override");

  std::vector<Permutation> rows, col_inv;
  rows.reserve(n);
  col_inv.reserve(n);
  for (int i = 1; i <= n; ++i) rows.push_back(square.row_perm(i));
  for (int j = 1; j <= n; ++j) col_inv.push_back(inverse(square.col_perm(j)));

  AutotopyGroup group;
  group.n = n;
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  do {
    Permutation alpha(images);
    int k = 0;
    for (int x = 1; x <= n; ++x)
      if (alpha(x) == 1) k = x;
    for (int j = 1; j <= n; ++j) {
      Permutation gamma = compose(alpha, col_inv[j - 1]);
      Permutation beta = compose(gamma, rows[k - 1]);
      Isotopism theta(alpha, std::move(beta), std::move(gamma));
      if (verify_autotopism(square, theta)) group.elements.push_back(std::move(theta));
    }
  } while (std::next_permutation(images.begin(), images.end()));
  finalize(group);
  return group;
}

AutotopyGroup autotopy_group_any(const LatinSquare& square, bool parallel) {
  Reduction red = reduce(square);
  AutotopyGroup reduced_group = autotopy_group(red.square, parallel);
  return conjugate_group(reduced_group, red.iso.inverse());
}

AutotopyGroup conjugate_group(const AutotopyGroup& group, const Isotopism& theta) {
  if (group.n != theta.size())
    throw std::invalid_argument("isotopism order does not match group order");
  AutotopyGroup out;
  out.n = group.n;
  out.elements.reserve(group.elements.size());
  Isotopism theta_inv = theta.inverse();
  for (const Isotopism& g : group.elements)
    out.elements.push_back(compose(compose(theta, g), theta_inv));
  finalize(out);
  return out;
}

PivotResult pivot_optimize(const LatinSquare& square) {
  require_reduced(square, "pivot_optimize");
  const int n = square.size();
  detail::RowContext rows(square);

  const int row_min = rows.min_cycle_count;
  int best = row_min, best_r = 0;
  std::vector<char> seen(n);
  for (int r = 1; r <= n; ++r) {
    for (int s = 1; s <= n; ++s) {
      if (s == r) continue;
      auto parts =
          detail::product_parts(rows.rows[s - 1].images(), rows.row_inv[r - 1].images(), seen);
      if (static_cast<int>(parts.size()) < best) {
        best = static_cast<int>(parts.size());
        best_r = r;
      }
    }
  }
  if (best_r == 0)
    return PivotResult{square, Isotopism::identity(n), row_min};

  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::swap(images[0], images[best_r - 1]);
  Isotopism theta = reduced_isotopism(square, Permutation(std::move(images)), 1);
  LatinSquare out = apply_isotopism(square, theta);
  return PivotResult{std::move(out), std::move(theta), best};
}

std::string group_to_json(const AutotopyGroup& group) {
  nlohmann::json doc;
  doc["n"] = group.n;
  doc["group_order"] = group.order();
  doc["elements"] = nlohmann::json::array();
  for (const Isotopism& g : group.elements) {
    doc["elements"].push_back({{"alpha", g.alpha.images()},
                               {"beta", g.beta.images()},
                               {"gamma", g.gamma.images()}});
  }
  return doc.dump(2);
}

}  // namespace latinauto
