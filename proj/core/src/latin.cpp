#include "latinauto/latin.hpp"

#include <algorithm>
#include <istream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace latinauto {

namespace {

void validate_grid(int n, const std::vector<int>& grid) {
  std::vector<char> seen(n);
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      int v = grid[i * n + j];
      if (v < 1 || v > n)
        throw std::invalid_argument("row " + std::to_string(i + 1) + " has symbol " +
                                    std::to_string(v) + " out of range 1.." +
                                    std::to_string(n));
      if (seen[v - 1])
        throw std::invalid_argument("row " + std::to_string(i + 1) + " repeats symbol " +
                                    std::to_string(v));
      seen[v - 1] = 1;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < n; ++i) {
      int v = grid[i * n + j];
      if (seen[v - 1])
        throw std::invalid_argument("column " + std::to_string(j + 1) +
                                    " repeats symbol " + std::to_string(v));
      seen[v - 1] = 1;
    }
  }
}

}  // namespace

LatinSquare LatinSquare::from_grid(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw std::invalid_argument("empty grid");
  std::vector<int> grid;
  grid.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw std::invalid_argument("row " + std::to_string(i + 1) + " has " +
                                  std::to_string(rows[i].size()) + " entries, expected " +
                                  std::to_string(n));
    grid.insert(grid.end(), rows[i].begin(), rows[i].end());
  }
  validate_grid(n, grid);
  return LatinSquare(n, std::move(grid), unchecked_t{});
}

LatinSquare LatinSquare::parse(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_content_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      auto pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '#') continue;
      return true;
    }
    return false;
  };

  if (!next_content_line()) throw std::invalid_argument("empty square file");
  long n_raw;
  {
    std::istringstream hdr(line);
    std::string extra;
    if (!(hdr >> n_raw) || (hdr >> extra))
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": expected a single order value");
  }
  if (n_raw < 1 || n_raw > 100000)
    throw std::invalid_argument("line " + std::to_string(lineno) + ": invalid order " +
                                std::to_string(n_raw));
  const int n = static_cast<int>(n_raw);

  std::vector<std::vector<int>> rows;
  rows.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (!next_content_line())
      throw std::invalid_argument("unexpected end of file: got " + std::to_string(i) +
                                  " of " + std::to_string(n) + " rows");
    std::istringstream row(line);
    std::vector<int> vals;
    int v;
    while (row >> v) vals.push_back(v);
    if (!row.eof())
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": non-integer token in row");
    if (static_cast<int>(vals.size()) != n)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected " +
                                  std::to_string(n) + " entries, got " +
                                  std::to_string(vals.size()));
    rows.push_back(std::move(vals));
  }
  return from_grid(rows);
}

LatinSquare LatinSquare::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse(in);
}

LatinSquare LatinSquare::cayley_cyclic(int n) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  std::vector<int> grid(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) grid[i * n + j] = (i + j) % n + 1;
  return LatinSquare(n, std::move(grid), unchecked_t{});
}

LatinSquare LatinSquare::cayley_from_table(const std::vector<std::vector<int>>& rows) {
  LatinSquare square = from_grid(rows);
  if (!square.is_group_table())
    throw std::invalid_argument("rows are not closed under composition, not a group table");
  return square;
}

void LatinSquare::check_index(int v, const char* what) const {
  if (v < 1 || v > n_)
    throw std::out_of_range(std::string(what) + " index " + std::to_string(v) +
                            " out of range 1.." + std::to_string(n_));
}

Permutation LatinSquare::row_perm(int i) const {
  check_index(i, "row");
  std::vector<int> img(grid_.begin() + (i - 1) * n_, grid_.begin() + i * n_);
  return Permutation(std::move(img), Permutation::unchecked_t{});
}

Permutation LatinSquare::col_perm(int j) const {
  check_index(j, "column");
  std::vector<int> img(n_);
  for (int i = 0; i < n_; ++i) img[i] = grid_[i * n_ + (j - 1)];
  return Permutation(std::move(img), Permutation::unchecked_t{});
}

bool LatinSquare::is_reduced() const {
  for (int j = 1; j <= n_; ++j)
    if (at(1, j) != j) return false;
  for (int i = 1; i <= n_; ++i)
    if (at(i, 1) != i) return false;
  return true;
}

LatinSquare LatinSquare::transposed() const {
  std::vector<int> grid(grid_.size());
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) grid[j * n_ + i] = grid_[i * n_ + j];
  return LatinSquare(n_, std::move(grid), unchecked_t{});
}

CycleStructure LatinSquare::relative_cycle_structure(int r, int s) const {
  check_index(r, "row");
  check_index(s, "row");
  return cycle_structure(compose(row_perm(s), inverse(row_perm(r))));
}

bool LatinSquare::is_group_table() const {
  std::set<std::vector<int>> rows;
  for (int i = 1; i <= n_; ++i) rows.insert(row_perm(i).images());
  for (const auto& p : rows) {
    for (const auto& q : rows) {
      std::vector<int> prod(n_);
      for (int x = 0; x < n_; ++x) prod[x] = p[q[x] - 1];
      if (!rows.count(prod)) return false;
    }
  }
  return true;
}

std::string LatinSquare::to_text() const {
  std::string out = std::to_string(n_);
  out += '\n';
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      if (j > 1) out += ' ';
      out += std::to_string(at(i, j));
    }
    out += '\n';
  }
  return out;
}

Isotopism::Isotopism(Permutation a, Permutation b, Permutation c)
    : alpha(std::move(a)), beta(std::move(b)), gamma(std::move(c)) {
  if (alpha.size() != beta.size() || alpha.size() != gamma.size())
    throw std::invalid_argument("isotopism components must have equal orders");
}

Isotopism Isotopism::identity(int n) {
  return Isotopism(Permutation::identity(n), Permutation::identity(n),
                   Permutation::identity(n));
}

Isotopism Isotopism::inverse() const {
  return Isotopism(latinauto::inverse(alpha), latinauto::inverse(beta),
                   latinauto::inverse(gamma));
}

Isotopism compose(const Isotopism& p, const Isotopism& q) {
  return Isotopism(compose(p.alpha, q.alpha), compose(p.beta, q.beta),
                   compose(p.gamma, q.gamma));
}

std::string Isotopism::to_text() const {
  return latinauto::to_text(alpha) + '\n' + latinauto::to_text(beta) + '\n' +
         latinauto::to_text(gamma) + '\n';
}

Isotopism Isotopism::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Permutation> perms;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    if (perms.size() == 3)
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": more than three permutation lines");
    try {
      perms.push_back(parse_permutation(line));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (perms.size() != 3)
    throw std::invalid_argument("expected three permutation lines, got " +
                                std::to_string(perms.size()));
  return Isotopism(std::move(perms[0]), std::move(perms[1]), std::move(perms[2]));
}

LatinSquare apply_isotopism(const LatinSquare& square, const Isotopism& theta) {
  const int n = square.size();
  if (theta.size() != n)
    throw std::invalid_argument("isotopism order does not match square order");
  std::vector<int> grid(static_cast<std::size_t>(n) * n);
  for (int i = 1; i <= n; ++i) {
    const int ti = theta.alpha(i) - 1;
    for (int j = 1; j <= n; ++j)
      grid[ti * n + (theta.beta(j) - 1)] = theta.gamma(square.at(i, j));
  }
  return LatinSquare(n, std::move(grid), LatinSquare::unchecked_t{});
}

Reduction reduce(const LatinSquare& square) {
  const int n = square.size();
  const Permutation id = Permutation::identity(n);
  // Sending column j to position row1(j) makes row 1 the identity.
  Permutation beta = square.row_perm(1);
  LatinSquare cols_fixed = apply_isotopism(square, Isotopism(id, beta, id));
  // Column 1 of the intermediate square tells where each row must go.
  Permutation alpha = cols_fixed.col_perm(1);
  LatinSquare out = apply_isotopism(cols_fixed, Isotopism(alpha, id, id));
  return Reduction{std::move(out), Isotopism(std::move(alpha), std::move(beta), id)};
}

namespace {

// Deterministic 64-bit PRNG plumbing for jm_random.
std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct Rng {
  explicit Rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    engine.seed(splitmix64(s));
  }
  int below(int m) {  // uniform draw from [0, m)
    return static_cast<int>((static_cast<unsigned __int128>(engine()) *
                             static_cast<unsigned __int128>(m)) >> 64);
  }
  std::mt19937_64 engine;
};

}  // namespace

LatinSquare jm_random(int n, std::uint64_t seed, bool reduced) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  if (n == 1) return LatinSquare::cayley_cyclic(1);

  Rng rng(seed);
  // Incidence cube: cube[(r*n + c)*n + s] == 1 iff symbol s+1 sits at (r+1, c+1).
  std::vector<signed char> cube(static_cast<std::size_t>(n) * n * n, 0);
  auto cell = [&](int r, int c, int s) -> signed char& {
    return cube[(static_cast<std::size_t>(r) * n + c) * n + s];
  };
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) cell(r, c, (r + c) % n) = 1;

  // A fixed even move count would lock tiny orders to the start square
  // (every order-2 move flips the whole cube), so the target length carries
  // a small seed-derived remainder.
  const long long walk = 2LL * n * n * n + rng.below(2 * n);
  long long moves = 0;
  bool improper = false;
  int ur = 0, uc = 0, us = 0;  // the -1 cell while improper

  while (moves < walk || improper) {
    int x, y, z, x2 = -1, y2 = -1, z2 = -1;
    if (!improper) {
      do {
        x = rng.below(n);
        y = rng.below(n);
        z = rng.below(n);
      } while (cell(x, y, z) != 0);
      for (int r = 0; r < n; ++r)
        if (cell(r, y, z) == 1) x2 = r;
      for (int c = 0; c < n; ++c)
        if (cell(x, c, z) == 1) y2 = c;
      for (int s = 0; s < n; ++s)
        if (cell(x, y, s) == 1) z2 = s;
    } else {
      x = ur;
      y = uc;
      z = us;
      int pick_x = rng.below(2), pick_y = rng.below(2), pick_z = rng.below(2);
      for (int r = 0; r < n; ++r)
        if (cell(r, y, z) == 1 && pick_x-- == 0) { x2 = r; break; }
      for (int c = 0; c < n; ++c)
        if (cell(x, c, z) == 1 && pick_y-- == 0) { y2 = c; break; }
      for (int s = 0; s < n; ++s)
        if (cell(x, y, s) == 1 && pick_z-- == 0) { z2 = s; break; }
    }
    cell(x, y, z) += 1;
    cell(x2, y, z) -= 1;
    cell(x, y2, z) -= 1;
    cell(x, y, z2) -= 1;
    cell(x2, y2, z) += 1;
    cell(x2, y, z2) += 1;
    cell(x, y2, z2) += 1;
    cell(x2, y2, z2) -= 1;
    if (cell(x2, y2, z2) < 0) {
      improper = true;
      ur = x2;
      uc = y2;
      us = z2;
    } else {
      improper = false;
    }
    ++moves;
  }

  std::vector<int> grid(static_cast<std::size_t>(n) * n, 0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      for (int s = 0; s < n; ++s)
        if (cell(r, c, s) == 1) grid[r * n + c] = s + 1;
  LatinSquare out(n, std::move(grid), LatinSquare::unchecked_t{});
  if (reduced) return reduce(out).square;
  return out;
}

}  // namespace latinauto
