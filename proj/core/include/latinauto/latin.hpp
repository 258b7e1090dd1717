#ifndef LATINAUTO_LATIN_HPP
#define LATINAUTO_LATIN_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "latinauto/perm.hpp"

namespace latinauto {

/// n x n grid over symbols {1..n} in which every row and every column is a
/// permutation. Row i acts as the permutation sigma with sigma(j) = at(i, j);
/// column j acts as pi with pi(i) = at(i, j). Immutable after validation.
class LatinSquare {
 public:
  static LatinSquare from_grid(const std::vector<std::vector<int>>& rows);

  /// File format: first line the order n, then n lines of n symbols.
  /// Blank lines and lines starting with '#' are skipped. Reads exactly one
  /// square and leaves the stream positioned after it.
  static LatinSquare parse(std::istream& in);
  static LatinSquare parse(std::string_view text);

  /// Addition table of Z_n, relabeled to {1..n}: at(i, j) = ((i-1)+(j-1) mod n)+1.
  static LatinSquare cayley_cyclic(int n);

  /// Accepts a grid that is the multiplication table of a group whose
  /// identity element is the symbol 1; rejects tables whose rows are not
  /// closed under composition.
  static LatinSquare cayley_from_table(const std::vector<std::vector<int>>& rows);

  int size() const { return n_; }
  int at(int i, int j) const { return grid_[(i - 1) * n_ + (j - 1)]; }

  Permutation row_perm(int i) const;
  Permutation col_perm(int j) const;

  /// True iff the first row and the first column are both the identity.
  bool is_reduced() const;

  LatinSquare transposed() const;

  /// Cycle structure of row_perm(s) o row_perm(r)^{-1}, the permutation
  /// carrying row r to row s.
  CycleStructure relative_cycle_structure(int r, int s) const;

  /// True iff the set of row permutations is closed under composition.
  bool is_group_table() const;

  std::string to_text() const;

  friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

 private:
  struct unchecked_t {};
  LatinSquare(int n, std::vector<int> grid, unchecked_t)
      : n_(n), grid_(std::move(grid)) {}

  void check_index(int v, const char* what) const;

  int n_ = 0;
  std::vector<int> grid_;  // row-major, 1-based symbols

  friend LatinSquare apply_isotopism(const LatinSquare&, const struct Isotopism&);
  friend LatinSquare jm_random(int, std::uint64_t, bool);
};

/// A triple of permutations acting on rows, columns and symbols:
/// result(alpha(i), beta(j)) = gamma(L(i, j)).
struct Isotopism {
  Permutation alpha, beta, gamma;

  Isotopism(Permutation a, Permutation b, Permutation c);
  static Isotopism identity(int n);

  int size() const { return alpha.size(); }
  Isotopism inverse() const;

  /// Text form: three permutation lines (alpha, beta, gamma).
  std::string to_text() const;
  static Isotopism parse(std::string_view text);

  friend bool operator==(const Isotopism&, const Isotopism&) = default;
  friend auto operator<=>(const Isotopism&, const Isotopism&) = default;
};

/// Componentwise composition: applying the result equals applying q, then p.
Isotopism compose(const Isotopism& p, const Isotopism& q);
inline Isotopism operator*(const Isotopism& p, const Isotopism& q) {
  return compose(p, q);
}

LatinSquare apply_isotopism(const LatinSquare& square, const Isotopism& theta);

struct Reduction {
  LatinSquare square;  // reduced
  Isotopism iso;       // apply_isotopism(input, iso) == square
};

/// Normalizes a square to reduced form: columns are permuted to make row 1
/// the identity, then rows to make column 1 the identity; symbols are fixed.
Reduction reduce(const LatinSquare& square);

/// Uniform-ish random Latin square via +-1 moves on the n x n x n incidence
/// cube, walking through proper and one-cell-improper states. Deterministic
/// for a fixed (n, seed) within a build.
LatinSquare jm_random(int n, std::uint64_t seed, bool reduced = false);

}  // namespace latinauto

#endif
