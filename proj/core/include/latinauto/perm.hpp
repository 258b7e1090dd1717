#ifndef LATINAUTO_PERM_HPP
#define LATINAUTO_PERM_HPP

#include <string>
#include <string_view>
#include <vector>

namespace latinauto {

class LatinSquare;

enum class Parity { even, odd };

/// A partition of n given by the disjoint-cycle lengths of a permutation,
/// stored as a descending sequence. Equality of structures is plain
/// sequence equality.
class CycleStructure {
 public:
  CycleStructure() = default;
  explicit CycleStructure(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int order() const;
  std::string str() const;  // e.g. "[5,3]"

  friend bool operator==(const CycleStructure&, const CycleStructure&) = default;
  friend auto operator<=>(const CycleStructure&, const CycleStructure&) = default;

 private:
  std::vector<int> parts_;
};

/// A bijection on {1..n}, stored in image notation: the x-th entry is the
/// image of x. All point labels in the public API are 1-based.
class Permutation {
 public:
  Permutation() = default;

  /// Validating constructor from a 1-based image list.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x - 1]; }
  const std::vector<int>& images() const { return img_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct unchecked_t {};
  Permutation(std::vector<int> images, unchecked_t) : img_(std::move(images)) {}

  std::vector<int> img_;

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);
  friend Permutation conjugate(const Permutation&, const Permutation&);
  friend class LatinSquare;
  friend struct CycleDecomposition;
};

/// Disjoint cycles of a permutation, fixed points included. Canonical form:
/// each cycle is rotated so its least point comes first and cycles are
/// sorted by least point, so equality is plain sequence equality.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;

  /// Canonicalizes an arbitrary cycle list covering {1..n} exactly once.
  static CycleDecomposition from_cycles(std::vector<std::vector<int>> raw, int n);

  /// Applies the cycles as a function; inverse of latinauto::cycles().
  Permutation to_permutation(int n) const;

  std::string str() const;  // e.g. "(1,7,8,4,6)(2,5,3)"

  friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;
};

/// result(x) = p(q(x)); orders must match.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

Permutation inverse(const Permutation& p);

/// a p a^{-1}; relabels the cycles of p by a, so cycle structure is preserved.
Permutation conjugate(const Permutation& p, const Permutation& a);

CycleDecomposition cycles(const Permutation& p);
CycleStructure cycle_structure(const Permutation& p);
int num_cycles(const Permutation& p);
Parity parity(const Permutation& p);

/// Text form: n whitespace-separated integers in image notation.
std::string to_text(const Permutation& p);
Permutation parse_permutation(std::string_view text);

}  // namespace latinauto

#endif
