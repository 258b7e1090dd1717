// Shared test fixtures: the order-8 reference square, small group tables,
// and helpers.
#ifndef LATINAUTO_TESTS_FIXTURES_HPP
#define LATINAUTO_TESTS_FIXTURES_HPP

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "latinauto/latin.hpp"
#include "latinauto/perm.hpp"

namespace fixtures {

inline const std::vector<std::vector<int>>& l8_grid() {
  static const std::vector<std::vector<int>> grid = {
      {1, 2, 3, 4, 5, 6, 7, 8}, {2, 1, 4, 6, 8, 7, 5, 3}, {3, 4, 1, 2, 6, 5, 8, 7},
      {4, 5, 8, 7, 3, 2, 1, 6}, {5, 7, 6, 1, 4, 8, 3, 2}, {6, 8, 5, 3, 7, 1, 2, 4},
      {7, 6, 2, 8, 1, 3, 4, 5}, {8, 3, 7, 5, 2, 4, 6, 1}};
  return grid;
}

inline latinauto::LatinSquare l8() { return latinauto::LatinSquare::from_grid(l8_grid()); }

// The one nontrivial autotopism of l8: row map below with column choice 2.
inline latinauto::Permutation l8_alpha() {
  return latinauto::Permutation({2, 1, 8, 6, 7, 4, 5, 3});
}

inline latinauto::LatinSquare klein4() {
  return latinauto::LatinSquare::from_grid(
      {{1, 2, 3, 4}, {2, 1, 4, 3}, {3, 4, 1, 2}, {4, 3, 2, 1}});
}

// Multiplication table of the full symmetric group on three points, identity
// first, remaining elements in image order.
inline latinauto::LatinSquare s3_table() {
  std::vector<std::vector<int>> elems;
  std::vector<int> img = {1, 2, 3};
  do {
    elems.push_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  const int n = static_cast<int>(elems.size());
  auto index_of = [&](const std::vector<int>& p) {
    return static_cast<int>(std::find(elems.begin(), elems.end(), p) - elems.begin()) + 1;
  };
  std::vector<std::vector<int>> grid(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<int> prod(3);
      for (int x = 0; x < 3; ++x) prod[x] = elems[i][elems[j][x] - 1];
      grid[i][j] = index_of(prod);
    }
  }
  return latinauto::LatinSquare::from_grid(grid);
}

inline int phi(int n) {
  int out = 0;
  for (int a = 1; a <= n; ++a) {
    int x = a, y = n;
    while (y) {
      int t = x % y;
      x = y;
      y = t;
    }
    if (x == 1) ++out;
  }
  return out;
}

inline latinauto::Permutation random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i + 1;
  std::shuffle(img.begin(), img.end(), rng);
  return latinauto::Permutation(std::move(img));
}

}  // namespace fixtures

#endif
