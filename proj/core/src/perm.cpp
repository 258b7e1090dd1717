#include "latinauto/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace latinauto {

CycleStructure::CycleStructure(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("cycle structure parts must be >= 1");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

int CycleStructure::order() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string CycleStructure::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ']';
  return out;
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  const int n = static_cast<int>(img_.size());
  if (n == 0) throw std::invalid_argument("permutation order must be positive");
  std::vector<char> seen(n, 0);
  for (int v : img_) {
    if (v < 1 || v > n)
      throw std::invalid_argument("permutation image " + std::to_string(v) +
                                  " out of range 1.." + std::to_string(n));
    if (seen[v - 1])
      throw std::invalid_argument("permutation repeats image " + std::to_string(v));
    seen[v - 1] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("permutation order must be positive");
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img), unchecked_t{});
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("cannot compose permutations of different orders");
  const int n = p.size();
  std::vector<int> img(n);
  for (int x = 0; x < n; ++x) img[x] = p.img_[q.img_[x] - 1];
  return Permutation(std::move(img), Permutation::unchecked_t{});
}

Permutation inverse(const Permutation& p) {
  const int n = p.size();
  std::vector<int> img(n);
  for (int x = 0; x < n; ++x) img[p.img_[x] - 1] = x + 1;
  return Permutation(std::move(img), Permutation::unchecked_t{});
}

Permutation conjugate(const Permutation& p, const Permutation& a) {
  if (p.size() != a.size())
    throw std::invalid_argument("cannot conjugate permutations of different orders");
  const int n = p.size();
  std::vector<int> img(n);
  for (int x = 0; x < n; ++x) img[a.img_[x] - 1] = a.img_[p.img_[x] - 1];
  return Permutation(std::move(img), Permutation::unchecked_t{});
}

CycleDecomposition cycles(const Permutation& p) {
  const int n = p.size();
  CycleDecomposition dec;
  std::vector<char> seen(n, 0);
  for (int start = 1; start <= n; ++start) {
    if (seen[start - 1]) continue;
    std::vector<int> cyc;
    for (int x = start; !seen[x - 1]; x = p(x)) {
      seen[x - 1] = 1;
      cyc.push_back(x);
    }
    dec.cycles.push_back(std::move(cyc));
  }
  return dec;
}

CycleDecomposition CycleDecomposition::from_cycles(std::vector<std::vector<int>> raw, int n) {
  std::vector<char> seen(n, 0);
  int covered = 0;
  for (auto& cyc : raw) {
    if (cyc.empty()) throw std::invalid_argument("empty cycle");
    for (int x : cyc) {
      if (x < 1 || x > n)
        throw std::invalid_argument("cycle point " + std::to_string(x) + " out of range");
      if (seen[x - 1])
        throw std::invalid_argument("cycle point " + std::to_string(x) + " repeated");
      seen[x - 1] = 1;
      ++covered;
    }
    auto least = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), least, cyc.end());
  }
  if (covered != n)
    throw std::invalid_argument("cycles do not cover all of 1.." + std::to_string(n));
  std::sort(raw.begin(), raw.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  CycleDecomposition dec;
  dec.cycles = std::move(raw);
  return dec;
}

Permutation CycleDecomposition::to_permutation(int n) const {
  std::vector<int> img(n, 0);
  for (const auto& cyc : cycles) {
    for (std::size_t s = 0; s < cyc.size(); ++s) {
      int from = cyc[s];
      int to = cyc[(s + 1) % cyc.size()];
      if (from < 1 || from > n || img[from - 1] != 0)
        throw std::invalid_argument("cycles are not a valid decomposition");
      img[from - 1] = to;
    }
  }
  return Permutation(std::move(img));  // validating ctor catches gaps
}

std::string CycleDecomposition::str() const {
  std::string out;
  for (const auto& cyc : cycles) {
    out += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(cyc[i]);
    }
    out += ')';
  }
  return out;
}

CycleStructure cycle_structure(const Permutation& p) {
  const int n = p.size();
  std::vector<int> parts;
  std::vector<char> seen(n, 0);
  for (int start = 1; start <= n; ++start) {
    if (seen[start - 1]) continue;
    int len = 0;
    for (int x = start; !seen[x - 1]; x = p(x)) {
      seen[x - 1] = 1;
      ++len;
    }
    parts.push_back(len);
  }
  return CycleStructure(std::move(parts));
}

int num_cycles(const Permutation& p) {
  const int n = p.size();
  int count = 0;
  std::vector<char> seen(n, 0);
  for (int start = 1; start <= n; ++start) {
    if (seen[start - 1]) continue;
    ++count;
    for (int x = start; !seen[x - 1]; x = p(x)) seen[x - 1] = 1;
  }
  return count;
}

Parity parity(const Permutation& p) {
  return (p.size() - num_cycles(p)) % 2 == 0 ? Parity::even : Parity::odd;
}

std::string to_text(const Permutation& p) {
  std::string out;
  for (int x = 1; x <= p.size(); ++x) {
    if (x > 1) out += ' ';
    out += std::to_string(p(x));
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<int> img;
  int v;
  while (in >> v) img.push_back(v);
  if (!in.eof()) throw std::invalid_argument("permutation line contains a non-integer token");
  if (img.empty()) throw std::invalid_argument("empty permutation line");
  return Permutation(std::move(img));
}

}  // namespace latinauto
