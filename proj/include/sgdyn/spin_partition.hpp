#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace sgdyn {

/// Partition of the electron labels {1,...,N} into two disjoint spin sets.
/// Either set may be empty or a singleton; products over an empty set are
/// defined as 1 throughout the library.
struct SpinPartition {
  int n_electrons = 0;
  std::vector<int> i1;  // 1-based electron labels
  std::vector<int> i2;

  SpinPartition() = default;

  SpinPartition(int n, std::vector<int> a, std::vector<int> b)
      : n_electrons(n), i1(std::move(a)), i2(std::move(b)) {
    std::sort(i1.begin(), i1.end());
    std::sort(i2.begin(), i2.end());
    validate();
  }

  /// All N electrons in the first set (one fixed spin state).
  static SpinPartition all_up(int n) {
    std::vector<int> a(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(j)] = j + 1;
    return SpinPartition(n, std::move(a), {});
  }

  bool contains(const std::vector<int>& set, int label) const {
    return std::binary_search(set.begin(), set.end(), label);
  }

  void validate() const {
    if (n_electrons <= 0) throw std::invalid_argument("SpinPartition: N must be positive");
    std::vector<int> all = i1;
    all.insert(all.end(), i2.begin(), i2.end());
    std::sort(all.begin(), all.end());
    if (static_cast<int>(all.size()) != n_electrons)
      throw std::invalid_argument("SpinPartition: |I1| + |I2| != N");
    for (int j = 0; j < n_electrons; ++j)
      if (all[static_cast<std::size_t>(j)] != j + 1)
        throw std::invalid_argument("SpinPartition: I1, I2 must partition {1,...,N}");
  }
};

}  // namespace sgdyn
