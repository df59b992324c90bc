#pragma once

#include <string>
#include <vector>

#include "lieherm/error.hpp"

namespace lieherm {

/// Positive root of type A_{N-1}: the sum of `len` consecutive simple roots
/// starting at `start` (1-based), i.e. the interval [start, start+len-1].
struct Root {
  int start = 1;
  int len = 1;

  int end() const { return start + len - 1; }

  /// Matrix-unit indices (a, b) with the root being the weight of E_{a,b},
  /// a = start, b = start + len.
  int row() const { return start; }
  int col() const { return start + len; }

  std::vector<int> coeffs(int rank) const {
    std::vector<int> c(rank, 0);
    for (int s = start; s <= end(); ++s) c[s - 1] = 1;
    return c;
  }

  bool operator==(const Root&) const = default;

  std::string str() const;
};

/// Sum of two positive roots if it is again a root (adjacent intervals).
bool root_sum(const Root& a, const Root& b, Root* out);

struct RootSystem {
  int N = 0;  // rank + 1
  std::vector<Root> positive_roots;         // ordered by (len, start)
  std::vector<std::vector<int>> cartan_matrix;

  int rank() const { return N - 1; }
  int num_positive() const { return static_cast<int>(positive_roots.size()); }
  int index_of(const Root& r) const;
};

RootSystem root_data(int N);

}  // namespace lieherm
