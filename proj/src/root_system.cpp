#include "lieherm/root_system.hpp"

#include <sstream>

namespace lieherm {

std::string Root::str() const {
  std::ostringstream os;
  if (len == 1) {
    os << "a" << start;
  } else {
    os << "a" << start << ".." << end();
  }
  return os.str();
}

bool root_sum(const Root& a, const Root& b, Root* out) {
  if (a.end() + 1 == b.start) {
    *out = Root{a.start, a.len + b.len};
    return true;
  }
  if (b.end() + 1 == a.start) {
    *out = Root{b.start, a.len + b.len};
    return true;
  }
  return false;
}

int RootSystem::index_of(const Root& r) const {
  for (size_t i = 0; i < positive_roots.size(); ++i)
    if (positive_roots[i] == r) return static_cast<int>(i);
  fail(ErrorKind::Internal, "root not in system: " + r.str());
}

RootSystem root_data(int N) {
  if (N < 2) fail(ErrorKind::InvalidRank, "type A needs N >= 2");
  RootSystem rs;
  rs.N = N;
  for (int k = 1; k <= N - 1; ++k)
    for (int j = 1; j <= N - k; ++j) rs.positive_roots.push_back(Root{j, k});
  rs.cartan_matrix.assign(N - 1, std::vector<int>(N - 1, 0));
  for (int i = 0; i < N - 1; ++i) {
    rs.cartan_matrix[i][i] = 2;
    if (i + 1 < N - 1) {
      rs.cartan_matrix[i][i + 1] = -1;
      rs.cartan_matrix[i + 1][i] = -1;
    }
  }
  return rs;
}

}  // namespace lieherm
