#include "mirrorkit/lattice.hpp"

#include <sstream>

namespace mirrorkit {

Integer pair(const MVector& m, const NVector& n) {
  if (m.dim() != n.dim())
    throw DimensionError("pairing of M-vector of dimension " + std::to_string(m.dim()) +
                         " with N-vector of dimension " + std::to_string(n.dim()));
  Integer s = 0;
  for (Index i = 0; i < m.dim(); ++i) s += m[i] * n[i];
  return s;
}

namespace {
template <class Tag>
std::string format(const LatticeVector<Tag>& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}
}  // namespace

std::string to_string(const MVector& v) { return format(v); }
std::string to_string(const NVector& v) { return format(v); }

}  // namespace mirrorkit
