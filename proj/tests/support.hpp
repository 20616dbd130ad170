#pragma once

#include <initializer_list>

#include "hamflux/hamflux.hpp"

namespace hamflux::testing {

inline Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Matrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> rs;
  std::size_t cols = 0;
  for (const auto& r : rows) {
    rs.push_back(vec(r));
    cols = r.size();
  }
  return Matrix::from_rows(cols, rs);
}

}  // namespace hamflux::testing
