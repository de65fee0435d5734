#pragma once

#include <string>

#include "omega4/classify.hpp"

namespace omega4::testing {

inline AlgebraTable build_family(const std::string& type, int param,
                                 uint32_t p, int max_len = 40) {
  PrimeField f(p);
  FamilySpec fs;
  if (type == "i")
    fs = family_i(param, f);
  else if (type == "ii")
    fs = family_ii(param, f);
  else
    fs = family_iii(param, f);
  return build_algebra(fs.quiver, fs.relations, f, max_len);
}

/// Path algebra of 1 -> 2 with zero ideal; the standard non-symmetric
/// control.
inline AlgebraTable build_a2(uint32_t p) {
  Quiver q;
  q.num_vertices = 2;
  q.arrows = {Arrow{"a", 1, 2}};
  return build_algebra(q, {}, PrimeField(p));
}

}  // namespace omega4::testing
