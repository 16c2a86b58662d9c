#pragma once

#include <string>
#include <vector>

#include "qha/algebra.hpp"
#include "qha/families.hpp"
#include "qha/pathmod.hpp"

namespace fixtures {

// FIX-A2: the smallest nontrivial quiver 1 -> 2.
inline const char* kA2 = "vertices 1 2\narrow a 1 2\n";
// FIX-L2: one loop with square zero.
inline const char* kL2 = "vertices 1\narrow x 1 1\nrelation x x\n";
// FIX-N3: 1 -> 2 -> 3 with the composite zero.
inline const char* kN3 = "vertices 1 2 3\narrow a 1 2\narrow b 2 3\nrelation a b\n";

inline qha::Algebra a2() { return qha::build(qha::parse(kA2)); }
inline qha::Algebra l2() { return qha::build(qha::parse(kL2)); }
inline qha::Algebra n3() { return qha::build(qha::parse(kN3)); }
inline qha::Algebra e41(int m) { return qha::build(qha::parse(qha::example41_text(m))); }
inline qha::Algebra e42(int m) { return qha::build(qha::parse(qha::example42_text(m))); }

// vertex index by display name
inline int vx(const qha::Algebra& a, const std::string& name) {
  return a.pres.quiver.vertex_index(name);
}

// basis path from an arrow-name word starting at the word's own source
inline qha::PathId word(const qha::Algebra& a, const std::vector<std::string>& names) {
  std::vector<int> arrows;
  for (const auto& n : names) arrows.push_back(a.pres.quiver.arrow_index(n));
  const int src = a.pres.quiver.arrows[arrows.front()].source;
  return *qha::find_path(a, src, arrows);
}

inline qha::SimpleSet range_set(const qha::Algebra& a, int lo, int hi) {
  qha::SimpleSet v(a.num_vertices());
  for (int i = lo; i <= hi; ++i) v.insert(vx(a, std::to_string(i)));
  return v;
}

}  // namespace fixtures
