// Shared shorthand for the unit tests.
#pragma once

#include "bggkit/bggkit.hpp"

#include <string>
#include <vector>

namespace bggkit::testutil {

inline RootSystem make_rs(const std::string& type) {
  return build_root_system(DynkinSpec::parse(type));
}

inline ParabolicData make_pd(const RootSystem& rs, std::vector<int> crossed) {
  ParabolicSpec ps;
  ps.crossed = std::move(crossed);
  return make_parabolic(rs, ps);
}

inline ParabolicData make_borel(const RootSystem& rs) {
  std::vector<int> all;
  for (int i = 1; i <= rs.rank; ++i) all.push_back(i);
  return make_pd(rs, all);
}

inline Weight W(const std::vector<long long>& m) { return Weight::from_ints(m); }

inline Root find_root(const RootSystem& rs, const std::vector<int>& c) {
  const int idx = rs.root_index(Root{c});
  if (idx < 0) throw std::logic_error("not a positive root in this system");
  return rs.positive[idx];
}

}  // namespace bggkit::testutil
