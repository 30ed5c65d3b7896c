#pragma once

#include <vector>

#include "supervogan/family.hpp"

namespace svtest {

using supervogan::Family;
using supervogan::FamilyId;
using supervogan::make_family;
using supervogan::Rat;
using supervogan::rat;

// Every family instance with parameters up to max_mn, the desk-scale sweep.
inline std::vector<FamilyId> family_sweep(int max_mn) {
  std::vector<FamilyId> out;
  for (int m = 0; m <= max_mn; ++m)
    for (int n = 0; n <= max_mn; ++n) {
      if (m == n) continue;
      if (m == 0 && n == 0) continue;
      out.push_back(make_family(Family::A, m, n));
    }
  for (int m = 1; m <= max_mn; ++m)
    for (int n = 1; n <= max_mn; ++n) out.push_back(make_family(Family::B, m, n));
  for (int n = 1; n <= max_mn; ++n) out.push_back(make_family(Family::B0, 0, n));
  for (int n = 2; n <= max_mn; ++n) out.push_back(make_family(Family::C, 0, n));
  for (int m = 2; m <= max_mn; ++m)
    for (int n = 1; n <= max_mn; ++n) out.push_back(make_family(Family::D, m, n));
  out.push_back(make_family(Family::D21a, 2, 1, rat(1)));
  out.push_back(make_family(Family::D21a, 2, 1, rat(2)));
  out.push_back(make_family(Family::F4));
  out.push_back(make_family(Family::G3));
  return out;
}

}  // namespace svtest
