#pragma once

#include <string>

#include "supervogan/rational.hpp"

namespace supervogan {

// The eight basic classical families handled by the library.
enum class Family { A, B, B0, C, D, D21a, F4, G3 };

std::string family_name(Family f);

// One family instance: tag plus parameters. The parameter conventions are
//   A(m,n)      = sl(m+1|n+1), m,n >= 0, m != n unless permissive
//   B(m,n)      = osp(2m+1|2n), m >= 1, n >= 1
//   B(0,n)      = osp(1|2n), n >= 1
//   C(n)        = osp(2|2n-2), n >= 2
//   D(m,n)      = osp(2m|2n), m >= 2, n >= 1
//   D(2,1;a)    = the one-parameter family, a not in {0, -1}
//   F(4), G(3)  = the exceptional ones, no parameters
struct FamilyId {
  Family tag = Family::A;
  int m = 0;
  int n = 0;
  Rat alpha = Rat(0);      // meaningful for D21a only
  bool permissive = false; // admits A(n,n) with a warning, no labels

  // Throws std::invalid_argument naming the violated constraint.
  void validate() const;

  // Display form, e.g. "A(2,1)", "D(2,1;a=1/2)".
  std::string str() const;

  bool operator==(const FamilyId&) const = default;
};

FamilyId make_family(Family tag, int m = 0, int n = 0, Rat alpha = Rat(0),
                     bool permissive = false);

// Parses the CLI family grammar:  NAME "(" int ["," int] [";a=" rational] ")".
// Accepts A,B,C,D,F,G as names; B(0,n) and D(2,1;a=..) are recognized from
// their parameters. Throws std::invalid_argument on malformed specs.
FamilyId parse_family_spec(const std::string& spec, bool permissive = false);

// Rank of the finite simple system (number of simple roots).
int finite_rank(const FamilyId& f);

}  // namespace supervogan
