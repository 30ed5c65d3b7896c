#pragma once

#include <optional>

#include "supervogan/linalg.hpp"

namespace supervogan {

// Dense exact-rational matrix over C^(m|n): indices below m are even, the
// rest odd. Entry (i,j) has degree |i|+|j| mod 2.
struct SuperMatrix {
  int m = 0, n = 0;
  RatMat entries;

  int dim() const { return m + n; }
  int parity_of(int index) const { return index < m ? 0 : 1; }

  static SuperMatrix zero(int m, int n);
  static SuperMatrix unit(int m, int n, int i, int j);  // E_ij, 0-based

  // 0 or 1 when every nonzero entry has the same degree, nullopt otherwise.
  std::optional<int> homogeneous_degree() const;

  bool operator==(const SuperMatrix&) const = default;
};

SuperMatrix add(const SuperMatrix& a, const SuperMatrix& b);
SuperMatrix scale(const Rat& c, const SuperMatrix& a);
SuperMatrix mul(const SuperMatrix& a, const SuperMatrix& b);

// [x,y] = xy - (-1)^{|x||y|} yx for homogeneous arguments.
SuperMatrix supercommutator(const SuperMatrix& x, const SuperMatrix& y);

// str(x) = tr(A) - tr(D) on the diagonal blocks.
Rat supertrace(const SuperMatrix& x);

// Block supertranspose: [[A,B],[C,D]] -> [[A^t, C^t], [-B^t, D^t]].
// x -> -x^st is an automorphism of gl(m|n), of order 4 on the odd part.
SuperMatrix supertranspose(const SuperMatrix& x);

}  // namespace supervogan
