#pragma once

#include <optional>
#include <vector>

#include "supervogan/rational.hpp"

namespace supervogan {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row-major, rectangular

// Row-reduces a copy of m and returns its rank.
int rank(RatMat m);

// Kernel of m acting on column vectors: all x with m*x = 0.
// Returns a basis of the kernel (possibly empty).
std::vector<RatVec> kernel_basis(const RatMat& m);

// Solves m*x = b exactly. Returns nullopt when inconsistent; when the
// system is underdetermined an arbitrary solution is returned.
std::optional<RatVec> solve(const RatMat& m, const RatVec& b);

// Scales a nonzero rational vector to the unique primitive integer vector
// with positive first nonzero entry. Throws on the zero vector.
std::vector<long> primitive_integer_vector(const RatVec& v);

}  // namespace supervogan
