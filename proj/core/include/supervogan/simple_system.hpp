#pragma once

#include <optional>
#include <vector>

#include "supervogan/family.hpp"
#include "supervogan/linalg.hpp"
#include "supervogan/root.hpp"

namespace supervogan {

// Distinguished simple system of one family instance: ordered simple roots
// in the epsilon/delta coordinates, the invariant form, the Cartan matrix,
// its symmetrizer, and the dual basis vectors of the even-part vertices.
//
// Cartan normalization: a non-isotropic row i is 2(a_i,a_j)/(a_i,a_i); an
// isotropic (grey) row keeps the raw pairings scaled so its first nonzero
// off-diagonal entry has absolute value 1. Grey diagonals are 0.
struct SimpleSystem {
  FamilyId family;
  BilinearForm form;
  std::vector<Root> simple_roots;  // figure order, left to right
  RatMat cartan;
  RatVec symmetrizer;  // eps_kk with diag(eps) * cartan symmetric

  // omega_j with (omega_j, a_k) = delta_jk / eps_kk, for even vertices j.
  // Empty for degenerate instances (permissive A(n,n)).
  std::vector<std::optional<RatVec>> coweights_even;
  bool degenerate_form = false;
};

struct RootSet {
  std::vector<Root> even;
  std::vector<Root> odd;
};

SimpleSystem build_simple_system(const FamilyId& family);

// Closed-form enumeration of the full root system.
RootSet full_root_set(const FamilyId& family);

// Negative of the highest root of the distinguished positive system,
// found as the unique maximal-height positive root.
Root lowest_root(const FamilyId& family);

// Cartan matrix recomputed from pairings of the given roots under the
// stated normalization (shared by build and the verification sweep).
RatMat cartan_from_roots(const std::vector<Root>& roots, const BilinearForm& form);

}  // namespace supervogan
