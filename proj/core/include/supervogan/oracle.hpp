#pragma once

#include <array>
#include <map>
#include <optional>

#include "supervogan/double_vogan.hpp"
#include "supervogan/supermatrix.hpp"

namespace supervogan {

// Explicit gl(m|n) matrix model. Basis E_ij (0-based indices), Cartan the
// diagonal, root vectors labeled by their weights over e1..em, d1..dn.
struct GlModel {
  int m = 0, n = 0;
  BilinearForm form;  // e/d symbols with the +1/-1 scales

  SuperMatrix unit(int i, int j) const { return SuperMatrix::unit(m, n, i, j); }
  // Weight of E_ij as a coordinate vector over the form's basis.
  RatVec weight(int i, int j) const;
  // alpha(H) for a diagonal H.
  Rat weight_on(const RatVec& weight, const SuperMatrix& h) const;
};

// Desk scale only: m+n <= 5.
GlModel gl_model(int m, int n);

// Re-verifies sum(a_v * root_v) = 0 with marks positive and primitive,
// using root coordinates looked up independently in full_root_set.
bool check_kernel(const Diagram& affine);

// Signed monomial map, optionally composed with x -> -x^st. Acts monomially
// on the E-basis, so fixed spaces are exact cycle counts.
struct InvolutionCandidate {
  int m = 0, n = 0;
  // action on basis: E_ij -> sign * E_{target}
  std::map<std::pair<int, int>, std::pair<std::pair<int, int>, int>> action;

  SuperMatrix apply(const SuperMatrix& x) const;
  bool operator<(const InvolutionCandidate& o) const { return action < o.action; }
  bool operator==(const InvolutionCandidate& o) const { return action == o.action; }
};

InvolutionCandidate compose(const InvolutionCandidate& a, const InvolutionCandidate& b);

// dim of the +1 eigenspace on the even and odd parts.
std::pair<int, int> fixed_dims(const InvolutionCandidate& c);

// All aut_{2,4} candidates: square restricted to the even part is the
// identity, square on the odd part globally +-1.
std::vector<InvolutionCandidate> involution_candidates(int m, int n);

using PairFingerprint = std::array<int, 6>;  // (sigma, theta, sigma*theta) x (even, odd)

struct PairCensus {
  size_t commuting_pairs = 0;
  size_t class_count = 0;  // up to signed-diagonal and block-permutation conjugation
  std::vector<PairFingerprint> fingerprints;  // one per class, sorted
};

// Exhaustive commuting-pair census for gl(m|n), m+n <= 3.
PairCensus brute_involution_pairs(int m, int n);

enum class CircleSignConvention { MinusOnCircled, PlusOnCircled };

struct RealizedPair {
  InvolutionCandidate theta;
  InvolutionCandidate sigma;
  PairFingerprint fingerprint{};
};

// Searches the candidate space for a commuting (theta, sigma) realizing an
// A-family double diagram: theta diagonal with sign -1 exactly on the black
// finite simple root vectors, sigma inducing the diagram involution on the
// affine simple roots with circling/painting signs on its fixed finite
// vertices. The affine vertex's sign is determined by the rest and ignored.
std::optional<RealizedPair> realize_double_diagram(
    const DoubleVoganSuperdiagram& x,
    CircleSignConvention convention = CircleSignConvention::MinusOnCircled);

}  // namespace supervogan
