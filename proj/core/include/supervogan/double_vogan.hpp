#pragma once

#include <optional>
#include <string>

#include "supervogan/vogan.hpp"

namespace supervogan {

// Reading of "r" in the parity condition r * sum(a_black) = even. R1 tests
// the plain parity of the black mark sum; R2 makes the condition vacuous.
enum class RConvention { R1, R2 };

// Two superimposed Vogan structures on an affine diagram: theta is encoded
// by the black vertices, sigma by the diagram involution, the circling of
// fixed vertices, and the white painting of the non-black part.
struct DoubleVoganSuperdiagram {
  DiagramPtr affine;
  DiagramMap involution;
  std::set<int> black;    // even vertices of mark 1 or 2, involution-invariant setwise
  std::set<int> circled;  // subset of the involution's fixed vertices (blacks allowed)
  std::set<int> painted;  // white painting on even fixed non-black vertices

  bool valid() const;

  auto key() const { return std::tie(involution.perm, black, circled, painted); }
  bool operator==(const DoubleVoganSuperdiagram& o) const { return key() == o.key(); }
  bool operator<(const DoubleVoganSuperdiagram& o) const { return key() < o.key(); }
};

// Every structure satisfying the type invariants, deterministic order:
// involutions lexicographically, then black/circled/painted subsets in
// ascending bitmask order over ascending ids.
std::vector<DoubleVoganSuperdiagram> enumerate_almost_double(const DiagramPtr& ad);

// Parity filter of Prop-2.4 scope: the black mark sum must be even for the
// A and B families; all other families pass unconditionally (D(2,1;a) and
// F(4) are excluded explicitly, C/D/G(3) are outside the proposition).
bool is_double(const DoubleVoganSuperdiagram& x, RConvention r = RConvention::R1);

// a_gamma + a_delta == 4 for a non-Hermitian two-black diagram; nullopt when
// the precondition fails (not exactly two blacks, or Hermitian type).
std::optional<bool> black_mark_sum_check(const DoubleVoganSuperdiagram& x);

enum class BlackAction { Preserves, Interchanges };

struct HermitianTypeInfo {
  bool hermitian = false;  // exactly two black vertices, both of mark 1
  BlackAction black_action = BlackAction::Preserves;
  int sign_on_z0 = 1;
  int sign_on_z1 = 1;
};

// Prop 1.4 table; hermitian=false marks the not-applicable case.
HermitianTypeInfo hermitian_split(const DoubleVoganSuperdiagram& x);

struct SymmetricSuperpair {
  bool classified = false;
  std::string numerator;    // verbatim caption pieces
  std::string denominator;
  std::string caption_id;   // stable id of the figure caption, e.g. "A.2"

  std::string display() const {
    return classified ? numerator + "/" + denominator : "unclassified";
  }
};

// Table-driven mapping from class-invariant features of the canonical form
// to the figure caption strings; "unclassified" for anything else.
SymmetricSuperpair classify(const DoubleVoganSuperdiagram& x);

// Same table lookup without re-canonicalizing; x must already be the
// canonical class member (as produced by double_canonical or double_classes).
SymmetricSuperpair classify_canonical(const DoubleVoganSuperdiagram& x);

struct DoublePartition {
  std::vector<std::vector<size_t>> classes;
  std::vector<DoubleVoganSuperdiagram> representatives;
};

// Orbits under white-painting flips (restricted to non-black vertices) and
// automorphism conjugation.
DoublePartition double_classes(const std::vector<DoubleVoganSuperdiagram>& xs,
                               bool ignore_circling = false);

// Canonical (least) member of the class of x.
DoubleVoganSuperdiagram double_canonical(const DoubleVoganSuperdiagram& x,
                                         bool ignore_circling = false);

struct PairTableRow {
  DoubleVoganSuperdiagram representative;
  size_t class_size = 0;
  HermitianTypeInfo hermitian;
  std::optional<bool> mark_sum_check;
  SymmetricSuperpair label;
};

struct ClassificationTable {
  FamilyId family;
  RConvention r = RConvention::R1;
  std::vector<PairTableRow> rows;
};

// All double classes of the family with their superpair labels.
ClassificationTable enumerate_pairs(const FamilyId& family, RConvention r = RConvention::R1,
                                    bool ignore_circling = false);

}  // namespace supervogan
