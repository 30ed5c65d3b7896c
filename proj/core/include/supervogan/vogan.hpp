#pragma once

#include <memory>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "supervogan/diagram.hpp"

namespace supervogan {

using DiagramPtr = std::shared_ptr<const Diagram>;

// Vogan superdiagram: diagram involution of order <= 2, painting of fixed
// white vertices, circling of the remaining fixed vertices.
struct VoganSuperdiagram {
  DiagramPtr diagram;
  DiagramMap involution;
  std::set<int> painted;
  std::set<int> circled;

  // Type invariants: painted inside the fixed white vertices, circled inside
  // the fixed vertices, painted and circled disjoint.
  bool valid() const;

  auto key() const { return std::tie(involution.perm, painted, circled); }
  bool operator==(const VoganSuperdiagram& o) const { return key() == o.key(); }
  bool operator<(const VoganSuperdiagram& o) const { return key() < o.key(); }
};

// All valid (involution, painted, circled) triples in deterministic order:
// involutions lexicographically, then painted and circled subsets in
// ascending bitmask order over ascending vertex ids.
std::vector<VoganSuperdiagram> enumerate_vogan(const DiagramPtr& d);

// Flip move at a painted even vertex w: repaints every white neighbor whose
// pairing <u, w^v> is odd. Grey vertices are never touched. Involution and
// circling are carried unchanged.
VoganSuperdiagram flip_move(const VoganSuperdiagram& v, int w);

// All painted sets reachable from v by flip moves, sorted.
std::vector<std::set<int>> painting_orbit(const VoganSuperdiagram& v);

// Painted-set size every class can reach: 2, or 3 where the white part of
// the diagram has three components (D(2,1;a) and D(2,n)).
size_t painting_bound(const Diagram& d);

// Inputs within painting_bound are already canonical and returned as-is;
// larger paintings are replaced by the flip-orbit minimum under (painted
// size, overlap with circled, painted ids lexicographically). Idempotent;
// involution and circling unchanged.
VoganSuperdiagram canonicalize(const VoganSuperdiagram& v);

// Unconditional flip-orbit minimum under (painted size, overlap with
// circled, painted lexicographically); the witness for sharp bounds.
VoganSuperdiagram minimal_painting(const VoganSuperdiagram& v);

struct VoganPartition {
  std::vector<std::vector<size_t>> classes;          // indices into the input
  std::vector<VoganSuperdiagram> representatives;    // canonical per class
};

// Partition by orbits under flip moves plus diagram-automorphism
// conjugation. Representative: lexicographically least (involution word,
// painted, circled) in the orbit. ignore_circling drops circled sets from
// both the orbit identity and the keys.
VoganPartition equivalence_classes(const std::vector<VoganSuperdiagram>& vs,
                                   bool ignore_circling = false);

struct RealFormLabel {
  std::string display;  // e.g. "su(1,2|3)" or "unlabeled"
  bool labeled = false;
};

// Table-driven label of the canonical representative; returns an explicit
// "unlabeled" marker for anything outside the table.
RealFormLabel real_form_label(const VoganSuperdiagram& v);

}  // namespace supervogan
