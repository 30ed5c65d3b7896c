#pragma once

#include <stdexcept>
#include <vector>

#include "supervogan/simple_system.hpp"

namespace supervogan {

struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Signals root data whose mark kernel is not one-dimensional or not positive.
struct KernelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class VertexKind { White, Grey, OddNonIsotropic };

struct Vertex {
  int id = 0;        // figure order; finite diagrams use 1..r, the affine vertex is 0
  VertexKind kind = VertexKind::White;
};

enum class ArrowDir { None, TowardA, TowardB };

struct Edge {
  int a = 0, b = 0;  // a < b
  int bond = 1;
  ArrowDir arrow = ArrowDir::None;
};

// Vertex permutation given as id -> id over [0, max_id]; absent ids are fixed.
struct DiagramMap {
  std::vector<int> perm;

  int apply(int id) const { return perm[static_cast<size_t>(id)]; }
  bool is_identity() const;
  bool is_involution() const;
  DiagramMap compose(const DiagramMap& inner) const;  // this after inner
  DiagramMap inverse() const;

  auto operator<=>(const DiagramMap&) const = default;
};

// Dynkin diagram of a simple system; doubles as the affine diagram when
// extended. Root data is carried along since admissibility of diagram maps
// and the mark kernel are computed from it.
struct Diagram {
  FamilyId family;
  BilinearForm form;
  bool affine = false;
  int affine_vertex_id = -1;
  std::vector<Vertex> vertices;  // ascending id
  std::vector<Root> roots;       // parallel to vertices
  std::vector<Edge> edges;
  RatMat cartan;                 // by vertex position, same normalization as SimpleSystem
  std::vector<long> marks;       // parallel to vertices; empty for finite diagrams
  std::vector<int> display_order;  // ids in the paper's figure order

  size_t index_of(int id) const;
  const Vertex& vertex(int id) const { return vertices[index_of(id)]; }
  const Root& root_of(int id) const { return roots[index_of(id)]; }
  long mark_of(int id) const { return marks[index_of(id)]; }
  std::vector<int> neighbors(int id) const;
  std::vector<int> ids() const;
  int max_id() const;
  bool is_even_vertex(int id) const { return vertex(id).kind == VertexKind::White; }
};

Diagram diagram_of(const SimpleSystem& s);

// Adds the affine vertex (id 0) joined per the pairings with `low`, which
// must equal lowest_root(d.family); computes marks. StructuralError otherwise.
Diagram affine_extension(const Diagram& d, const Root& low);

// Primitive positive integer kernel vector of the affine root coordinates,
// returned in display order. KernelError if the kernel dimension is not one
// or an entry is not positive.
std::vector<long> compute_marks(const Diagram& affine);

// All admissible vertex permutations: kind- and mark-preserving maps whose
// action preserves every non-isotropic Cartan row exactly and every
// isotropic row up to a nonzero scale. Sorted lexicographically.
std::vector<DiagramMap> automorphisms(const Diagram& d);

// The order <= 2 elements of automorphisms(d), identity included.
std::vector<DiagramMap> involutions(const Diagram& d);

DiagramMap identity_map(const Diagram& d);

}  // namespace supervogan
