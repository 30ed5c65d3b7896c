#include "supervogan/diagram.hpp"

#include <algorithm>
#include <numeric>

namespace supervogan {

bool DiagramMap::is_identity() const {
  for (size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<int>(i)) return false;
  return true;
}

bool DiagramMap::is_involution() const {
  for (size_t i = 0; i < perm.size(); ++i)
    if (perm[static_cast<size_t>(perm[i])] != static_cast<int>(i)) return false;
  return true;
}

DiagramMap DiagramMap::compose(const DiagramMap& inner) const {
  DiagramMap out;
  out.perm.resize(perm.size());
  for (size_t i = 0; i < perm.size(); ++i)
    out.perm[i] = perm[static_cast<size_t>(inner.perm[i])];
  return out;
}

DiagramMap DiagramMap::inverse() const {
  DiagramMap out;
  out.perm.resize(perm.size());
  for (size_t i = 0; i < perm.size(); ++i)
    out.perm[static_cast<size_t>(perm[i])] = static_cast<int>(i);
  return out;
}

size_t Diagram::index_of(int id) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].id == id) return i;
  throw StructuralError("no vertex with id " + std::to_string(id));
}

std::vector<int> Diagram::neighbors(int id) const {
  std::vector<int> out;
  for (const Edge& e : edges) {
    if (e.a == id) out.push_back(e.b);
    if (e.b == id) out.push_back(e.a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Diagram::ids() const {
  std::vector<int> out;
  out.reserve(vertices.size());
  for (const Vertex& v : vertices) out.push_back(v.id);
  return out;
}

int Diagram::max_id() const {
  int m = 0;
  for (const Vertex& v : vertices) m = std::max(m, v.id);
  return m;
}

namespace {

VertexKind kind_of_root(const Root& r) {
  if (r.parity == Parity::Even) return VertexKind::White;
  return r.isotropic ? VertexKind::Grey : VertexKind::OddNonIsotropic;
}

// Bond and arrow conventions, from the pairings:
//  - two non-isotropic roots: classical a_ij * a_ji lines, arrow toward the
//    root of smaller |(a,a)|;
//  - grey next to non-isotropic: |2(a_i,a_j)/(a_j,a_j)| lines, no arrow;
//  - grey pair: |(a_i,a_j)| lines, no arrow (the C(n) doubled link).
std::vector<Edge> edges_from_roots(const std::vector<Vertex>& vertices,
                                   const std::vector<Root>& roots,
                                   const BilinearForm& form) {
  std::vector<Edge> edges;
  for (size_t i = 0; i < roots.size(); ++i) {
    for (size_t j = i + 1; j < roots.size(); ++j) {
      const Rat p = inner(roots[i], roots[j], form);
      if (p == 0) continue;
      const Rat self_i = inner(roots[i], roots[i], form);
      const Rat self_j = inner(roots[j], roots[j], form);
      Edge e;
      e.a = vertices[i].id;
      e.b = vertices[j].id;
      if (e.a > e.b) std::swap(e.a, e.b);
      if (self_i != 0 && self_j != 0) {
        const Rat prod = abs((2 * p / self_i) * (2 * p / self_j));
        e.bond = is_integer(prod) ? static_cast<int>(to_long(prod)) : 1;
        if (e.bond >= 2 && abs(self_i) != abs(self_j)) {
          const bool a_shorter = (vertices[i].id == e.a) == (abs(self_i) < abs(self_j));
          e.arrow = a_shorter ? ArrowDir::TowardA : ArrowDir::TowardB;
        }
      } else if (self_i != 0 || self_j != 0) {
        const Rat nonzero_self = (self_i != 0) ? self_i : self_j;
        const Rat b = abs(2 * p / nonzero_self);
        e.bond = is_integer(b) ? std::max(1, static_cast<int>(to_long(b))) : 1;
      } else {
        const Rat b = abs(p);
        e.bond = is_integer(b) ? std::max(1, static_cast<int>(to_long(b))) : 1;
      }
      edges.push_back(e);
    }
  }
  return edges;
}

std::vector<long> marks_by_index(const std::vector<Root>& roots, size_t dim) {
  RatMat m(dim, RatVec(roots.size(), Rat(0)));
  for (size_t v = 0; v < roots.size(); ++v)
    for (size_t c = 0; c < dim; ++c) m[c][v] = roots[v].coords[c];
  const auto basis = kernel_basis(m);
  if (basis.size() != 1)
    throw KernelError("mark kernel has dimension " + std::to_string(basis.size()) +
                      ", expected 1 (wrong root data?)");
  std::vector<long> marks = primitive_integer_vector(basis[0]);
  for (long v : marks)
    if (v <= 0) throw KernelError("mark vector has a non-positive entry");
  return marks;
}

}  // namespace

Diagram diagram_of(const SimpleSystem& s) {
  Diagram d;
  d.family = s.family;
  d.form = s.form;
  d.roots = s.simple_roots;
  d.cartan = s.cartan;
  for (size_t i = 0; i < s.simple_roots.size(); ++i)
    d.vertices.push_back(Vertex{static_cast<int>(i) + 1, kind_of_root(s.simple_roots[i])});
  d.edges = edges_from_roots(d.vertices, d.roots, d.form);
  for (const Vertex& v : d.vertices) d.display_order.push_back(v.id);
  return d;
}

Diagram affine_extension(const Diagram& d, const Root& low) {
  if (d.affine) throw StructuralError("diagram is already affine");
  const Root expected = lowest_root(d.family);
  if (!(low == expected))
    throw StructuralError("given lowest root is inconsistent with the family " + d.family.str());

  Diagram ad;
  ad.family = d.family;
  ad.form = d.form;
  ad.affine = true;
  ad.affine_vertex_id = 0;
  ad.vertices.push_back(Vertex{0, kind_of_root(low)});
  ad.roots.push_back(low);
  for (size_t i = 0; i < d.vertices.size(); ++i) {
    ad.vertices.push_back(d.vertices[i]);
    ad.roots.push_back(d.roots[i]);
  }
  ad.edges = edges_from_roots(ad.vertices, ad.roots, ad.form);
  ad.cartan = cartan_from_roots(ad.roots, ad.form);

  const auto marks = marks_by_index(ad.roots, ad.form.dim());
  ad.marks = marks;

  // Figure order: the affine vertex leads except for D(2,1;a), whose figure
  // hangs it below the star.
  if (d.family.tag == Family::D21a) {
    ad.display_order = {1, 2, 3, 0};
  } else {
    ad.display_order.push_back(0);
    for (const Vertex& v : d.vertices) ad.display_order.push_back(v.id);
  }
  return ad;
}

std::vector<long> compute_marks(const Diagram& affine) {
  if (!affine.affine) throw StructuralError("compute_marks needs an affine diagram");
  const auto by_index = marks_by_index(affine.roots, affine.form.dim());
  std::vector<long> out;
  out.reserve(by_index.size());
  for (int id : affine.display_order) out.push_back(by_index[affine.index_of(id)]);
  return out;
}

namespace {

// Admissibility of a candidate permutation (by vertex position): the Gram
// matrix of simple-root pairings must be preserved up to one global nonzero
// scale, the freedom an algebra automorphism has on the invariant form.
// This is what makes D(2,1;a) arm swaps alpha-dependent. Kinds and marks
// are checked by the caller.
bool admissible(const Diagram& d, const std::vector<size_t>& pi) {
  const size_t n = d.vertices.size();
  Rat lambda(0);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i; j < n; ++j) {
      const Rat from = inner(d.roots[i], d.roots[j], d.form);
      const Rat to = inner(d.roots[pi[i]], d.roots[pi[j]], d.form);
      if (from == 0) {
        if (to != 0) return false;
        continue;
      }
      if (to == 0) return false;
      const Rat s = to / from;
      if (lambda == 0) lambda = s;
      else if (lambda != s) return false;
    }
  }
  return true;
}

void search(const Diagram& d, std::vector<size_t>& pi, std::vector<bool>& used, size_t depth,
            std::vector<DiagramMap>& out) {
  const size_t n = d.vertices.size();
  if (depth == n) {
    if (!admissible(d, pi)) return;
    DiagramMap m;
    m.perm.assign(static_cast<size_t>(d.max_id()) + 1, 0);
    for (size_t i = 0; i < m.perm.size(); ++i) m.perm[i] = static_cast<int>(i);
    for (size_t i = 0; i < n; ++i) m.perm[static_cast<size_t>(d.vertices[i].id)] = d.vertices[pi[i]].id;
    out.push_back(std::move(m));
    return;
  }
  for (size_t cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    if (d.vertices[cand].kind != d.vertices[depth].kind) continue;
    if (!d.marks.empty() && d.marks[cand] != d.marks[depth]) continue;
    // prune on pairing pattern with already-assigned vertices
    bool ok = true;
    for (size_t j = 0; j < depth && ok; ++j) {
      const bool from = inner(d.roots[depth], d.roots[j], d.form) != 0;
      const bool to = inner(d.roots[cand], d.roots[pi[j]], d.form) != 0;
      if (from != to) ok = false;
    }
    if (!ok) continue;
    used[cand] = true;
    pi[depth] = cand;
    search(d, pi, used, depth + 1, out);
    used[cand] = false;
  }
}

}  // namespace

std::vector<DiagramMap> automorphisms(const Diagram& d) {
  std::vector<size_t> pi(d.vertices.size(), 0);
  std::vector<bool> used(d.vertices.size(), false);
  std::vector<DiagramMap> out;
  search(d, pi, used, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DiagramMap> involutions(const Diagram& d) {
  std::vector<DiagramMap> out;
  for (DiagramMap& m : automorphisms(d))
    if (m.is_involution()) out.push_back(std::move(m));
  return out;
}

DiagramMap identity_map(const Diagram& d) {
  DiagramMap m;
  m.perm.resize(static_cast<size_t>(d.max_id()) + 1);
  std::iota(m.perm.begin(), m.perm.end(), 0);
  return m;
}

}  // namespace supervogan
