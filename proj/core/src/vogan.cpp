#include "supervogan/vogan.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace supervogan {

namespace {

std::vector<int> fixed_points(const Diagram& d, const DiagramMap& inv) {
  std::vector<int> out;
  for (const Vertex& v : d.vertices)
    if (inv.apply(v.id) == v.id) out.push_back(v.id);
  return out;
}

std::vector<std::set<int>> subsets_of(const std::vector<int>& pool) {
  std::vector<std::set<int>> out;
  const size_t n = pool.size();
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    std::set<int> s;
    for (size_t i = 0; i < n; ++i)
      if (mask & (size_t{1} << i)) s.insert(pool[i]);
    out.push_back(std::move(s));
  }
  return out;
}

std::set<int> apply_map(const DiagramMap& m, const std::set<int>& s) {
  std::set<int> out;
  for (int id : s) out.insert(m.apply(id));
  return out;
}

}  // namespace

bool VoganSuperdiagram::valid() const {
  for (int id : painted) {
    if (involution.apply(id) != id) return false;
    if (diagram->vertex(id).kind != VertexKind::White) return false;
    if (circled.count(id)) return false;
  }
  for (int id : circled)
    if (involution.apply(id) != id) return false;
  return true;
}

std::vector<VoganSuperdiagram> enumerate_vogan(const DiagramPtr& d) {
  std::vector<VoganSuperdiagram> out;
  for (const DiagramMap& inv : involutions(*d)) {
    const std::vector<int> fixed = fixed_points(*d, inv);
    std::vector<int> fixed_white;
    for (int id : fixed)
      if (d->vertex(id).kind == VertexKind::White) fixed_white.push_back(id);
    for (const auto& painted : subsets_of(fixed_white)) {
      std::vector<int> circle_pool;
      for (int id : fixed)
        if (!painted.count(id)) circle_pool.push_back(id);
      for (auto& circled : subsets_of(circle_pool)) {
        VoganSuperdiagram v;
        v.diagram = d;
        v.involution = inv;
        v.painted = painted;
        v.circled = std::move(circled);
        out.push_back(std::move(v));
      }
    }
  }
  return out;
}

VoganSuperdiagram flip_move(const VoganSuperdiagram& v, int w) {
  if (!v.painted.count(w)) throw StructuralError("flip move at an unpainted vertex");
  const Diagram& d = *v.diagram;
  VoganSuperdiagram out = v;
  const Root& rw = d.root_of(w);
  const Rat self = inner(rw, rw, d.form);
  for (int u : d.neighbors(w)) {
    if (d.vertex(u).kind != VertexKind::White) continue;
    const Rat pairing = 2 * inner(d.root_of(u), rw, d.form) / self;
    if (!is_integer(pairing) || to_long(pairing) % 2 == 0) continue;
    if (out.painted.count(u)) out.painted.erase(u);
    else out.painted.insert(u);
  }
  return out;
}

std::vector<std::set<int>> painting_orbit(const VoganSuperdiagram& v) {
  std::set<std::set<int>> seen{v.painted};
  std::vector<std::set<int>> queue{v.painted};
  while (!queue.empty()) {
    std::set<int> cur = std::move(queue.back());
    queue.pop_back();
    VoganSuperdiagram state = v;
    state.painted = cur;
    for (int w : cur) {
      const auto next = flip_move(state, w).painted;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

size_t painting_bound(const Diagram& d) {
  // One painted vertex per connected component of the white subdiagram is
  // always reachable; the bound is 2 except where the even part splits into
  // three simple factors (D(2,1;a) and D(2,n)).
  std::map<int, int> comp;
  for (const Vertex& v : d.vertices)
    if (v.kind == VertexKind::White) comp[v.id] = v.id;
  std::function<int(int)> find = [&](int x) {
    return comp[x] == x ? x : comp[x] = find(comp[x]);
  };
  for (const Edge& e : d.edges)
    if (comp.count(e.a) && comp.count(e.b)) comp[find(e.a)] = find(e.b);
  std::set<int> reps;
  for (auto& [id, _] : comp) reps.insert(find(id));
  return std::max<size_t>(2, reps.size());
}

namespace {

VoganSuperdiagram orbit_minimum(const VoganSuperdiagram& v) {
  VoganSuperdiagram best = v;
  auto score = [&](const std::set<int>& painted) {
    size_t overlap = 0;
    for (int id : painted) overlap += v.circled.count(id);
    return std::tuple<size_t, size_t, std::set<int>>(painted.size(), overlap, painted);
  };
  auto best_score = score(v.painted);
  for (const auto& painted : painting_orbit(v)) {
    auto s = score(painted);
    if (s < best_score) {
      best_score = s;
      best.painted = painted;
    }
  }
  return best;
}

}  // namespace

VoganSuperdiagram canonicalize(const VoganSuperdiagram& v) {
  if (v.painted.size() <= painting_bound(*v.diagram)) return v;
  return orbit_minimum(v);
}

VoganSuperdiagram minimal_painting(const VoganSuperdiagram& v) { return orbit_minimum(v); }

namespace {

using StateKey = std::tuple<std::vector<int>, std::set<int>, std::set<int>>;

StateKey state_key(const VoganSuperdiagram& v, bool ignore_circling) {
  return {v.involution.perm, v.painted, ignore_circling ? std::set<int>{} : v.circled};
}

struct VClosure {
  VoganSuperdiagram best;
  std::set<StateKey> orbit;
};

// Closure under flip moves and automorphism conjugation, with its least state.
VClosure class_closure(const VoganSuperdiagram& v, const std::vector<DiagramMap>& autos,
                       bool ignore_circling) {
  VClosure out{v, {state_key(v, ignore_circling)}};
  std::vector<VoganSuperdiagram> queue{v};
  while (!queue.empty()) {
    VoganSuperdiagram cur = std::move(queue.back());
    queue.pop_back();
    if (state_key(cur, ignore_circling) < state_key(out.best, ignore_circling)) out.best = cur;
    for (int w : cur.painted) {
      VoganSuperdiagram next = flip_move(cur, w);
      if (out.orbit.insert(state_key(next, ignore_circling)).second) queue.push_back(next);
    }
    for (const DiagramMap& a : autos) {
      VoganSuperdiagram next = cur;
      next.involution = a.compose(cur.involution).compose(a.inverse());
      next.painted = apply_map(a, cur.painted);
      next.circled = apply_map(a, cur.circled);
      if (out.orbit.insert(state_key(next, ignore_circling)).second)
        queue.push_back(std::move(next));
    }
  }
  return out;
}

}  // namespace

VoganPartition equivalence_classes(const std::vector<VoganSuperdiagram>& vs,
                                   bool ignore_circling) {
  VoganPartition out;
  if (vs.empty()) return out;
  const auto autos = automorphisms(*vs.front().diagram);
  std::map<StateKey, size_t> class_of;  // every orbit member, filled once per class
  for (size_t i = 0; i < vs.size(); ++i) {
    const StateKey key = state_key(vs[i], ignore_circling);
    auto it = class_of.find(key);
    if (it != class_of.end()) {
      out.classes[it->second].push_back(i);
      continue;
    }
    VClosure closure = class_closure(vs[i], autos, ignore_circling);
    const size_t id = out.classes.size();
    for (const StateKey& member : closure.orbit) class_of.emplace(member, id);
    out.classes.push_back({i});
    out.representatives.push_back(std::move(closure.best));
  }
  return out;
}

namespace {

std::string num(long v) { return std::to_string(v); }

}  // namespace

RealFormLabel real_form_label(const VoganSuperdiagram& input) {
  const VoganSuperdiagram v = orbit_minimum(input);
  const Diagram& d = *v.diagram;
  const FamilyId& f = d.family;
  const bool trivial_inv = v.involution.is_identity();
  const auto& painted = v.painted;

  switch (f.tag) {
    case Family::A: {
      const long M = f.m + 1, N = f.n + 1;
      if (!trivial_inv) {
        if (painted.empty()) return {"su*(" + num(M) + "|" + num(N) + ")", true};
        return {"unlabeled", false};
      }
      if (f.permissive) return {"unlabeled", false};
      long p = 0, q = 0;
      for (int id : painted) {
        if (id <= f.m && p == 0) p = id;
        else if (id > f.m + 1 && q == 0) q = id - (f.m + 1);
        else return {"unlabeled", false};
      }
      if (p == 0 && q == 0) return {"su(" + num(M) + "|" + num(N) + ")-compact", true};
      if (q == 0) return {"su(" + num(p) + "," + num(M - p) + "|" + num(N) + ")", true};
      if (p == 0) return {"su(" + num(M) + "|" + num(q) + "," + num(N - q) + ")", true};
      return {"su(" + num(p) + "," + num(M - p) + "|" + num(q) + "," + num(N - q) + ")", true};
    }
    case Family::B: {
      if (!trivial_inv) return {"unlabeled", false};
      const long so_dim = 2 * f.m + 1, sp_dim = 2 * f.n;
      if (painted.empty())
        return {"osp(" + num(so_dim) + "|" + num(sp_dim) + ")-compact", true};
      if (painted.size() == 1) {
        const int id = *painted.begin();
        if (id > f.n) {  // painted in the so-part chain
          const long j = id - f.n;
          return {"osp(" + num(2 * j) + "," + num(so_dim - 2 * j) + "|" + num(sp_dim) + ")", true};
        }
      }
      return {"unlabeled", false};
    }
    case Family::B0:
      // osp(1|2n) has a unique real form.
      return {"osp(1|" + num(2 * f.n) + ",R)", true};
    case Family::C: {
      if (trivial_inv && painted.empty())
        return {"osp(2|" + num(2 * f.n - 2) + ")-compact", true};
      return {"unlabeled", false};
    }
    case Family::D: {
      if (!trivial_inv) return {"unlabeled", false};
      const long so_dim = 2 * f.m, sp_dim = 2 * f.n;
      if (painted.empty())
        return {"osp(" + num(so_dim) + "|" + num(sp_dim) + ")-compact", true};
      if (painted.size() == 1) {
        const int id = *painted.begin();
        if (id > f.n && id <= f.n + f.m - 2) {
          const long j = id - f.n;
          return {"osp(" + num(2 * j) + "," + num(so_dim - 2 * j) + "|" + num(sp_dim) + ")", true};
        }
      }
      return {"unlabeled", false};
    }
    default:
      return {"unlabeled", false};
  }
}

}  // namespace supervogan
