#include "supervogan/double_vogan.hpp"

#include <algorithm>
#include <map>

namespace supervogan {

namespace {

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

bool setwise_invariant(const DiagramMap& m, const std::set<int>& s) {
  for (int id : s)
    if (!s.count(m.apply(id))) return false;
  return true;
}

}  // namespace

bool DoubleVoganSuperdiagram::valid() const {
  const Diagram& d = *affine;
  if (!setwise_invariant(involution, black)) return false;
  for (int id : black) {
    if (d.vertex(id).kind != VertexKind::White) return false;
    const long m = d.mark_of(id);
    if (m != 1 && m != 2) return false;
  }
  for (int id : circled)
    if (involution.apply(id) != id) return false;
  for (int id : painted) {
    if (involution.apply(id) != id) return false;
    if (d.vertex(id).kind != VertexKind::White) return false;
    if (black.count(id)) return false;
  }
  return true;
}

std::vector<DoubleVoganSuperdiagram> enumerate_almost_double(const DiagramPtr& ad) {
  if (!ad->affine) throw StructuralError("enumerate_almost_double needs an affine diagram");
  std::vector<DoubleVoganSuperdiagram> out;
  std::vector<int> eligible_black;
  for (const Vertex& v : ad->vertices)
    if (v.kind == VertexKind::White && (ad->mark_of(v.id) == 1 || ad->mark_of(v.id) == 2))
      eligible_black.push_back(v.id);

  for (const DiagramMap& inv : involutions(*ad)) {
    std::vector<int> fixed;
    for (const Vertex& v : ad->vertices)
      if (inv.apply(v.id) == v.id) fixed.push_back(v.id);
    for (const auto& black : subsets_of(eligible_black)) {
      if (!setwise_invariant(inv, black)) continue;
      std::vector<int> paint_pool;
      for (int id : fixed)
        if (ad->vertex(id).kind == VertexKind::White && !black.count(id))
          paint_pool.push_back(id);
      for (const auto& circled : subsets_of(fixed)) {
        for (auto& painted : subsets_of(paint_pool)) {
          DoubleVoganSuperdiagram x;
          x.affine = ad;
          x.involution = inv;
          x.black = black;
          x.circled = circled;
          x.painted = std::move(painted);
          out.push_back(std::move(x));
        }
      }
    }
  }
  return out;
}

bool is_double(const DoubleVoganSuperdiagram& x, RConvention r) {
  if (r == RConvention::R2) return true;
  switch (x.affine->family.tag) {
    case Family::A:
    case Family::B:
    case Family::B0: {
      long sum = 0;
      for (int id : x.black) sum += x.affine->mark_of(id);
      return sum % 2 == 0;
    }
    default:
      return true;  // outside the proposition's scope, or excluded by it
  }
}

namespace {

bool is_hermitian(const DoubleVoganSuperdiagram& x) {
  if (x.black.size() != 2) return false;
  for (int id : x.black)
    if (x.affine->mark_of(id) != 1) return false;
  return true;
}

}  // namespace

std::optional<bool> black_mark_sum_check(const DoubleVoganSuperdiagram& x) {
  if (x.black.size() != 2 || is_hermitian(x)) return std::nullopt;
  long sum = 0;
  for (int id : x.black) sum += x.affine->mark_of(id);
  return sum == 4;
}

HermitianTypeInfo hermitian_split(const DoubleVoganSuperdiagram& x) {
  HermitianTypeInfo info;
  if (!is_hermitian(x)) return info;
  info.hermitian = true;
  const int first = *x.black.begin();
  info.black_action =
      (x.involution.apply(first) == first) ? BlackAction::Preserves : BlackAction::Interchanges;
  info.sign_on_z0 = 1;
  info.sign_on_z1 = (info.black_action == BlackAction::Preserves) ? 1 : -1;
  return info;
}

namespace {

// Flip move on the white painting, acting in the diagram with the black
// vertices removed.
DoubleVoganSuperdiagram double_flip(const DoubleVoganSuperdiagram& x, int w) {
  const Diagram& d = *x.affine;
  DoubleVoganSuperdiagram out = x;
  const Root& rw = d.root_of(w);
  const Rat self = inner(rw, rw, d.form);
  for (int u : d.neighbors(w)) {
    if (d.vertex(u).kind != VertexKind::White || x.black.count(u)) continue;
    const Rat pairing = 2 * inner(d.root_of(u), rw, d.form) / self;
    if (!is_integer(pairing) || to_long(pairing) % 2 == 0) continue;
    if (out.painted.count(u)) out.painted.erase(u);
    else out.painted.insert(u);
  }
  return out;
}

using DKey = std::tuple<std::vector<int>, std::set<int>, std::set<int>, std::set<int>>;

DKey dkey(const DoubleVoganSuperdiagram& x, bool ignore_circling) {
  return {x.involution.perm, x.black, ignore_circling ? std::set<int>{} : x.circled, x.painted};
}

struct DClosure {
  DoubleVoganSuperdiagram best;
  std::set<DKey> orbit;
};

DClosure closure_of(const DoubleVoganSuperdiagram& x, const std::vector<DiagramMap>& autos,
                    bool ignore_circling) {
  DClosure out{x, {dkey(x, ignore_circling)}};
  std::vector<DoubleVoganSuperdiagram> queue{x};
  while (!queue.empty()) {
    DoubleVoganSuperdiagram cur = std::move(queue.back());
    queue.pop_back();
    if (dkey(cur, ignore_circling) < dkey(out.best, ignore_circling)) out.best = cur;
    for (int w : cur.painted) {
      DoubleVoganSuperdiagram next = double_flip(cur, w);
      if (out.orbit.insert(dkey(next, ignore_circling)).second) queue.push_back(std::move(next));
    }
    for (const DiagramMap& a : autos) {
      DoubleVoganSuperdiagram next = cur;
      next.involution = a.compose(cur.involution).compose(a.inverse());
      next.black = apply_map(a, cur.black);
      next.circled = apply_map(a, cur.circled);
      next.painted = apply_map(a, cur.painted);
      if (out.orbit.insert(dkey(next, ignore_circling)).second) queue.push_back(std::move(next));
    }
  }
  return out;
}

}  // namespace

DoubleVoganSuperdiagram double_canonical(const DoubleVoganSuperdiagram& x, bool ignore_circling) {
  return closure_of(x, automorphisms(*x.affine), ignore_circling).best;
}

DoublePartition double_classes(const std::vector<DoubleVoganSuperdiagram>& xs,
                               bool ignore_circling) {
  DoublePartition out;
  if (xs.empty()) return out;
  const auto autos = automorphisms(*xs.front().affine);
  std::map<DKey, size_t> class_of;  // every orbit member, filled once per class
  for (size_t i = 0; i < xs.size(); ++i) {
    const DKey key = dkey(xs[i], ignore_circling);
    auto it = class_of.find(key);
    if (it != class_of.end()) {
      out.classes[it->second].push_back(i);
      continue;
    }
    DClosure closure = closure_of(xs[i], autos, ignore_circling);
    const size_t id = out.classes.size();
    for (const DKey& member : closure.orbit) class_of.emplace(member, id);
    out.classes.push_back({i});
    out.representatives.push_back(std::move(closure.best));
  }
  return out;
}

namespace {

struct CaptionEntry {
  const char* id;
  const char* numerator;
  const char* denominator;
};

SymmetricSuperpair caption(const CaptionEntry& e) {
  SymmetricSuperpair p;
  p.classified = true;
  p.caption_id = e.id;
  p.numerator = e.numerator;
  p.denominator = e.denominator;
  return p;
}

// Figure captions, verbatim up to the transliteration documented in the
// README (subscript r as _r, fraktur dropped).
const CaptionEntry kA1{"A.1", "(p)sl_r(m|n)", "sl_r(p)⊕sl_r(m−p)⊕u(1)⊕ℝ"};
const CaptionEntry kA2{"A.2", "su*(2m|2n)", "o*(2m)⊕o*(2n)"};
const CaptionEntry kA3{"A.3", "(p)su(m,p|n,q)", "su(p,m−p)⊕su(r,n−r)⊕iℝ"};
const CaptionEntry kA4{"A.4", "(p)su(m,p|n,q)", "osp(m,p|n)"};
const CaptionEntry kA5{"A.5", "(p)su(m,p|n,q)", "osp*(m,p|n)"};
const CaptionEntry kA6{"A.6", "(p)su(m,p|n,q)", "upq(m,p)"};
const CaptionEntry kB1{"B.1", "osp(m,p|2n)", "(sp(m,ℝ))"};
const CaptionEntry kB2{"B.2", "osp(m,p|2n)", "(sp(m,ℝ)⊕so(p,q))"};
const CaptionEntry kC1{"C.1", "osp(2|2n)", "(sp(n,ℝ)⊕so(2))"};
const CaptionEntry kC2{"C.2", "osp(2|2n)", "(sp(r,s)⊕so(2))"};
const CaptionEntry kDa1{"Da.1", "D(α)", "(su(2)⊕su(2)⊕sl(2,ℝ))"};
const CaptionEntry kDa2{"Da.2", "D(α)", "(sl(2,ℝ)⊕sl(2,ℝ)⊕sl(2,ℝ))"};
const CaptionEntry kDa3{"Da.3", "D(α)", "(sl(2,ℂ)⊕sl(2,ℝ))"};
const CaptionEntry kF1{"F4.1", "F(4)", "(su(2,ℝ)⊕so(1,6))"};
const CaptionEntry kF2{"F4.2", "F(4)", "(su(2,ℝ)⊕so(2,5))"};
const CaptionEntry kF3{"F4.3", "F(4)", "(sl(2,ℝ)⊕so(3,4))"};
const CaptionEntry kF4{"F4.4", "F(4)", "(sl(2,ℝ)⊕so(7))"};
const CaptionEntry kG1{"G3.1", "G(3)", "(sl(2,ℝ)⊕g_c)"};
const CaptionEntry kG2{"G3.2", "G(3)", "(sl(2,ℝ)⊕g_s)"};

}  // namespace

SymmetricSuperpair classify(const DoubleVoganSuperdiagram& input) {
  return classify_canonical(double_canonical(input, false));
}

SymmetricSuperpair classify_canonical(const DoubleVoganSuperdiagram& x) {
  const Diagram& d = *x.affine;
  const FamilyId& f = d.family;
  const bool trivial = x.involution.is_identity();
  const bool plain = x.circled.empty() && x.painted.empty();

  size_t black_circled = 0, white_circled = 0, grey_circled = 0;
  for (int id : x.circled) {
    if (x.black.count(id)) ++black_circled;
    else if (d.vertex(id).kind == VertexKind::White) ++white_circled;
    else ++grey_circled;
  }

  switch (f.tag) {
    case Family::A: {
      auto in_e_run = [&](int id) { return id >= 1 && id <= f.m; };
      auto in_d_run = [&](int id) { return id >= f.m + 2 && id <= f.m + f.n + 1; };
      if (!trivial && x.black.size() == 2 && plain) {
        bool fixed = true, e_one = false, d_one = false;
        for (int id : x.black) {
          if (x.involution.apply(id) != id) fixed = false;
          if (in_e_run(id)) e_one = !e_one;
          if (in_d_run(id)) d_one = !d_one;
        }
        if (fixed && e_one && d_one) return caption(kA1);
      }
      if (!trivial && x.black.empty() && plain) return caption(kA2);
      if (trivial && x.painted.empty() && grey_circled == 0) {
        if (x.black.size() == 2 && black_circled == 2 && white_circled == 0) return caption(kA3);
        if (x.black.size() == 1 && black_circled == 1 && white_circled == 1) return caption(kA4);
        if (x.black.empty() && white_circled == 2) return caption(kA5);
        if (x.black.size() == 2 && x.circled.empty()) return caption(kA6);
      }
      return {};
    }
    case Family::B: {
      if (!trivial || !plain) return {};
      auto d_side = [&](int id) { return id >= 1 && id <= f.n - 1; };
      auto e_side = [&](int id) { return id >= f.n + 1 && id <= f.n + f.m; };
      if (x.black.size() == 1 && d_side(*x.black.begin())) return caption(kB1);
      if (x.black.size() == 2) {
        const int b1 = *x.black.begin(), b2 = *std::next(x.black.begin());
        if (d_side(b1) && e_side(b2)) return caption(kB2);
      }
      return {};
    }
    case Family::C: {
      const int tail = f.n, chain_head = 2;
      if (!trivial || !x.painted.empty()) return {};
      if (x.black == std::set<int>{tail} && x.circled == std::set<int>{tail}) return caption(kC1);
      if (f.n >= 3 && x.black == std::set<int>{chain_head} && x.circled == std::set<int>{tail})
        return caption(kC2);
      return {};
    }
    case Family::D21a: {
      if (!plain) return {};
      if (trivial && x.black.empty()) return caption(kDa1);
      if (trivial && x.black == std::set<int>{0}) return caption(kDa2);
      if (!trivial && x.black.empty()) return caption(kDa3);
      return {};
    }
    case Family::F4: {
      if (!trivial || !plain) return {};
      if (x.black == std::set<int>{2}) return caption(kF1);
      if (x.black == std::set<int>{3}) return caption(kF2);
      if (x.black == std::set<int>{0, 4}) return caption(kF3);
      if (x.black == std::set<int>{0}) return caption(kF4);
      return {};
    }
    case Family::G3: {
      if (!trivial || !plain) return {};
      if (x.black == std::set<int>{3}) return caption(kG1);
      if (x.black == std::set<int>{0}) return caption(kG2);
      return {};
    }
    default:
      return {};
  }
}

ClassificationTable enumerate_pairs(const FamilyId& family, RConvention r, bool ignore_circling) {
  const Diagram finite = diagram_of(build_simple_system(family));
  const auto ad = std::make_shared<Diagram>(affine_extension(finite, lowest_root(family)));
  std::vector<DoubleVoganSuperdiagram> doubles;
  for (auto& x : enumerate_almost_double(ad))
    if (is_double(x, r)) doubles.push_back(std::move(x));

  const DoublePartition part = double_classes(doubles, ignore_circling);
  ClassificationTable table;
  table.family = family;
  table.r = r;
  for (size_t c = 0; c < part.classes.size(); ++c) {
    PairTableRow row;
    row.representative = part.representatives[c];
    row.class_size = part.classes[c].size();
    row.hermitian = hermitian_split(row.representative);
    row.mark_sum_check = black_mark_sum_check(row.representative);
    row.label = ignore_circling ? classify(row.representative)
                                : classify_canonical(row.representative);
    table.rows.push_back(std::move(row));
  }
  std::sort(table.rows.begin(), table.rows.end(),
            [](const PairTableRow& a, const PairTableRow& b) {
              return a.representative < b.representative;
            });
  return table;
}

}  // namespace supervogan
