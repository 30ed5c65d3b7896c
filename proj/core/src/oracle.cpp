#include "supervogan/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace supervogan {

RatVec GlModel::weight(int i, int j) const {
  RatVec w(static_cast<size_t>(m + n), Rat(0));
  w[static_cast<size_t>(i)] += 1;
  w[static_cast<size_t>(j)] -= 1;
  return w;
}

Rat GlModel::weight_on(const RatVec& w, const SuperMatrix& h) const {
  Rat acc(0);
  for (size_t k = 0; k < w.size(); ++k) acc += w[k] * h.entries[k][k];
  return acc;
}

GlModel gl_model(int m, int n) {
  if (m + n > 5) throw std::invalid_argument("gl_model is desk scale only (m+n <= 5)");
  if (m < 1 || n < 1) throw std::invalid_argument("gl_model needs m >= 1 and n >= 1");
  GlModel g;
  g.m = m;
  g.n = n;
  for (int i = 1; i <= m; ++i) {
    g.form.symbols.push_back("e" + std::to_string(i));
    g.form.scales.push_back(Rat(1));
  }
  for (int j = 1; j <= n; ++j) {
    g.form.symbols.push_back("d" + std::to_string(j));
    g.form.scales.push_back(Rat(-1));
  }
  return g;
}

bool check_kernel(const Diagram& affine) {
  if (!affine.affine) throw StructuralError("check_kernel needs an affine diagram");
  const RootSet rs = full_root_set(affine.family);
  auto lookup = [&](const Root& r) -> const Root* {
    for (const Root& cand : rs.even)
      if (cand.coords == r.coords) return &cand;
    for (const Root& cand : rs.odd)
      if (cand.coords == r.coords) return &cand;
    return nullptr;
  };

  RatVec sum(affine.form.dim(), Rat(0));
  long gcd_acc = 0;
  for (size_t i = 0; i < affine.vertices.size(); ++i) {
    const Root* independent = lookup(affine.roots[i]);
    if (!independent)
      throw StructuralError("diagram root is not in the family's root system");
    if (affine.marks[i] < 1) return false;
    gcd_acc = std::gcd(gcd_acc, affine.marks[i]);
    for (size_t c = 0; c < sum.size(); ++c)
      sum[c] += Rat(affine.marks[i]) * independent->coords[c];
  }
  if (gcd_acc != 1) return false;
  for (const Rat& c : sum)
    if (c != 0) return false;
  return true;
}

SuperMatrix InvolutionCandidate::apply(const SuperMatrix& x) const {
  SuperMatrix out = SuperMatrix::zero(m, n);
  for (int i = 0; i < x.dim(); ++i)
    for (int j = 0; j < x.dim(); ++j) {
      const Rat& e = x.entries[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (e == 0) continue;
      const auto& [target, sign] = action.at({i, j});
      out.entries[static_cast<size_t>(target.first)][static_cast<size_t>(target.second)] +=
          Rat(sign) * e;
    }
  return out;
}

InvolutionCandidate compose(const InvolutionCandidate& a, const InvolutionCandidate& b) {
  InvolutionCandidate out;
  out.m = a.m;
  out.n = a.n;
  for (const auto& [src, mid] : b.action) {
    const auto& [mid_target, mid_sign] = mid;
    const auto& [final_target, final_sign] = a.action.at(mid_target);
    out.action[src] = {final_target, mid_sign * final_sign};
  }
  return out;
}

std::pair<int, int> fixed_dims(const InvolutionCandidate& c) {
  std::set<std::pair<int, int>> visited;
  int even_fixed = 0, odd_fixed = 0;
  const int total = c.m + c.n;
  for (int i = 0; i < total; ++i)
    for (int j = 0; j < total; ++j) {
      const std::pair<int, int> start{i, j};
      if (visited.count(start)) continue;
      // walk the signed cycle
      std::pair<int, int> cur = start;
      int sign = 1;
      do {
        visited.insert(cur);
        const auto& [next, s] = c.action.at(cur);
        sign *= s;
        cur = next;
      } while (cur != start);
      if (sign == 1) {
        const int parity = ((i < c.m ? 0 : 1) + (j < c.m ? 0 : 1)) % 2;
        (parity == 0 ? even_fixed : odd_fixed) += 1;
      }
    }
  return {even_fixed, odd_fixed};
}

namespace {

std::vector<std::vector<int>> block_permutations(int m, int n) {
  std::vector<int> pe(static_cast<size_t>(m)), pd(static_cast<size_t>(n));
  std::iota(pe.begin(), pe.end(), 0);
  std::iota(pd.begin(), pd.end(), m);
  std::vector<std::vector<int>> out;
  std::sort(pe.begin(), pe.end());
  do {
    std::sort(pd.begin(), pd.end());
    std::vector<int> saved_pd = pd;
    do {
      std::vector<int> p = pe;
      p.insert(p.end(), pd.begin(), pd.end());
      out.push_back(std::move(p));
    } while (std::next_permutation(pd.begin(), pd.end()));
    pd = saved_pd;
  } while (std::next_permutation(pe.begin(), pe.end()));
  return out;
}

InvolutionCandidate make_candidate(int m, int n, const std::vector<int>& perm,
                                   const std::vector<int>& signs, bool with_st) {
  InvolutionCandidate c;
  c.m = m;
  c.n = n;
  const int total = m + n;
  for (int i = 0; i < total; ++i)
    for (int j = 0; j < total; ++j) {
      int a = i, b = j, sign = 1;
      if (with_st) {
        // -st: E_ij -> -s E_ji with s = -1 exactly on the even-odd block
        const int s = (i < m && j >= m) ? -1 : 1;
        sign = -s;
        std::swap(a, b);
      }
      sign *= signs[static_cast<size_t>(a)] * signs[static_cast<size_t>(b)];
      c.action[{i, j}] = {{perm[static_cast<size_t>(a)], perm[static_cast<size_t>(b)]}, sign};
    }
  return c;
}

bool is_aut24(const InvolutionCandidate& c) {
  const InvolutionCandidate sq = compose(c, c);
  std::optional<int> odd_sign;
  for (const auto& [src, img] : sq.action) {
    if (img.first != src) return false;
    const int parity = ((src.first < c.m ? 0 : 1) + (src.second < c.m ? 0 : 1)) % 2;
    if (parity == 0) {
      if (img.second != 1) return false;
    } else {
      if (!odd_sign) odd_sign = img.second;
      else if (*odd_sign != img.second) return false;
    }
  }
  return true;
}

std::vector<InvolutionCandidate> monomial_maps(int m, int n, bool include_st) {
  std::set<InvolutionCandidate> dedup;
  const auto perms = block_permutations(m, n);
  const int total = m + n;
  for (const auto& p : perms) {
    for (size_t mask = 0; mask < (size_t{1} << total); ++mask) {
      std::vector<int> signs(static_cast<size_t>(total), 1);
      for (int k = 0; k < total; ++k)
        if (mask & (size_t{1} << k)) signs[static_cast<size_t>(k)] = -1;
      dedup.insert(make_candidate(m, n, p, signs, false));
      if (include_st) dedup.insert(make_candidate(m, n, p, signs, true));
    }
  }
  return {dedup.begin(), dedup.end()};
}

InvolutionCandidate inverse_of(const InvolutionCandidate& c) {
  InvolutionCandidate out;
  out.m = c.m;
  out.n = c.n;
  for (const auto& [src, img] : c.action) out.action[img.first] = {src, img.second};
  return out;
}

}  // namespace

std::vector<InvolutionCandidate> involution_candidates(int m, int n) {
  std::vector<InvolutionCandidate> out;
  for (auto& c : monomial_maps(m, n, true))
    if (is_aut24(c)) out.push_back(std::move(c));
  return out;
}

PairCensus brute_involution_pairs(int m, int n) {
  if (m + n > 3) throw std::invalid_argument("brute_involution_pairs is capped at m+n <= 3");
  const auto candidates = involution_candidates(m, n);
  const auto conj_group = monomial_maps(m, n, false);

  std::vector<std::pair<size_t, size_t>> commuting;
  for (size_t a = 0; a < candidates.size(); ++a)
    for (size_t b = 0; b < candidates.size(); ++b)
      if (compose(candidates[a], candidates[b]) == compose(candidates[b], candidates[a]))
        commuting.emplace_back(a, b);

  // orbit partition under simultaneous conjugation
  std::map<InvolutionCandidate, size_t> index_of;
  for (size_t i = 0; i < candidates.size(); ++i) index_of.emplace(candidates[i], i);

  PairCensus census;
  census.commuting_pairs = commuting.size();
  std::set<std::pair<size_t, size_t>> seen;
  for (const auto& pair : commuting) {
    if (seen.count(pair)) continue;
    for (const auto& g : conj_group) {
      const auto gi = inverse_of(g);
      const auto theta = compose(compose(g, candidates[pair.first]), gi);
      const auto sigma = compose(compose(g, candidates[pair.second]), gi);
      seen.insert({index_of.at(theta), index_of.at(sigma)});
    }
    census.class_count += 1;
    const auto [se, so] = fixed_dims(candidates[pair.second]);  // sigma
    const auto [te, to] = fixed_dims(candidates[pair.first]);   // theta
    const auto [ce, co] = fixed_dims(compose(candidates[pair.second], candidates[pair.first]));
    census.fingerprints.push_back({se, so, te, to, ce, co});
  }
  std::sort(census.fingerprints.begin(), census.fingerprints.end());
  return census;
}

std::optional<RealizedPair> realize_double_diagram(const DoubleVoganSuperdiagram& x,
                                                   CircleSignConvention convention) {
  const Diagram& d = *x.affine;
  if (d.family.tag != Family::A) return std::nullopt;
  const int m = d.family.m + 1, n = d.family.n + 1;
  const int r = m + n - 1;  // finite rank

  // vertex id k (1..r) carries root vector E_{k-1,k}; the affine vertex 0
  // carries E_{m+n-1,0}
  auto matrix_index = [&](int id) -> std::pair<int, int> {
    if (id == 0) return {m + n - 1, 0};
    return {id - 1, id};
  };

  auto required_sigma_sign = [&](int id) -> int {
    int sign = x.painted.count(id) ? -1 : 1;
    const bool circ = x.circled.count(id) > 0;
    if (convention == CircleSignConvention::MinusOnCircled) sign *= circ ? -1 : 1;
    else sign *= circ ? 1 : -1;
    return sign;
  };

  const auto candidates = involution_candidates(m, n);
  std::vector<const InvolutionCandidate*> sigmas, thetas;
  for (const auto& c : candidates) {
    // induced action on the affine simple roots
    bool sigma_ok = true, theta_ok = true;
    for (int id = 0; id <= r && (sigma_ok || theta_ok); ++id) {
      const auto src = matrix_index(id);
      const auto& [target, sign] = c.action.at(src);
      if (sigma_ok) {
        if (target != matrix_index(x.involution.apply(id))) sigma_ok = false;
        else if (id >= 1 && x.involution.apply(id) == id && sign != required_sigma_sign(id))
          sigma_ok = false;
      }
      if (theta_ok) {
        if (target != src) theta_ok = false;
        else if (id >= 1 && sign != (x.black.count(id) ? -1 : 1)) theta_ok = false;
      }
    }
    if (sigma_ok) sigmas.push_back(&c);
    if (theta_ok) thetas.push_back(&c);
  }

  for (const auto* theta : thetas)
    for (const auto* sigma : sigmas)
      if (compose(*theta, *sigma) == compose(*sigma, *theta)) {
        RealizedPair out;
        out.theta = *theta;
        out.sigma = *sigma;
        const auto [se, so] = fixed_dims(*sigma);
        const auto [te, to] = fixed_dims(*theta);
        const auto [ce, co] = fixed_dims(compose(*sigma, *theta));
        out.fingerprint = {se, so, te, to, ce, co};
        return out;
      }
  return std::nullopt;
}

}  // namespace supervogan
