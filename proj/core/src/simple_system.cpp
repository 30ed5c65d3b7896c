#include "supervogan/simple_system.hpp"

#include <algorithm>
#include <stdexcept>

namespace supervogan {

namespace {

std::vector<Rat> zeros(size_t n) { return std::vector<Rat>(n, Rat(0)); }

// Builds basis symbols e1..eM, d1..dN with form scales (+se, -sd).
BilinearForm classical_form(int num_e, int num_d, const Rat& se = Rat(1),
                            const Rat& sd = Rat(1)) {
  BilinearForm f;
  for (int i = 1; i <= num_e; ++i) {
    f.symbols.push_back("e" + std::to_string(i));
    f.scales.push_back(se);
  }
  for (int j = 1; j <= num_d; ++j) {
    f.symbols.push_back("d" + std::to_string(j));
    f.scales.push_back(-sd);
  }
  return f;
}

struct Builder {
  BilinearForm form;
  int num_e = 0;

  std::vector<Rat> vec() const { return zeros(form.dim()); }
  size_t e(int i) const { return static_cast<size_t>(i - 1); }
  size_t d(int j) const { return static_cast<size_t>(num_e + j - 1); }

  Root root(std::vector<Rat> coords, Parity p) const {
    return make_root(std::move(coords), p, form);
  }
  Root e_minus_e(int i, int j) const {
    auto v = vec();
    v[e(i)] = 1; v[e(j)] = -1;
    return root(std::move(v), Parity::Even);
  }
  Root d_minus_d(int i, int j) const {
    auto v = vec();
    v[d(i)] = 1; v[d(j)] = -1;
    return root(std::move(v), Parity::Even);
  }
};

}  // namespace

RatMat cartan_from_roots(const std::vector<Root>& roots, const BilinearForm& form) {
  const size_t r = roots.size();
  RatMat c(r, zeros(r));
  for (size_t i = 0; i < r; ++i) {
    const Rat self = inner(roots[i], roots[i], form);
    if (self != 0) {
      for (size_t j = 0; j < r; ++j) c[i][j] = 2 * inner(roots[i], roots[j], form) / self;
    } else {
      Rat scale(0);
      for (size_t j = 0; j < r; ++j) {
        if (j == i) continue;
        const Rat p = inner(roots[i], roots[j], form);
        if (p != 0) { scale = 1 / abs(p); break; }
      }
      if (scale == 0) throw std::runtime_error("isotropic root orthogonal to all others");
      for (size_t j = 0; j < r; ++j)
        c[i][j] = (j == i) ? Rat(0) : scale * inner(roots[i], roots[j], form);
    }
  }
  return c;
}

namespace {

// Simple roots per family, figure order. See the header for conventions.
std::pair<BilinearForm, std::vector<Root>> simple_roots_of(const FamilyId& f) {
  switch (f.tag) {
    case Family::A: {
      Builder b{classical_form(f.m + 1, f.n + 1), f.m + 1};
      std::vector<Root> roots;
      for (int i = 1; i <= f.m; ++i) roots.push_back(b.e_minus_e(i, i + 1));
      {
        auto v = b.vec();
        v[b.e(f.m + 1)] = 1; v[b.d(1)] = -1;
        roots.push_back(b.root(std::move(v), Parity::Odd));
      }
      for (int j = 1; j <= f.n; ++j) roots.push_back(b.d_minus_d(j, j + 1));
      return {b.form, std::move(roots)};
    }
    case Family::B: {
      Builder b{classical_form(f.m, f.n), f.m};
      std::vector<Root> roots;
      for (int j = 1; j < f.n; ++j) roots.push_back(b.d_minus_d(j, j + 1));
      {
        auto v = b.vec();
        v[b.d(f.n)] = 1; v[b.e(1)] = -1;
        roots.push_back(b.root(std::move(v), Parity::Odd));
      }
      for (int i = 1; i < f.m; ++i) roots.push_back(b.e_minus_e(i, i + 1));
      {
        auto v = b.vec();
        v[b.e(f.m)] = 1;
        roots.push_back(b.root(std::move(v), Parity::Even));
      }
      return {b.form, std::move(roots)};
    }
    case Family::B0: {
      Builder b{classical_form(0, f.n), 0};
      std::vector<Root> roots;
      for (int j = 1; j < f.n; ++j) roots.push_back(b.d_minus_d(j, j + 1));
      {
        auto v = b.vec();
        v[b.d(f.n)] = 1;
        roots.push_back(b.root(std::move(v), Parity::Odd));  // non-isotropic odd tail
      }
      return {b.form, std::move(roots)};
    }
    case Family::C: {
      const int N = f.n - 1;
      Builder b{classical_form(1, N), 1};
      std::vector<Root> roots;
      {
        auto v = b.vec();
        v[b.e(1)] = 1; v[b.d(1)] = -1;
        roots.push_back(b.root(std::move(v), Parity::Odd));
      }
      for (int j = 1; j < N; ++j) roots.push_back(b.d_minus_d(j, j + 1));
      {
        auto v = b.vec();
        v[b.d(N)] = 2;
        roots.push_back(b.root(std::move(v), Parity::Even));
      }
      return {b.form, std::move(roots)};
    }
    case Family::D: {
      Builder b{classical_form(f.m, f.n), f.m};
      std::vector<Root> roots;
      for (int j = 1; j < f.n; ++j) roots.push_back(b.d_minus_d(j, j + 1));
      {
        auto v = b.vec();
        v[b.d(f.n)] = 1; v[b.e(1)] = -1;
        roots.push_back(b.root(std::move(v), Parity::Odd));
      }
      for (int i = 1; i <= f.m - 2; ++i) roots.push_back(b.e_minus_e(i, i + 1));
      {
        auto v = b.vec();
        v[b.e(f.m - 1)] = 1; v[b.e(f.m)] = -1;
        roots.push_back(b.root(std::move(v), Parity::Even));
      }
      {
        auto v = b.vec();
        v[b.e(f.m - 1)] = 1; v[b.e(f.m)] = 1;
        roots.push_back(b.root(std::move(v), Parity::Even));
      }
      return {b.form, std::move(roots)};
    }
    case Family::D21a: {
      // Gram scales (k1,k2,k3) with k1+k2+k3 = 0 make all odd roots isotropic.
      BilinearForm form;
      form.symbols = {"e1", "e2", "e3"};
      form.scales = {-(1 + f.alpha) / 2, Rat(1, 2), f.alpha / 2};
      Builder b{form, 3};
      std::vector<Root> roots;
      {
        auto v = b.vec(); v[1] = 2;
        roots.push_back(b.root(std::move(v), Parity::Even));  // left arm 2e2
      }
      {
        auto v = b.vec(); v[0] = 1; v[1] = -1; v[2] = -1;
        roots.push_back(b.root(std::move(v), Parity::Odd));   // grey hub
      }
      {
        auto v = b.vec(); v[2] = 2;
        roots.push_back(b.root(std::move(v), Parity::Even));  // right arm 2e3
      }
      return {form, std::move(roots)};
    }
    case Family::F4: {
      Builder b{classical_form(3, 1, Rat(1), Rat(3)), 3};
      std::vector<Root> roots;
      {
        auto v = b.vec();
        v[b.d(1)] = Rat(1, 2);
        v[b.e(1)] = Rat(-1, 2); v[b.e(2)] = Rat(-1, 2); v[b.e(3)] = Rat(-1, 2);
        roots.push_back(b.root(std::move(v), Parity::Odd));
      }
      {
        auto v = b.vec(); v[b.e(3)] = 1;
        roots.push_back(b.root(std::move(v), Parity::Even));
      }
      roots.push_back(b.e_minus_e(2, 3));
      roots.push_back(b.e_minus_e(1, 2));
      return {b.form, std::move(roots)};
    }
    case Family::G3: {
      // The G2 part lives in the sum-zero plane of e1,e2,e3.
      Builder b{classical_form(3, 1, Rat(1), Rat(2)), 3};
      std::vector<Root> roots;
      {
        auto v = b.vec();
        v[b.d(1)] = 1; v[b.e(1)] = 1; v[b.e(2)] = -1;
        roots.push_back(b.root(std::move(v), Parity::Odd));
      }
      roots.push_back(b.e_minus_e(2, 3));
      {
        auto v = b.vec();
        v[b.e(3)] = 2; v[b.e(1)] = -1; v[b.e(2)] = -1;
        roots.push_back(b.root(std::move(v), Parity::Even));
      }
      return {b.form, std::move(roots)};
    }
  }
  throw std::logic_error("unreachable family tag");
}

}  // namespace

SimpleSystem build_simple_system(const FamilyId& family) {
  family.validate();
  SimpleSystem s;
  s.family = family;
  auto [form, roots] = simple_roots_of(family);
  s.form = std::move(form);
  s.simple_roots = std::move(roots);
  s.cartan = cartan_from_roots(s.simple_roots, s.form);

  const size_t r = s.simple_roots.size();
  s.symmetrizer.assign(r, Rat(0));
  for (size_t i = 0; i < r; ++i) {
    const Rat self = inner(s.simple_roots[i], s.simple_roots[i], s.form);
    if (self != 0) {
      s.symmetrizer[i] = self / 2;
    } else {
      for (size_t j = 0; j < r; ++j) {
        if (j != i && s.cartan[i][j] != 0) {
          s.symmetrizer[i] = inner(s.simple_roots[i], s.simple_roots[j], s.form) / s.cartan[i][j];
          break;
        }
      }
    }
  }

  // Dual basis over the root span: omega_j = sum x_i a_i with
  // Gram * x = (delta_jk / eps_kk)_k. Degenerate Gram (A(n,n)) skips this.
  RatMat gram(r, zeros(r));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j)
      gram[i][j] = inner(s.simple_roots[i], s.simple_roots[j], s.form);
  s.coweights_even.assign(r, std::nullopt);
  if (rank(gram) < static_cast<int>(r)) {
    s.degenerate_form = true;
  } else {
    for (size_t j = 0; j < r; ++j) {
      if (s.simple_roots[j].parity != Parity::Even) continue;
      RatVec rhs = zeros(r);
      rhs[j] = 1 / s.symmetrizer[j];
      auto x = solve(gram, rhs);
      if (!x) throw std::runtime_error("dual basis solve failed unexpectedly");
      RatVec omega = zeros(s.form.dim());
      for (size_t i = 0; i < r; ++i)
        for (size_t c = 0; c < s.form.dim(); ++c)
          omega[c] += (*x)[i] * s.simple_roots[i].coords[c];
      s.coweights_even[j] = std::move(omega);
    }
  }
  return s;
}

RootSet full_root_set(const FamilyId& family) {
  family.validate();
  const BilinearForm form = simple_roots_of(family).first;
  RootSet rs;
  auto even = [&](std::vector<Rat> v) { rs.even.push_back(make_root(std::move(v), Parity::Even, form)); };
  auto odd = [&](std::vector<Rat> v) { rs.odd.push_back(make_root(std::move(v), Parity::Odd, form)); };
  auto unit = [&](size_t idx, const Rat& c) {
    auto v = zeros(form.dim());
    v[idx] = c;
    return v;
  };
  auto two = [&](size_t i, const Rat& ci, size_t j, const Rat& cj) {
    auto v = zeros(form.dim());
    v[i] = ci; v[j] = cj;
    return v;
  };

  switch (family.tag) {
    case Family::A: {
      const int M = family.m + 1, N = family.n + 1;
      auto e = [&](int i) { return static_cast<size_t>(i - 1); };
      auto d = [&](int j) { return static_cast<size_t>(M + j - 1); };
      for (int i = 1; i <= M; ++i)
        for (int j = 1; j <= M; ++j)
          if (i != j) even(two(e(i), Rat(1), e(j), Rat(-1)));
      for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
          if (i != j) even(two(d(i), Rat(1), d(j), Rat(-1)));
      for (int i = 1; i <= M; ++i)
        for (int j = 1; j <= N; ++j) {
          odd(two(e(i), Rat(1), d(j), Rat(-1)));
          odd(two(e(i), Rat(-1), d(j), Rat(1)));
        }
      break;
    }
    case Family::B:
    case Family::D: {
      const int M = family.m, N = family.n;
      auto e = [&](int i) { return static_cast<size_t>(i - 1); };
      auto d = [&](int j) { return static_cast<size_t>(M + j - 1); };
      for (int i = 1; i <= M; ++i)
        for (int j = i + 1; j <= M; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1}) even(two(e(i), Rat(si), e(j), Rat(sj)));
      if (family.tag == Family::B)
        for (int i = 1; i <= M; ++i)
          for (int si : {1, -1}) even(unit(e(i), Rat(si)));
      for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1}) even(two(d(i), Rat(si), d(j), Rat(sj)));
      for (int i = 1; i <= N; ++i)
        for (int si : {1, -1}) even(unit(d(i), Rat(2 * si)));
      if (family.tag == Family::B)
        for (int j = 1; j <= N; ++j)
          for (int sj : {1, -1}) odd(unit(d(j), Rat(sj)));
      for (int i = 1; i <= M; ++i)
        for (int j = 1; j <= N; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1}) odd(two(e(i), Rat(si), d(j), Rat(sj)));
      break;
    }
    case Family::B0: {
      const int N = family.n;
      auto d = [&](int j) { return static_cast<size_t>(j - 1); };
      for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1}) even(two(d(i), Rat(si), d(j), Rat(sj)));
      for (int i = 1; i <= N; ++i)
        for (int si : {1, -1}) even(unit(d(i), Rat(2 * si)));
      for (int j = 1; j <= N; ++j)
        for (int sj : {1, -1}) odd(unit(d(j), Rat(sj)));
      break;
    }
    case Family::C: {
      const int N = family.n - 1;
      auto d = [&](int j) { return static_cast<size_t>(j); };  // e1 occupies slot 0
      for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1}) even(two(d(i), Rat(si), d(j), Rat(sj)));
      for (int i = 1; i <= N; ++i)
        for (int si : {1, -1}) even(unit(d(i), Rat(2 * si)));
      for (int j = 1; j <= N; ++j)
        for (int se : {1, -1})
          for (int sj : {1, -1}) odd(two(0, Rat(se), d(j), Rat(sj)));
      break;
    }
    case Family::D21a: {
      for (size_t i = 0; i < 3; ++i)
        for (int s : {1, -1}) even(unit(i, Rat(2 * s)));
      for (int s1 : {1, -1})
        for (int s2 : {1, -1})
          for (int s3 : {1, -1}) {
            auto v = zeros(3);
            v[0] = s1; v[1] = s2; v[2] = s3;
            odd(std::move(v));
          }
      break;
    }
    case Family::F4: {
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1}) even(two(i, Rat(si), j, Rat(sj)));
      for (int i = 0; i < 3; ++i)
        for (int s : {1, -1}) even(unit(i, Rat(s)));
      for (int s : {1, -1}) even(unit(3, Rat(s)));
      for (int sd : {1, -1})
        for (int s1 : {1, -1})
          for (int s2 : {1, -1})
            for (int s3 : {1, -1}) {
              auto v = zeros(4);
              v[0] = Rat(s1, 2); v[1] = Rat(s2, 2); v[2] = Rat(s3, 2); v[3] = Rat(sd, 2);
              odd(std::move(v));
            }
      break;
    }
    case Family::G3: {
      // G2 short roots e_i - e_j, long roots 2e_i - e_j - e_k, plus +-2d.
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (i != j) even(two(i, Rat(1), j, Rat(-1)));
      for (int i = 0; i < 3; ++i)
        for (int s : {1, -1}) {
          auto v = zeros(4);
          for (int j = 0; j < 3; ++j) v[j] = (j == i) ? Rat(2 * s) : Rat(-s);
          even(std::move(v));
        }
      for (int s : {1, -1}) even(unit(3, Rat(2 * s)));
      for (int s : {1, -1}) odd(unit(3, Rat(s)));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          if (i == j) continue;
          for (int sd : {1, -1}) {
            auto v = zeros(4);
            v[i] = 1; v[j] = -1; v[3] = sd;
            odd(std::move(v));
          }
        }
      break;
    }
  }
  return rs;
}

Root lowest_root(const FamilyId& family) {
  const SimpleSystem s = build_simple_system(family);
  const RootSet rs = full_root_set(family);

  const size_t r = s.simple_roots.size();
  RatMat cols(s.form.dim(), zeros(r));
  for (size_t i = 0; i < r; ++i)
    for (size_t c = 0; c < s.form.dim(); ++c) cols[c][i] = s.simple_roots[i].coords[c];

  std::optional<Root> best;
  Rat best_height(0);
  bool tie = false;
  auto consider = [&](const Root& root) {
    auto x = solve(cols, root.coords);
    if (!x) throw std::runtime_error("root outside simple-root span");
    Rat height(0);
    for (const Rat& c : *x) {
      if (c < 0) return;  // not a positive root
      height += c;
    }
    if (!best || height > best_height) {
      best = root;
      best_height = height;
      tie = false;
    } else if (height == best_height) {
      tie = true;
    }
  };
  for (const Root& root : rs.even) consider(root);
  for (const Root& root : rs.odd) consider(root);
  if (!best || tie) throw std::runtime_error("highest root not unique for " + family.str());
  return negate(*best);
}

}  // namespace supervogan
