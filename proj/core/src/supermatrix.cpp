#include "supervogan/supermatrix.hpp"

#include <stdexcept>

namespace supervogan {

SuperMatrix SuperMatrix::zero(int m, int n) {
  SuperMatrix x;
  x.m = m;
  x.n = n;
  x.entries.assign(static_cast<size_t>(m + n), RatVec(static_cast<size_t>(m + n), Rat(0)));
  return x;
}

SuperMatrix SuperMatrix::unit(int m, int n, int i, int j) {
  SuperMatrix x = zero(m, n);
  x.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
  return x;
}

std::optional<int> SuperMatrix::homogeneous_degree() const {
  std::optional<int> deg;
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) {
      if (entries[static_cast<size_t>(i)][static_cast<size_t>(j)] == 0) continue;
      const int d = (parity_of(i) + parity_of(j)) % 2;
      if (!deg) deg = d;
      else if (*deg != d) return std::nullopt;
    }
  return deg ? deg : std::optional<int>(0);  // zero matrix counts as even
}

namespace {

void check_shapes(const SuperMatrix& a, const SuperMatrix& b) {
  if (a.m != b.m || a.n != b.n) throw std::invalid_argument("supermatrix shape mismatch");
}

}  // namespace

SuperMatrix add(const SuperMatrix& a, const SuperMatrix& b) {
  check_shapes(a, b);
  SuperMatrix out = a;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      out.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
          b.entries[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return out;
}

SuperMatrix scale(const Rat& c, const SuperMatrix& a) {
  SuperMatrix out = a;
  for (auto& row : out.entries)
    for (auto& e : row) e *= c;
  return out;
}

SuperMatrix mul(const SuperMatrix& a, const SuperMatrix& b) {
  check_shapes(a, b);
  SuperMatrix out = SuperMatrix::zero(a.m, a.n);
  for (int i = 0; i < a.dim(); ++i)
    for (int k = 0; k < a.dim(); ++k) {
      const Rat& aik = a.entries[static_cast<size_t>(i)][static_cast<size_t>(k)];
      if (aik == 0) continue;
      for (int j = 0; j < a.dim(); ++j)
        out.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
            aik * b.entries[static_cast<size_t>(k)][static_cast<size_t>(j)];
    }
  return out;
}

SuperMatrix supercommutator(const SuperMatrix& x, const SuperMatrix& y) {
  const auto dx = x.homogeneous_degree(), dy = y.homogeneous_degree();
  if (!dx || !dy) throw std::invalid_argument("supercommutator needs homogeneous arguments");
  const int sign = (*dx && *dy) ? 1 : -1;  // minus the usual sign: xy + yx when both odd
  return add(mul(x, y), scale(Rat(sign), mul(y, x)));
}

Rat supertrace(const SuperMatrix& x) {
  Rat acc(0);
  for (int i = 0; i < x.dim(); ++i) {
    const Rat& e = x.entries[static_cast<size_t>(i)][static_cast<size_t>(i)];
    acc += (x.parity_of(i) == 0) ? e : -e;
  }
  return acc;
}

SuperMatrix supertranspose(const SuperMatrix& x) {
  SuperMatrix out = SuperMatrix::zero(x.m, x.n);
  for (int i = 0; i < x.dim(); ++i)
    for (int j = 0; j < x.dim(); ++j) {
      const int sign = (x.parity_of(i) == 0 && x.parity_of(j) == 1) ? -1 : 1;
      out.entries[static_cast<size_t>(j)][static_cast<size_t>(i)] =
          Rat(sign) * x.entries[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
  return out;
}

}  // namespace supervogan
