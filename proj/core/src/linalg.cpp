#include "supervogan/linalg.hpp"

#include <numeric>
#include <stdexcept>

namespace supervogan {

namespace {

// Gauss-Jordan elimination. Returns pivot column per reduced row.
std::vector<int> reduce(RatMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    const Rat inv = 1 / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(RatMat m) { return static_cast<int>(reduce(m).size()); }

std::vector<RatVec> kernel_basis(const RatMat& m) {
  if (m.empty()) return {};
  const size_t cols = m[0].size();
  RatMat red = m;
  const std::vector<int> pivots = reduce(red);

  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;

  std::vector<RatVec> basis;
  for (size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    RatVec v(cols, Rat(0));
    v[free_c] = 1;
    for (size_t i = 0; i < pivots.size(); ++i)
      v[static_cast<size_t>(pivots[i])] = -red[i][free_c];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve(const RatMat& m, const RatVec& b) {
  if (m.size() != b.size()) throw std::invalid_argument("solve: size mismatch");
  if (m.empty()) return RatVec{};
  const size_t cols = m[0].size();
  RatMat aug = m;
  for (size_t i = 0; i < m.size(); ++i) aug[i].push_back(b[i]);
  const std::vector<int> pivots = reduce(aug);
  // Inconsistent iff a pivot lands in the augmented column.
  if (!pivots.empty() && pivots.back() == static_cast<int>(cols)) return std::nullopt;
  RatVec x(cols, Rat(0));
  for (size_t i = 0; i < pivots.size(); ++i)
    x[static_cast<size_t>(pivots[i])] = aug[i][cols];
  return x;
}

std::vector<long> primitive_integer_vector(const RatVec& v) {
  mpz_class den_lcm(1);
  bool all_zero = true;
  for (const Rat& q : v) {
    if (q != 0) all_zero = false;
    mpz_class g;
    mpz_lcm(g.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    den_lcm = g;
  }
  if (all_zero) throw std::invalid_argument("primitive_integer_vector: zero vector");

  std::vector<mpz_class> ints;
  ints.reserve(v.size());
  mpz_class gcd_all(0);
  for (const Rat& q : v) {
    mpz_class z = q.get_num() * (den_lcm / q.get_den());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), gcd_all.get_mpz_t(), z.get_mpz_t());
    gcd_all = g;
    ints.push_back(std::move(z));
  }
  // Normalize: divide by gcd, flip so the first nonzero entry is positive.
  int sign = 0;
  for (const mpz_class& z : ints) {
    if (z != 0) { sign = (z > 0) ? 1 : -1; break; }
  }
  std::vector<long> out;
  out.reserve(ints.size());
  for (mpz_class& z : ints) {
    mpz_class w = z / gcd_all * sign;
    if (!w.fits_slong_p()) throw std::overflow_error("primitive vector entry exceeds long");
    out.push_back(w.get_si());
  }
  return out;
}

}  // namespace supervogan
