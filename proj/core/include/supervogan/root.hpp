#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "supervogan/rational.hpp"

namespace supervogan {

enum class Parity { Even, Odd };

// Basis of the weight space together with the invariant bilinear form,
// which is diagonal in every family: (e_i, e_j) = s_i * delta_ij.
// The classical families use e-symbols with scale +1 and d-symbols with
// scale -1; the exceptional families rescale the d part; D(2,1;a) carries
// a 3x3 diagonal Gram depending linearly on a.
struct BilinearForm {
  std::vector<std::string> symbols;
  std::vector<Rat> scales;

  size_t dim() const { return symbols.size(); }
};

struct Root {
  std::vector<Rat> coords;  // dense over the family's basis
  Parity parity = Parity::Even;
  bool isotropic = false;

  bool operator==(const Root& o) const { return coords == o.coords; }
};

inline Rat inner(const Root& a, const Root& b, const BilinearForm& form) {
  if (a.coords.size() != form.dim() || b.coords.size() != form.dim())
    throw std::invalid_argument("inner: roots over mismatched bases");
  Rat acc(0);
  for (size_t i = 0; i < form.dim(); ++i) acc += a.coords[i] * b.coords[i] * form.scales[i];
  return acc;
}

inline Root make_root(std::vector<Rat> coords, Parity p, const BilinearForm& form) {
  Root r;
  r.coords = std::move(coords);
  r.parity = p;
  r.isotropic = (inner(r, r, form) == 0);
  return r;
}

inline Root negate(const Root& r) {
  Root out = r;
  for (Rat& c : out.coords) c = -c;
  return out;
}

// Readable form like "e1-d1" or "1/2*d1-1/2*e1".
inline std::string root_to_string(const Root& r, const BilinearForm& form) {
  std::string out;
  for (size_t i = 0; i < form.dim(); ++i) {
    const Rat& c = r.coords[i];
    if (c == 0) continue;
    std::string coef;
    if (c == 1) coef = out.empty() ? "" : "+";
    else if (c == -1) coef = "-";
    else coef = (c > 0 && !out.empty() ? "+" : "") + rat_to_string(c) + "*";
    out += coef + form.symbols[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace supervogan
