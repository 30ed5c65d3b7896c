#include "supervogan/family.hpp"

#include <cctype>
#include <stdexcept>

namespace supervogan {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::B0: return "B0";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::D21a: return "D21a";
    case Family::F4: return "F4";
    case Family::G3: return "G3";
  }
  return "?";
}

void FamilyId::validate() const {
  switch (tag) {
    case Family::A:
      if (m < 0 || n < 0)
        throw std::invalid_argument("A(m,n) requires m >= 0 and n >= 0");
      if (m == n && !permissive)
        throw std::invalid_argument(
            "A(n,n) is rejected by default (psl subtleties); pass the permissive flag to admit it");
      if (m == 0 && n == 0)
        throw std::invalid_argument("A(0,0) is not a basic classical family");
      break;
    case Family::B:
      if (m < 1) throw std::invalid_argument("B(m,n) requires m >= 1");
      if (n < 1) throw std::invalid_argument("B(m,n) requires n >= 1");
      break;
    case Family::B0:
      if (m != 0) throw std::invalid_argument("B(0,n) requires m = 0");
      if (n < 1) throw std::invalid_argument("B(0,n) requires n >= 1");
      break;
    case Family::C:
      if (n < 2) throw std::invalid_argument("C(n) requires n >= 2");
      break;
    case Family::D:
      if (m < 2) throw std::invalid_argument("D(m,n) requires m >= 2");
      if (n < 1) throw std::invalid_argument("D(m,n) requires n >= 1");
      break;
    case Family::D21a:
      if (alpha == 0 || alpha == -1)
        throw std::invalid_argument("D(2,1;a) requires a not in {0, -1}");
      break;
    case Family::F4:
    case Family::G3:
      break;
  }
}

std::string FamilyId::str() const {
  switch (tag) {
    case Family::A: return "A(" + std::to_string(m) + "," + std::to_string(n) + ")";
    case Family::B: return "B(" + std::to_string(m) + "," + std::to_string(n) + ")";
    case Family::B0: return "B(0," + std::to_string(n) + ")";
    case Family::C: return "C(" + std::to_string(n) + ")";
    case Family::D: return "D(" + std::to_string(m) + "," + std::to_string(n) + ")";
    case Family::D21a: return "D(2,1;a=" + rat_to_string(alpha) + ")";
    case Family::F4: return "F(4)";
    case Family::G3: return "G(3)";
  }
  return "?";
}

FamilyId make_family(Family tag, int m, int n, Rat alpha, bool permissive) {
  FamilyId f;
  f.tag = tag;
  f.m = m;
  f.n = n;
  f.alpha = std::move(alpha);
  f.permissive = permissive;
  if (f.tag == Family::B && f.m == 0) f.tag = Family::B0;
  if (f.tag == Family::D21a) { f.m = 2; f.n = 1; }
  if (f.tag == Family::F4) { f.m = 4; f.n = 0; }
  if (f.tag == Family::G3) { f.m = 3; f.n = 0; }
  f.validate();
  return f;
}

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  char peek() const { return pos < s.size() ? s[pos] : '\0'; }
  char take() { return pos < s.size() ? s[pos++] : '\0'; }
  void expect(char c) {
    if (take() != c)
      throw std::invalid_argument("family spec \"" + s + "\": expected '" + std::string(1, c) +
                                  "' at position " + std::to_string(pos ? pos - 1 : 0));
  }
  int integer() {
    size_t start = pos;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    if (pos == start)
      throw std::invalid_argument("family spec \"" + s + "\": expected integer at position " +
                                  std::to_string(pos));
    return std::stoi(s.substr(start, pos - start));
  }
  Rat rational() {
    size_t start = pos;
    if (peek() == '-') ++pos;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    if (peek() == '/') {
      ++pos;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    }
    if (pos == start)
      throw std::invalid_argument("family spec \"" + s + "\": expected rational at position " +
                                  std::to_string(pos));
    return rat_from_string(s.substr(start, pos - start));
  }
};

}  // namespace

FamilyId parse_family_spec(const std::string& spec, bool permissive) {
  Cursor c{spec};
  const char name = c.take();
  c.expect('(');
  const int first = c.integer();

  int m = 0, n = 0;
  bool has_second = false, has_alpha = false;
  Rat alpha(0);
  if (c.peek() == ',') {
    c.take();
    n = c.integer();
    has_second = true;
  }
  if (c.peek() == ';') {
    c.take();
    c.expect('a');
    c.expect('=');
    alpha = c.rational();
    has_alpha = true;
  }
  c.expect(')');
  if (c.pos != spec.size())
    throw std::invalid_argument("family spec \"" + spec + "\": trailing characters");
  m = first;

  switch (name) {
    case 'A':
      if (!has_second || has_alpha) throw std::invalid_argument("A takes two parameters: A(m,n)");
      return make_family(Family::A, m, n, Rat(0), permissive);
    case 'B':
      if (!has_second || has_alpha) throw std::invalid_argument("B takes two parameters: B(m,n)");
      return make_family(m == 0 ? Family::B0 : Family::B, m, n);
    case 'C':
      if (has_second || has_alpha) throw std::invalid_argument("C takes one parameter: C(n)");
      return make_family(Family::C, 0, m);
    case 'D':
      if (has_alpha) {
        if (!(m == 2 && has_second && n == 1))
          throw std::invalid_argument("the alpha family is written D(2,1;a=RATIONAL)");
        return make_family(Family::D21a, 2, 1, alpha);
      }
      if (!has_second) throw std::invalid_argument("D takes two parameters: D(m,n)");
      return make_family(Family::D, m, n);
    case 'F':
      if (m != 4 || has_second || has_alpha) throw std::invalid_argument("the F family is F(4)");
      return make_family(Family::F4);
    case 'G':
      if (m != 3 || has_second || has_alpha) throw std::invalid_argument("the G family is G(3)");
      return make_family(Family::G3);
    default:
      throw std::invalid_argument("family spec \"" + spec +
                                  "\": unknown family name '" + std::string(1, name) + "'");
  }
}

int finite_rank(const FamilyId& f) {
  switch (f.tag) {
    case Family::A: return f.m + f.n + 1;
    case Family::B: return f.m + f.n;
    case Family::B0: return f.n;
    case Family::C: return f.n;
    case Family::D: return f.m + f.n;
    case Family::D21a: return 3;
    case Family::F4: return 4;
    case Family::G3: return 3;
  }
  return 0;
}

}  // namespace supervogan
