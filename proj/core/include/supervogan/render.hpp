#pragma once

#include <optional>
#include <string>

#include "supervogan/double_vogan.hpp"

namespace supervogan {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Serializable view of any diagram object: the graph, the marks, and the
// Vogan decorations. Schema-versioned; exact rationals are "p/q" strings.
struct DiagramDocument {
  static constexpr const char* kSchema = "supervogan.diagram/1";

  FamilyId family;
  bool affine = false;
  struct V {
    int id = 0;
    std::string kind;  // "white" | "grey" | "odd"
    long mark = 0;     // affine only
    bool black = false;
    bool painted = false;
    bool circled = false;
    bool operator==(const V&) const = default;
  };
  struct E {
    int a = 0, b = 0;
    int bond = 1;
    std::string arrow;  // "none" | "a" | "b"
    bool operator==(const E&) const = default;
  };
  std::vector<V> vertices;
  std::vector<E> edges;
  std::vector<std::array<int, 2>> involution;  // 2-cycles, first < second
  std::vector<int> display_order;
  std::vector<long> marks;  // display order, affine only
  std::optional<RatMat> cartan;

  bool operator==(const DiagramDocument&) const = default;
};

DiagramDocument document_of(const Diagram& d);
DiagramDocument document_of(const VoganSuperdiagram& v);
DiagramDocument document_of(const DoubleVoganSuperdiagram& x);

// Canonical JSON: fixed key order, 2-space indent, rationals as "p/q".
std::string to_json(const DiagramDocument& doc);

// Strict parse: unknown schema versions and unknown fields are ParseErrors
// naming the offender; malformed text reports the byte position.
DiagramDocument diagram_from_json(const std::string& text);

// Validated parse of any document the CLI emits. For diagram documents the
// payload is decoded; every document re-renders canonically.
struct ParsedDocument {
  std::string schema;
  std::optional<DiagramDocument> diagram;
  std::string canonical;
};
ParsedDocument from_json(const std::string& text);

// Unicode text art. Glyphs: white o (U+25CB), grey (x) (U+2297), odd
// non-isotropic diamond (U+25C6), painted/black filled (U+25CF); a circled
// vertex wraps its glyph in parentheses. SUPERVOGAN_COLOR=1 wraps decorated
// glyphs in ANSI colors.
std::string to_text(const DiagramDocument& doc, bool color = false);

std::string to_dot(const DiagramDocument& doc);
std::string to_tikz(const DiagramDocument& doc);

}  // namespace supervogan
