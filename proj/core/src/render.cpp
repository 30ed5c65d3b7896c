#include "supervogan/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

namespace supervogan {

using ordered_json = nlohmann::ordered_json;

namespace {

DiagramDocument base_document(const Diagram& d) {
  DiagramDocument doc;
  doc.family = d.family;
  doc.affine = d.affine;
  for (size_t i = 0; i < d.vertices.size(); ++i) {
    DiagramDocument::V v;
    v.id = d.vertices[i].id;
    switch (d.vertices[i].kind) {
      case VertexKind::White: v.kind = "white"; break;
      case VertexKind::Grey: v.kind = "grey"; break;
      case VertexKind::OddNonIsotropic: v.kind = "odd"; break;
    }
    if (d.affine) v.mark = d.marks[i];
    doc.vertices.push_back(v);
  }
  for (const Edge& e : d.edges) {
    DiagramDocument::E de;
    de.a = e.a;
    de.b = e.b;
    de.bond = e.bond;
    de.arrow = e.arrow == ArrowDir::None ? "none" : (e.arrow == ArrowDir::TowardA ? "a" : "b");
    doc.edges.push_back(de);
  }
  doc.display_order = d.display_order;
  if (d.affine)
    for (int id : d.display_order) doc.marks.push_back(d.mark_of(id));
  doc.cartan = d.cartan;
  return doc;
}

void set_involution(DiagramDocument& doc, const DiagramMap& inv) {
  for (int id = 0; id < static_cast<int>(inv.perm.size()); ++id) {
    const int img = inv.apply(id);
    if (img > id) doc.involution.push_back({id, img});
  }
}

DiagramDocument::V& vertex_doc(DiagramDocument& doc, int id) {
  for (auto& v : doc.vertices)
    if (v.id == id) return v;
  throw StructuralError("document has no vertex " + std::to_string(id));
}

}  // namespace

DiagramDocument document_of(const Diagram& d) { return base_document(d); }

DiagramDocument document_of(const VoganSuperdiagram& v) {
  DiagramDocument doc = base_document(*v.diagram);
  set_involution(doc, v.involution);
  for (int id : v.painted) vertex_doc(doc, id).painted = true;
  for (int id : v.circled) vertex_doc(doc, id).circled = true;
  return doc;
}

DiagramDocument document_of(const DoubleVoganSuperdiagram& x) {
  DiagramDocument doc = base_document(*x.affine);
  set_involution(doc, x.involution);
  for (int id : x.black) vertex_doc(doc, id).black = true;
  for (int id : x.painted) vertex_doc(doc, id).painted = true;
  for (int id : x.circled) vertex_doc(doc, id).circled = true;
  return doc;
}

namespace {

ordered_json family_json(const FamilyId& f) {
  ordered_json j;
  j["name"] = family_name(f.tag);
  j["m"] = f.m;
  j["n"] = f.n;
  if (f.tag == Family::D21a) j["alpha"] = rat_to_string(f.alpha);
  if (f.tag == Family::A) j["permissive"] = f.permissive;
  return j;
}

FamilyId family_from_json(const ordered_json& j) {
  static const std::map<std::string, Family> names = {
      {"A", Family::A},   {"B", Family::B},     {"B0", Family::B0}, {"C", Family::C},
      {"D", Family::D},   {"D21a", Family::D21a}, {"F4", Family::F4}, {"G3", Family::G3}};
  for (const auto& [key, _] : j.items()) {
    if (key != "name" && key != "m" && key != "n" && key != "alpha" && key != "permissive")
      throw ParseError("unknown field \"family." + key + "\"");
  }
  const auto it = names.find(j.at("name").get<std::string>());
  if (it == names.end()) throw ParseError("unknown family name");
  return make_family(it->second, j.at("m").get<int>(), j.at("n").get<int>(),
                     j.contains("alpha") ? rat_from_string(j["alpha"].get<std::string>()) : Rat(0),
                     j.contains("permissive") && j["permissive"].get<bool>());
}

}  // namespace

std::string to_json(const DiagramDocument& doc) {
  ordered_json j;
  j["schema"] = DiagramDocument::kSchema;
  j["family"] = family_json(doc.family);
  j["affine"] = doc.affine;
  j["vertices"] = ordered_json::array();
  for (const auto& v : doc.vertices) {
    ordered_json jv;
    jv["id"] = v.id;
    jv["kind"] = v.kind;
    if (doc.affine) jv["mark"] = v.mark;
    jv["black"] = v.black;
    jv["painted"] = v.painted;
    jv["circled"] = v.circled;
    j["vertices"].push_back(jv);
  }
  j["edges"] = ordered_json::array();
  for (const auto& e : doc.edges) {
    ordered_json je;
    je["a"] = e.a;
    je["b"] = e.b;
    je["bond"] = e.bond;
    je["arrow"] = e.arrow;
    j["edges"].push_back(je);
  }
  j["involution"] = doc.involution;
  j["display_order"] = doc.display_order;
  if (doc.affine) j["marks"] = doc.marks;
  if (doc.cartan) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : *doc.cartan) {
      ordered_json jr = ordered_json::array();
      for (const Rat& q : row) jr.push_back(rat_to_string(q));
      rows.push_back(jr);
    }
    j["cartan"] = rows;
  }
  return j.dump(2) + "\n";
}

namespace {

ordered_json parse_raw(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

DiagramDocument decode_diagram(const ordered_json& j) {
  static const std::vector<std::string> allowed = {"schema",     "family", "affine",
                                                   "vertices",   "edges",  "involution",
                                                   "display_order", "marks", "cartan"};
  for (const auto& [key, _] : j.items())
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw ParseError("unknown field \"" + key + "\"");

  DiagramDocument doc;
  doc.family = family_from_json(j.at("family"));
  doc.affine = j.at("affine").get<bool>();
  for (const auto& jv : j.at("vertices")) {
    for (const auto& [key, _] : jv.items())
      if (key != "id" && key != "kind" && key != "mark" && key != "black" && key != "painted" &&
          key != "circled")
        throw ParseError("unknown field \"vertices." + key + "\"");
    DiagramDocument::V v;
    v.id = jv.at("id").get<int>();
    v.kind = jv.at("kind").get<std::string>();
    if (v.kind != "white" && v.kind != "grey" && v.kind != "odd")
      throw ParseError("unknown vertex kind \"" + v.kind + "\"");
    if (jv.contains("mark")) v.mark = jv["mark"].get<long>();
    v.black = jv.value("black", false);
    v.painted = jv.value("painted", false);
    v.circled = jv.value("circled", false);
    doc.vertices.push_back(v);
  }
  for (const auto& je : j.at("edges")) {
    for (const auto& [key, _] : je.items())
      if (key != "a" && key != "b" && key != "bond" && key != "arrow")
        throw ParseError("unknown field \"edges." + key + "\"");
    DiagramDocument::E e;
    e.a = je.at("a").get<int>();
    e.b = je.at("b").get<int>();
    e.bond = je.at("bond").get<int>();
    e.arrow = je.at("arrow").get<std::string>();
    if (e.arrow != "none" && e.arrow != "a" && e.arrow != "b")
      throw ParseError("unknown arrow value \"" + e.arrow + "\"");
    doc.edges.push_back(e);
  }
  if (j.contains("involution"))
    for (const auto& cyc : j["involution"])
      doc.involution.push_back({cyc.at(0).get<int>(), cyc.at(1).get<int>()});
  doc.display_order = j.at("display_order").get<std::vector<int>>();
  if (j.contains("marks")) doc.marks = j["marks"].get<std::vector<long>>();
  if (j.contains("cartan")) {
    RatMat cartan;
    for (const auto& row : j["cartan"]) {
      RatVec r;
      for (const auto& cell : row) r.push_back(rat_from_string(cell.get<std::string>()));
      cartan.push_back(std::move(r));
    }
    doc.cartan = std::move(cartan);
  }
  return doc;
}

}  // namespace

DiagramDocument diagram_from_json(const std::string& text) {
  const ordered_json j = parse_raw(text);
  if (!j.is_object() || !j.contains("schema"))
    throw ParseError("document has no \"schema\" field");
  if (j["schema"].get<std::string>() != DiagramDocument::kSchema)
    throw ParseError("unknown schema version \"" + j["schema"].get<std::string>() + "\"");
  return decode_diagram(j);
}

ParsedDocument from_json(const std::string& text) {
  const ordered_json j = parse_raw(text);
  if (!j.is_object() || !j.contains("schema"))
    throw ParseError("document has no \"schema\" field");
  ParsedDocument out;
  out.schema = j["schema"].get<std::string>();
  if (out.schema == DiagramDocument::kSchema) {
    out.diagram = decode_diagram(j);
    out.canonical = to_json(*out.diagram);
    return out;
  }
  static const std::vector<std::string> known = {
      "supervogan.classes/1", "supervogan.table/1", "supervogan.families/1",
      "supervogan.verify/1"};
  if (std::find(known.begin(), known.end(), out.schema) == known.end())
    throw ParseError("unknown schema version \"" + out.schema + "\"");
  // items holding diagram payloads are validated recursively
  if (j.contains("items"))
    for (const auto& item : j["items"])
      if (item.is_object() && item.contains("diagram")) decode_diagram(item["diagram"]);
  out.canonical = j.dump(2) + "\n";
  return out;
}

namespace {

const char* kReset = "\033[0m";

std::string glyph_of(const DiagramDocument::V& v, bool color) {
  std::string g;
  if (v.black || v.painted) g = "\u25cf";           // filled
  else if (v.kind == "white") g = "\u25cb";         // circle
  else if (v.kind == "grey") g = "\u2297";          // circled times
  else g = "\u25c6";                                // diamond
  if (color && (v.black || v.painted)) g = std::string("\033[31m") + g + kReset;
  else if (color && v.kind == "grey") g = std::string("\033[36m") + g + kReset;
  if (v.circled) g = "(" + g + ")";
  return g;
}

std::string edge_glyph(const DiagramDocument::E& e, bool left_to_right) {
  // arrow "a" points toward e.a; drawn left-to-right means a is on the left
  std::string head;
  const bool toward_left = (e.arrow == "a") == left_to_right;
  switch (e.bond) {
    case 1: return "\u2500\u2500";
    case 2: head = "\u2550\u2550"; break;
    case 3: head = "\u2261\u2261"; break;
    default: head = "\u2263\u2263"; break;
  }
  if (e.arrow == "none") return head;
  return toward_left ? "<" + head : head + ">";
}

const DiagramDocument::E* edge_between(const DiagramDocument& doc, int a, int b) {
  for (const auto& e : doc.edges)
    if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return &e;
  return nullptr;
}

std::vector<int> neighbors_of(const DiagramDocument& doc, int id) {
  std::vector<int> out;
  for (const auto& e : doc.edges) {
    if (e.a == id) out.push_back(e.b);
    if (e.b == id) out.push_back(e.a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const DiagramDocument::V& vertex_of(const DiagramDocument& doc, int id) {
  for (const auto& v : doc.vertices)
    if (v.id == id) return v;
  throw StructuralError("document has no vertex " + std::to_string(id));
}

// Renders a walk of pairwise-adjacent vertices as one strip.
std::string strip(const DiagramDocument& doc, const std::vector<int>& walk, bool color) {
  std::string out;
  for (size_t i = 0; i < walk.size(); ++i) {
    out += glyph_of(vertex_of(doc, walk[i]), color);
    if (i + 1 < walk.size()) {
      const auto* e = edge_between(doc, walk[i], walk[i + 1]);
      const bool ltr = e->a == walk[i];
      out += edge_glyph(*e, ltr);
    }
  }
  return out;
}

std::optional<std::vector<int>> path_walk(const DiagramDocument& doc) {
  if (doc.vertices.size() == 1) return std::vector<int>{doc.vertices[0].id};
  std::vector<int> ends;
  for (const auto& v : doc.vertices) {
    const size_t deg = neighbors_of(doc, v.id).size();
    if (deg == 1) ends.push_back(v.id);
    else if (deg != 2) return std::nullopt;
  }
  if (ends.size() != 2 || doc.edges.size() + 1 != doc.vertices.size()) return std::nullopt;
  int start = ends[0];
  for (int id : doc.display_order) {
    if (id == ends[0] || id == ends[1]) {
      start = id;
      break;
    }
  }
  std::vector<int> walk{start};
  int prev = -1;
  while (walk.size() < doc.vertices.size()) {
    for (int nb : neighbors_of(doc, walk.back())) {
      if (nb != prev) {
        prev = walk.back();
        walk.push_back(nb);
        break;
      }
    }
  }
  return walk;
}

size_t display_width(const std::string& utf8) {
  size_t w = 0;
  bool in_escape = false;
  for (unsigned char c : utf8) {
    if (in_escape) {
      if (c == 'm') in_escape = false;
      continue;
    }
    if (c == 0x1b) {
      in_escape = true;
      continue;
    }
    if ((c & 0xC0) != 0x80) ++w;
  }
  return w;
}

std::string marks_line(const DiagramDocument& doc) {
  if (doc.marks.empty()) return {};
  std::ostringstream out;
  out << "marks:";
  for (long m : doc.marks) out << " " << m;
  out << "\n";
  return out.str();
}

std::string involution_line(const DiagramDocument& doc) {
  if (doc.involution.empty()) return {};
  std::ostringstream out;
  out << "involution:";
  for (const auto& cyc : doc.involution) out << " " << cyc[0] << "<->" << cyc[1];
  out << "\n";
  return out.str();
}

}  // namespace

std::string to_text(const DiagramDocument& doc, bool color) {
  std::ostringstream out;
  out << doc.family.str() << (doc.affine ? " affine" : "") << "\n";
  out << marks_line(doc) << involution_line(doc);

  if (auto walk = path_walk(doc)) {
    out << strip(doc, *walk, color) << "\n";
  } else if (doc.family.tag == Family::A && doc.affine) {
    // cycle split into two rows, closed at both ends
    std::vector<int> cycle{doc.display_order.front()};
    int prev = -1;
    while (cycle.size() < doc.vertices.size()) {
      for (int nb : neighbors_of(doc, cycle.back()))
        if (nb != prev) {
          prev = cycle.back();
          cycle.push_back(nb);
          break;
        }
    }
    const size_t half = (cycle.size() + 1) / 2;
    std::vector<int> top(cycle.begin(), cycle.begin() + half);
    std::vector<int> bottom(cycle.begin() + half, cycle.end());
    std::reverse(bottom.begin(), bottom.end());
    const std::string top_s = strip(doc, top, color);
    const std::string bot_s = strip(doc, bottom, color);
    const size_t wt = display_width(top_s), wb = display_width(bot_s);
    out << top_s << "\n";
    if (wt == wb)
      out << "\u2502" << std::string(wt > 2 ? wt - 2 : 0, ' ') << "\u2502\n";
    else
      out << "\u2502" << std::string(std::min(wt, wb) - 1, ' ') << "\u2571\n";
    out << bot_s << "\n";
  } else if (doc.family.tag == Family::D) {
    // fork: main run then the two tails
    std::vector<int> order = doc.display_order;
    const int f2 = order.back();
    order.pop_back();
    const int f1 = order.back();
    order.pop_back();
    const std::string main = strip(doc, order, color);
    out << main << "\u2500\u252c\u2500" << glyph_of(vertex_of(doc, f1), color) << "\n";
    out << std::string(display_width(main) + 1, ' ') << "\u2514\u2500"
        << glyph_of(vertex_of(doc, f2), color) << "\n";
  } else if (doc.family.tag == Family::D21a && doc.affine) {
    const auto* e12 = edge_between(doc, 1, 2);
    const size_t hub =
        display_width(glyph_of(vertex_of(doc, 1), false) + edge_glyph(*e12, true));
    out << strip(doc, {1, 2, 3}, color) << "\n";
    out << std::string(hub, ' ') << "\u2502\n";
    out << std::string(hub, ' ') << glyph_of(vertex_of(doc, 0), color) << "\n";
  } else if (doc.family.tag == Family::C && doc.affine) {
    const auto* pair_edge = edge_between(doc, 0, 1);
    std::vector<int> chain;
    for (int id : doc.display_order)
      if (id >= 2) chain.push_back(id);
    out << glyph_of(vertex_of(doc, 0), color) << edge_glyph(*pair_edge, true) << "\u2510\n";
    out << std::string(3, ' ') << "\u251c\u2500" << strip(doc, chain, color) << "\n";
    out << glyph_of(vertex_of(doc, 1), color) << edge_glyph(*pair_edge, true) << "\u2518\n";
  } else {
    // generic fallback: explicit vertex and edge lists
    out << "vertices:";
    for (int id : doc.display_order) out << " " << id << ":" << glyph_of(vertex_of(doc, id), color);
    out << "\nedges:";
    for (const auto& e : doc.edges)
      out << " " << e.a << edge_glyph(e, true) << e.b;
    out << "\n";
  }
  return out.str();
}

std::string to_dot(const DiagramDocument& doc) {
  std::ostringstream out;
  out << "graph \"" << doc.family.str() << (doc.affine ? " affine" : "") << "\" {\n";
  out << "  graph [rankdir=LR];\n";
  for (int id : doc.display_order) {
    const auto& v = vertex_of(doc, id);
    out << "  \"" << id << "\" [label=\"" << id;
    if (doc.affine) out << " (" << v.mark << ")";
    out << "\", shape=circle";
    if (v.kind == "grey") out << ", style=dashed";
    if (v.kind == "odd") out << ", shape=diamond";
    if (v.black || v.painted) out << ", style=filled, fillcolor=black, fontcolor=white";
    if (v.circled) out << ", peripheries=2";
    out << "];\n";
  }
  for (const auto& e : doc.edges) {
    out << "  \"" << e.a << "\" -- \"" << e.b << "\" [penwidth=" << e.bond;
    if (e.arrow == "a") out << ", dir=back";
    if (e.arrow == "b") out << ", dir=forward";
    out << "];\n";
  }
  for (const auto& cyc : doc.involution)
    out << "  \"" << cyc[0] << "\" -- \"" << cyc[1] << "\" [style=dashed, dir=both, constraint=false];\n";
  out << "}\n";
  return out.str();
}

namespace {

// Layout coordinates for TikZ, family-aware.
std::map<int, std::pair<double, double>> layout(const DiagramDocument& doc) {
  std::map<int, std::pair<double, double>> pos;
  const auto& order = doc.display_order;
  if (doc.family.tag == Family::A && doc.affine) {
    const size_t L = order.size(), half = (L + 1) / 2;
    for (size_t i = 0; i < half; ++i) pos[order[i]] = {static_cast<double>(i), 1.2};
    for (size_t i = half; i < L; ++i)
      pos[order[i]] = {static_cast<double>(L - 1 - i), 0.0};
  } else if (doc.family.tag == Family::D21a && doc.affine) {
    pos[1] = {0, 0};
    pos[2] = {1, 0};
    pos[3] = {2, 0};
    pos[0] = {1, -1.2};
  } else if (doc.family.tag == Family::C && doc.affine) {
    pos[0] = {0, 0.6};
    pos[1] = {0, -0.6};
    for (size_t i = 2; i < order.size(); ++i) pos[order[i]] = {static_cast<double>(i) - 1, 0};
  } else if (doc.family.tag == Family::D) {
    for (size_t i = 0; i + 2 < order.size(); ++i) pos[order[i]] = {static_cast<double>(i), 0};
    const double x = static_cast<double>(order.size()) - 2;
    pos[order[order.size() - 2]] = {x, 0.6};
    pos[order[order.size() - 1]] = {x, -0.6};
  } else {
    for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = {static_cast<double>(i), 0};
  }
  return pos;
}

}  // namespace

std::string to_tikz(const DiagramDocument& doc) {
  const auto pos = layout(doc);
  std::ostringstream out;
  out << "\\begin{tikzpicture}[every node/.style={inner sep=1pt}]\n";
  for (int id : doc.display_order) {
    const auto& v = vertex_of(doc, id);
    const auto [x, y] = pos.at(id);
    std::string style = "circle, draw";
    if (v.black || v.painted) style += ", fill=black";
    if (v.circled) style += ", double";
    std::string label;
    if (v.kind == "grey") label = "$\\otimes$";
    else if (v.kind == "odd") label = "$\\blacklozenge$";
    out << "  \\node[" << style << "] (v" << id << ") at (" << x << "," << y << ") {" << label
        << "};\n";
    if (doc.affine)
      out << "  \\node[above=2pt of v" << id << "] {$" << v.mark << "$};\n";
  }
  for (const auto& e : doc.edges) {
    std::string opts;
    if (e.bond == 2) opts = "double";
    else if (e.bond >= 3) opts = "double distance=3pt";
    if (e.arrow == "a") opts += (opts.empty() ? "" : ", ") + std::string("->");
    if (e.arrow == "b") opts += (opts.empty() ? "" : ", ") + std::string("<-");
    out << "  \\draw[" << opts << "] (v" << e.b << ") -- (v" << e.a << ");\n";
  }
  for (const auto& cyc : doc.involution)
    out << "  \\draw[<->, dashed, bend left=35] (v" << cyc[0] << ") to (v" << cyc[1] << ");\n";
  out << "\\end{tikzpicture}\n";
  return out.str();
}

}  // namespace supervogan
