#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "supervogan/oracle.hpp"
#include "supervogan/render.hpp"

using namespace supervogan;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitParse = 3;

bool color_enabled() {
  const char* v = std::getenv("SUPERVOGAN_COLOR");
  return v && std::string(v) == "1";
}

struct Output {
  std::string path;

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + path);
    f << text;
  }
};

DiagramPtr finite_of(const FamilyId& f) {
  return std::make_shared<Diagram>(diagram_of(build_simple_system(f)));
}

DiagramPtr affine_of(const FamilyId& f) {
  const Diagram d = diagram_of(build_simple_system(f));
  return std::make_shared<Diagram>(affine_extension(d, lowest_root(f)));
}

std::string format_diagram(const DiagramDocument& doc, const std::string& format) {
  if (format == "text") return to_text(doc, color_enabled());
  if (format == "json") return to_json(doc);
  if (format == "dot") return to_dot(doc);
  if (format == "tikz") return to_tikz(doc);
  throw CLI::ValidationError("--format", "unknown format " + format);
}

std::string ids_str(const std::set<int>& s) {
  std::string out = "{";
  for (int id : s) out += (out.size() > 1 ? "," : "") + std::to_string(id);
  return out + "}";
}

std::string involution_str(const DiagramMap& m) {
  std::string out;
  for (int id = 0; id < static_cast<int>(m.perm.size()); ++id)
    if (m.apply(id) > id) out += "(" + std::to_string(id) + " " + std::to_string(m.apply(id)) + ")";
  return out.empty() ? "id" : out;
}

ordered_json family_json(const FamilyId& f) {
  ordered_json j;
  j["name"] = family_name(f.tag);
  j["m"] = f.m;
  j["n"] = f.n;
  if (f.tag == Family::D21a) j["alpha"] = rat_to_string(f.alpha);
  if (f.tag == Family::A) j["permissive"] = f.permissive;
  return j;
}

ordered_json diagram_json(const DiagramDocument& doc) {
  // reuse the canonical serializer, then reparse for embedding
  return ordered_json::parse(to_json(doc));
}

int cmd_families(const std::string& format, const Output& out) {
  struct Row {
    const char* spec;
    const char* algebra;
    const char* constraints;
  };
  const std::vector<Row> rows = {
      {"A(m,n)", "sl(m+1|n+1)", "m,n >= 0, m != n (pass --permissive to admit m = n)"},
      {"B(m,n)", "osp(2m+1|2n)", "m >= 1, n >= 1"},
      {"B(0,n)", "osp(1|2n)", "n >= 1"},
      {"C(n)", "osp(2|2n-2)", "n >= 2"},
      {"D(m,n)", "osp(2m|2n)", "m >= 2, n >= 1"},
      {"D(2,1;a=p/q)", "D(2,1;a)", "a not in {0, -1}"},
      {"F(4)", "F(4)", "no parameters"},
      {"G(3)", "G(3)", "no parameters"},
  };
  if (format == "json") {
    ordered_json j;
    j["schema"] = "supervogan.families/1";
    j["items"] = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json jr;
      jr["spec"] = r.spec;
      jr["algebra"] = r.algebra;
      jr["constraints"] = r.constraints;
      j["items"].push_back(jr);
    }
    out.write(j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "family spec grammar: NAME \"(\" int [\",\" int] [\";a=\" rational] \")\"\n";
    for (const auto& r : rows)
      os << "  " << r.spec << "  " << r.algebra << "  (" << r.constraints << ")\n";
    out.write(os.str());
  }
  return kExitOk;
}

int cmd_diagram(const FamilyId& f, bool affine, const std::string& format, const Output& out) {
  const auto d = affine ? affine_of(f) : finite_of(f);
  out.write(format_diagram(document_of(*d), format));
  return kExitOk;
}

int cmd_vogan(const FamilyId& f, bool canonical, bool ignore_circlings,
              const std::string& format, const Output& out) {
  const auto d = finite_of(f);
  const auto vs = enumerate_vogan(d);
  const auto part = equivalence_classes(vs, ignore_circlings);

  if (format == "json") {
    ordered_json j;
    j["schema"] = "supervogan.classes/1";
    j["family"] = family_json(f);
    j["mode"] = canonical ? "vogan-canonical" : "vogan";
    j["ignore_circlings"] = ignore_circlings;
    j["total_structures"] = vs.size();
    j["total_classes"] = part.classes.size();
    j["items"] = ordered_json::array();
    for (size_t c = 0; c < part.classes.size(); ++c) {
      const auto rep = canonical ? canonicalize(part.representatives[c]) : part.representatives[c];
      const auto label = real_form_label(rep);
      ordered_json item;
      item["diagram"] = diagram_json(document_of(rep));
      item["class_size"] = part.classes[c].size();
      item["label"] = label.display;
      item["labeled"] = label.labeled;
      j["items"].push_back(item);
    }
    out.write(j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << f.str() << ": " << vs.size() << " Vogan superdiagrams, " << part.classes.size()
       << " classes" << (ignore_circlings ? " (circlings ignored)" : "") << "\n";
    for (size_t c = 0; c < part.classes.size(); ++c) {
      const auto rep = canonical ? canonicalize(part.representatives[c]) : part.representatives[c];
      os << "  class " << c << " size " << part.classes[c].size() << ": involution "
         << involution_str(rep.involution) << " painted " << ids_str(rep.painted) << " circled "
         << ids_str(rep.circled) << "  " << real_form_label(rep).display << "\n";
    }
    out.write(os.str());
  }
  return kExitOk;
}

RConvention r_of(int r_flag) { return r_flag == 2 ? RConvention::R2 : RConvention::R1; }

int cmd_double(const FamilyId& f, bool almost, int r_flag, bool ignore_circlings,
               const std::string& format, const Output& out) {
  const auto ad = affine_of(f);
  const auto all = enumerate_almost_double(ad);
  std::vector<DoubleVoganSuperdiagram> kept;
  for (const auto& x : all)
    if (almost || is_double(x, r_of(r_flag))) kept.push_back(x);
  const auto part = double_classes(kept, ignore_circlings);

  if (format == "json") {
    ordered_json j;
    j["schema"] = "supervogan.classes/1";
    j["family"] = family_json(f);
    j["mode"] = almost ? "almost-double" : "double";
    j["r"] = r_flag;
    j["ignore_circlings"] = ignore_circlings;
    j["total_almost"] = all.size();
    j["total_structures"] = kept.size();
    j["total_classes"] = part.classes.size();
    j["items"] = ordered_json::array();
    for (size_t c = 0; c < part.classes.size(); ++c) {
      const auto& rep = part.representatives[c];
      ordered_json item;
      item["diagram"] = diagram_json(document_of(rep));
      item["class_size"] = part.classes[c].size();
      item["double"] = is_double(rep, r_of(r_flag));
      const auto check = black_mark_sum_check(rep);
      item["mark_sum_check"] = check ? ordered_json(*check) : ordered_json(nullptr);
      j["items"].push_back(item);
    }
    out.write(j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << f.str() << ": " << all.size() << " almost-double structures, " << kept.size() << " "
       << (almost ? "listed (almost mode)" : "double (r=" + std::to_string(r_flag) + ")") << ", "
       << part.classes.size() << " classes" << (ignore_circlings ? " (circlings ignored)" : "")
       << "\n";
    for (size_t c = 0; c < part.classes.size(); ++c) {
      const auto& rep = part.representatives[c];
      os << "  class " << c << " size " << part.classes[c].size() << ": involution "
         << involution_str(rep.involution) << " black " << ids_str(rep.black) << " circled "
         << ids_str(rep.circled) << " painted " << ids_str(rep.painted)
         << (is_double(rep, r_of(r_flag)) ? "" : "  [parity fails]") << "\n";
    }
    out.write(os.str());
  }
  return kExitOk;
}

int cmd_classify(const FamilyId& f, int r_flag, bool ignore_circlings,
                 const std::string& format, const Output& out) {
  const auto table = enumerate_pairs(f, r_of(r_flag), ignore_circlings);
  if (format == "json") {
    ordered_json j;
    j["schema"] = "supervogan.table/1";
    j["family"] = family_json(f);
    j["r"] = r_flag;
    j["items"] = ordered_json::array();
    for (const auto& row : table.rows) {
      ordered_json item;
      item["diagram"] = diagram_json(document_of(row.representative));
      item["class_size"] = row.class_size;
      item["label"] = row.label.display();
      item["caption_id"] = row.label.classified ? ordered_json(row.label.caption_id)
                                                : ordered_json(nullptr);
      ordered_json h;
      h["hermitian"] = row.hermitian.hermitian;
      if (row.hermitian.hermitian) {
        h["black_action"] =
            row.hermitian.black_action == BlackAction::Preserves ? "preserves" : "interchanges";
        h["sign_on_z0"] = row.hermitian.sign_on_z0;
        h["sign_on_z1"] = row.hermitian.sign_on_z1;
      }
      item["hermitian"] = h;
      item["mark_sum_check"] =
          row.mark_sum_check ? ordered_json(*row.mark_sum_check) : ordered_json(nullptr);
      j["items"].push_back(item);
    }
    out.write(j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << f.str() << ": " << table.rows.size() << " double classes (r=" << r_flag << ")\n";
    for (const auto& row : table.rows) {
      os << "  size " << row.class_size << "  involution "
         << involution_str(row.representative.involution) << " black "
         << ids_str(row.representative.black) << " circled "
         << ids_str(row.representative.circled) << " painted "
         << ids_str(row.representative.painted);
      if (row.hermitian.hermitian)
        os << "  hermitian:"
           << (row.hermitian.black_action == BlackAction::Preserves ? "preserves" : "interchanges")
           << "(z0:" << (row.hermitian.sign_on_z0 > 0 ? "+1" : "-1")
           << ",z1:" << (row.hermitian.sign_on_z1 > 0 ? "+1" : "-1") << ")";
      os << "  " << row.label.display() << "\n";
    }
    out.write(os.str());
  }
  return kExitOk;
}

int cmd_verify(const FamilyId& f, const Output& out) {
  std::ostringstream os;
  bool all_ok = true;
  auto check = [&](const std::string& name, bool ok) {
    os << (ok ? "[ok]   " : "[FAIL] ") << name << "\n";
    if (!ok) all_ok = false;
  };

  const auto s = build_simple_system(f);
  check("cartan recomputed from pairings", cartan_from_roots(s.simple_roots, s.form) == s.cartan);

  const auto rs = full_root_set(f);
  {
    bool ok = true;
    size_t non_iso_odd = 0;
    for (const Root& r : rs.even)
      if (r.isotropic) ok = false;
    for (const Root& r : rs.odd)
      if (!r.isotropic) ++non_iso_odd;
    const size_t expected = (f.tag == Family::B || f.tag == Family::B0)
                                ? 2 * static_cast<size_t>(f.n)
                                : (f.tag == Family::G3 ? 2 : 0);
    check("odd-root isotropy pattern", ok && non_iso_odd == expected);
  }

  {
    bool ok = true;
    if (!s.degenerate_form) {
      for (size_t j = 0; j < s.simple_roots.size(); ++j) {
        if (!s.coweights_even[j]) continue;
        Root omega;
        omega.coords = *s.coweights_even[j];
        for (size_t k = 0; k < s.simple_roots.size(); ++k) {
          const Rat expected = (j == k) ? 1 / s.symmetrizer[k] : Rat(0);
          if (inner(omega, s.simple_roots[k], s.form) != expected) ok = false;
        }
      }
    }
    check("dual basis contract", ok);
  }

  const Root low = lowest_root(f);
  {
    bool ok = true;
    auto is_root = [&](const std::vector<Rat>& v) {
      for (const Root& r : rs.even)
        if (r.coords == v) return true;
      for (const Root& r : rs.odd)
        if (r.coords == v) return true;
      return false;
    };
    for (const Root& a : s.simple_roots) {
      std::vector<Rat> v(s.form.dim());
      for (size_t i = 0; i < v.size(); ++i) v[i] = -low.coords[i] + a.coords[i];
      if (is_root(v)) ok = false;
    }
    check("highest root maximality", ok);
  }

  const auto ad = affine_of(f);
  check("affine mark kernel (independent roots)", check_kernel(*ad));
  {
    Diagram perturbed = *ad;
    perturbed.marks[1] += 1;
    Diagram scaled = *ad;
    for (long& m : scaled.marks) m *= 2;
    check("kernel rejects perturbed and scaled marks",
          !check_kernel(perturbed) && !check_kernel(scaled));
  }

  {
    const auto autos = automorphisms(*ad);
    bool ok = !autos.empty();
    auto contains = [&](const DiagramMap& m) {
      for (const auto& a : autos)
        if (a == m) return true;
      return false;
    };
    for (const auto& a : autos) {
      if (!contains(a.inverse())) ok = false;
      for (const auto& b : autos)
        if (!contains(a.compose(b))) ok = false;
      for (const Vertex& v : ad->vertices)
        if (ad->mark_of(a.apply(v.id)) != ad->mark_of(v.id)) ok = false;
    }
    check("automorphism group closure and mark preservation", ok);
  }

  os << (all_ok ? "all checks passed" : "verification FAILED") << " for " << f.str() << "\n";
  out.write(os.str());
  return all_ok ? kExitOk : kExitVerification;
}

int cmd_render(const std::string& in_path, const std::string& to, const Output& out) {
  std::ifstream in(in_path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file " + in_path);
  std::stringstream buf;
  buf << in.rdbuf();
  const ParsedDocument doc = from_json(buf.str());
  if (to == "json") {
    out.write(doc.canonical);
    return kExitOk;
  }
  if (!doc.diagram)
    throw ParseError("document with schema " + doc.schema + " only re-renders to json");
  out.write(format_diagram(*doc.diagram, to));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"supervogan: Dynkin, Vogan and double Vogan superdiagrams of the basic classical "
               "Lie superalgebras"};
  app.require_subcommand(1);
  app.footer("exit codes: 0 success, 1 usage error, 2 verification failure, 3 parse error\n"
             "family specs: A(2,1)  B(0,3)  C(4)  D(3,2)  D(2,1;a=1/2)  F(4)  G(3)\n"
             "set SUPERVOGAN_COLOR=1 for colored text glyphs");

  std::string family_spec, format = "text", out_path, render_in, render_to = "text";
  bool permissive = false, canonical = false, almost = false, ignore_circlings = false;
  int r_flag = 1;

  auto add_family_arg = [&](CLI::App* cmd) {
    cmd->add_option("family", family_spec, "family spec, e.g. \"B(2,1)\"")->required();
    cmd->add_flag("--permissive", permissive, "admit A(n,n) (no real-form labels)");
  };
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "write the result to a file instead of stdout");
  };

  auto* families = app.add_subcommand("families", "list supported families and parameter rules");
  families->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  add_out(families);

  auto* diagram = app.add_subcommand("diagram", "finite Dynkin diagram of a family instance");
  add_family_arg(diagram);
  diagram->add_option("--format", format)->check(CLI::IsMember({"text", "json", "dot", "tikz"}));
  add_out(diagram);

  auto* affine = app.add_subcommand("affine", "affine diagram with canonical marks");
  add_family_arg(affine);
  affine->add_option("--format", format)->check(CLI::IsMember({"text", "json", "dot", "tikz"}));
  add_out(affine);

  auto* vogan = app.add_subcommand("vogan", "enumerate Vogan superdiagram classes");
  add_family_arg(vogan);
  vogan->add_flag("--canonical", canonical, "print canonicalized representatives");
  vogan->add_flag("--ignore-circlings", ignore_circlings, "count classes without circlings");
  vogan->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  add_out(vogan);

  auto* dbl = app.add_subcommand("double", "enumerate almost/double Vogan superdiagram classes");
  add_family_arg(dbl);
  dbl->add_flag("--almost", almost, "keep structures failing the parity filter");
  dbl->add_option("--r", r_flag, "reading of r in the parity condition")
      ->check(CLI::IsMember({1, 2}));
  dbl->add_flag("--ignore-circlings", ignore_circlings, "count classes without circlings");
  dbl->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  add_out(dbl);

  auto* classify = app.add_subcommand("classify", "symmetric superpair table of a family");
  add_family_arg(classify);
  classify->add_option("--r", r_flag, "reading of r in the parity condition")
      ->check(CLI::IsMember({1, 2}));
  classify->add_flag("--ignore-circlings", ignore_circlings, "classes without circlings");
  classify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  add_out(classify);

  auto* verify = app.add_subcommand("verify", "run the oracle checks; nonzero exit on failure");
  add_family_arg(verify);
  add_out(verify);

  auto* render = app.add_subcommand("render", "re-render a JSON document");
  render->add_option("--in", render_in, "input JSON file")->required();
  render->add_option("--to", render_to, "target format")
      ->required()
      ->check(CLI::IsMember({"text", "json", "dot", "tikz"}));
  add_out(render);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const Output out{out_path};
  try {
    if (*families) return cmd_families(format, out);
    const FamilyId f = app.got_subcommand("render")
                           ? FamilyId{}
                           : parse_family_spec(family_spec, permissive);
    if (*diagram) return cmd_diagram(f, false, format, out);
    if (*affine) return cmd_diagram(f, true, format, out);
    if (*vogan) return cmd_vogan(f, canonical, ignore_circlings, format, out);
    if (*dbl) return cmd_double(f, almost, r_flag, ignore_circlings, format, out);
    if (*classify) return cmd_classify(f, r_flag, ignore_circlings, format, out);
    if (*verify) return cmd_verify(f, out);
    if (*render) return cmd_render(render_in, render_to, out);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  }
  return kExitUsage;
}
