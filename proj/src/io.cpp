#include "kazhdan/io.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kazhdan/group_ring.hpp"
#include "kazhdan/oracle.hpp"

namespace kazhdan {

using nlohmann::json;

namespace {

GroupSpec parse_group_spec(const json& j, const std::string& name) {
  GroupSpec spec;
  std::string kind = j.value("kind", "table");
  if (kind == "table") {
    spec.kind = GroupSpec::Kind::Table;
    if (!j.contains("table"))
      throw ValidationError("group '" + name + "': missing \"table\"");
    spec.table = j.at("table").get<std::vector<std::vector<int>>>();
  } else if (kind == "perm") {
    spec.kind = GroupSpec::Kind::Perm;
    spec.degree = j.at("degree").get<int>();
    spec.generators = j.at("generators").get<std::vector<std::vector<int>>>();
  } else {
    throw ValidationError("group '" + name + "': unknown kind \"" + kind + "\"");
  }
  if (j.contains("labels")) spec.labels = j.at("labels").get<std::vector<std::string>>();
  return spec;
}

}  // namespace

InputDocument parse_input_text(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(origin + ": " + e.what());
  }
  try {
    InputDocument doc;
    doc.graph.name = j.value("name", origin);
    std::map<std::string, FiniteGroup> groups;
    for (const auto& [name, gj] : j.at("groups").items())
      groups.emplace(name, build_group(parse_group_spec(gj, name)));

    std::map<std::string, int> vertex_index;
    for (const auto& vj : j.at("vertices")) {
      GraphOfGroups::Vertex v;
      v.id = vj.at("id").get<std::string>();
      v.group_name = vj.at("group").get<std::string>();
      auto it = groups.find(v.group_name);
      if (it == groups.end())
        throw ValidationError("vertex '" + v.id + "': unknown group '" + v.group_name + "'");
      v.group = it->second;
      if (!vertex_index.emplace(v.id, static_cast<int>(doc.graph.vertices.size())).second)
        throw ValidationError("duplicate vertex id '" + v.id + "'");
      doc.graph.vertices.push_back(std::move(v));
    }
    auto vertex_at = [&](const std::string& id, const std::string& where) {
      auto it = vertex_index.find(id);
      if (it == vertex_index.end())
        throw ValidationError(where + ": unknown vertex '" + id + "'");
      return it->second;
    };
    if (j.contains("edges")) {
      for (const auto& ej : j.at("edges")) {
        GraphOfGroups::Edge e;
        e.id = ej.at("id").get<std::string>();
        e.group_name = ej.at("group").get<std::string>();
        auto it = groups.find(e.group_name);
        if (it == groups.end())
          throw ValidationError("edge '" + e.id + "': unknown group '" + e.group_name + "'");
        e.group = it->second;
        e.source = vertex_at(ej.at("source").get<std::string>(), "edge '" + e.id + "'");
        e.target = vertex_at(ej.at("target").get<std::string>(), "edge '" + e.id + "'");
        e.alpha.image = ej.at("alpha").get<std::vector<int>>();
        e.beta.image = ej.at("beta").get<std::vector<int>>();
        doc.graph.edges.push_back(std::move(e));
      }
    }
    if (j.contains("orbits")) {
      OrbitComplex c;
      for (const auto& oj : j.at("orbits")) {
        OrbitDatum o;
        o.dim = oj.at("dim").get<int>();
        if (o.dim < 0) throw ValidationError("orbit dimension must be non-negative");
        o.vertex = vertex_at(oj.at("vertex").get<std::string>(), "orbit");
        o.stabilizer.members = oj.at("members").get<std::vector<int>>();
        std::sort(o.stabilizer.members.begin(), o.stabilizer.members.end());
        c.orbits.push_back(std::move(o));
      }
      if (c.orbits.empty()) throw ValidationError("\"orbits\" must be nonempty when present");
      doc.orbits = std::move(c);
    }
    return doc;
  } catch (const json::exception& e) {
    throw ValidationError(origin + ": " + e.what());
  }
}

InputDocument load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_input_text(buf.str(), path);
}

std::vector<Letter> parse_word_text(const std::string& text, const ValidatedGraph& g) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("word: ") + e.what());
  }
  if (!j.is_array()) throw ValidationError("word: expected a JSON array of letters");
  std::vector<Letter> word;
  for (const auto& lj : j) {
    if (lj.contains("t")) {
      int sign = lj.at("t").get<int>();
      if (sign != 1 && sign != -1) throw ValidationError("word: \"t\" must be +1 or -1");
      word.push_back(Letter::stable(sign));
      continue;
    }
    std::string vid = lj.at("v").get<std::string>();
    int vertex = -1;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (g.vertex(v).id == vid) vertex = v;
    if (vertex < 0) throw ValidationError("word: unknown vertex '" + vid + "'");
    int elt = lj.at("e").get<int>();
    if (elt < 0 || elt >= g.vertex_group(vertex).order)
      throw ValidationError("word: element index out of range for vertex '" + vid + "'");
    word.push_back(Letter::element(vertex, elt));
  }
  return word;
}

namespace {

std::string pair_label(const ValidatedGraph& g, int v, int x) {
  return g.vertex(v).id + "." + g.vertex_group(v).label(x);
}

std::string subgroup_display(const ValidatedGraph& g, int v, const Subgroup& s) {
  if (s.size() == g.vertex_group(v).order && !g.vertex(v).group_name.empty())
    return g.vertex(v).group_name;
  std::string out = "{";
  for (size_t i = 0; i < s.members.size(); ++i) {
    if (i) out += ",";
    out += g.vertex_group(v).label(s.members[i]);
  }
  return out + "}";
}

json subgroup_json(const ValidatedGraph& g, int v, const Subgroup& s) {
  json labels = json::array();
  for (int x : s.members) labels.push_back(g.vertex_group(v).label(x));
  return json{{"vertex", g.vertex(v).id}, {"members", s.members}, {"labels", labels}};
}

json kclass_json(const ValidatedGraph& g, const FormalKClass& k, int degree) {
  json terms = json::array();
  for (const auto& t : k.terms) {
    json tj = subgroup_json(g, t.vertex, t.stabilizer);
    tj["sign"] = t.sign;
    terms.push_back(std::move(tj));
  }
  return json{{"degree", degree}, {"terms", terms}};
}

struct Columns {
  std::vector<std::vector<std::string>> rows;
  void line(std::vector<std::string> cells) { rows.push_back(std::move(cells)); }
  void print(std::ostream& os) const {
    std::vector<size_t> width;
    for (const auto& r : rows)
      for (size_t i = 0; i < r.size(); ++i) {
        if (width.size() <= i) width.resize(i + 1, 0);
        width[i] = std::max(width[i], r[i].size());
      }
    for (const auto& r : rows) {
      std::string out;
      for (size_t i = 0; i < r.size(); ++i) {
        out += r[i];
        if (i + 1 < r.size()) out += std::string(width[i] - r[i].size() + 2, ' ');
      }
      os << out << "\n";
    }
  }
};

std::string members_display(const ValidatedGraph& g,
                            const std::vector<std::pair<int, int>>& members) {
  std::string out = "{";
  for (size_t i = 0; i < members.size(); ++i) {
    if (i) out += ", ";
    out += pair_label(g, members[i].first, members[i].second);
  }
  return out + "}";
}

}  // namespace

std::string render_kclass(const ValidatedGraph& g, const FormalKClass& k, int degree) {
  std::string out = "[p_" + std::to_string(degree) + "] = ";
  if (k.terms.empty()) return out + "0";
  // positive terms first within the canonical descriptor order, matching the
  // usual way these sums are written
  std::vector<const FormalKClass::Term*> ordered;
  for (const auto& t : k.terms)
    if (t.sign > 0) ordered.push_back(&t);
  for (const auto& t : k.terms)
    if (t.sign < 0) ordered.push_back(&t);
  for (size_t i = 0; i < ordered.size(); ++i) {
    const auto& t = *ordered[i];
    if (i == 0) {
      if (t.sign < 0) out += "- ";
    } else {
      out += t.sign < 0 ? " - " : " + ";
    }
    out += "[rho(" + g.vertex(t.vertex).id + "," +
           subgroup_display(g, t.vertex, t.stabilizer) + ")]";
  }
  return out;
}

namespace {

int default_oracle_depth() {
  if (const char* env = std::getenv("KAZHDAN_ORACLE_DEPTH")) {
    int d = std::atoi(env);
    if (d >= 0) return d;
  }
  return 6;
}

struct CliSettings {
  std::string file;
  bool as_json = false;
  bool force = false;
  bool local_attribution = false;
  bool serial = false;
  int depth = default_oracle_depth();
  int degree = 1;
  long long index = 1;
  std::string word;
};

void cmd_validate(const ValidatedGraph& g, const InputDocument& doc, const CliSettings& s,
                  std::ostream& out) {
  Rational chi = euler_characteristic(g);
  bool nonamen = amenability_gate(g) == Amenability::non_amenable;
  int dim0 = 0, dim1 = 0;
  for (const auto& o : g.bass_serre_orbits().orbits) (o.dim == 0 ? dim0 : dim1)++;
  if (s.as_json) {
    json j{{"name", g.graph().name},
           {"vertices", g.vertex_count()},
           {"edges", g.edge_count()},
           {"chi", chi.to_string()},
           {"amenability", nonamen ? "non_amenable" : "amenable_or_finite"},
           {"bass_serre_orbits", {{"dim0", dim0}, {"dim1", dim1}}},
           {"explicit_orbits", doc.orbits.has_value()}};
    out << j.dump(2) << "\n";
    return;
  }
  out << "OK: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges, chi = "
      << chi << ", " << (nonamen ? "non-amenable" : "amenable or finite") << "\n";
  out << "Bass-Serre orbit complex: " << dim0 << " dim-0 orbits, " << dim1
      << " dim-1 orbits\n";
  if (doc.orbits)
    out << "explicit orbit data: " << doc.orbits->orbits.size() << " orbits\n";
}

void cmd_delocalised(const ValidatedGraph& g, const CliSettings& s, std::ostream& out) {
  TorsionClassTable classes = element_fusion(g);
  BettiReport rep = delocalised_betti_table(g, classes, s.force);
  if (s.as_json) {
    json rows = json::array();
    for (const auto& r : rep.rows) {
      json attribution = json::array();
      for (const auto& a : r.attribution) {
        json members = json::array();
        for (int x : a.local_members) members.push_back(pair_label(g, a.vertex, x));
        attribution.push_back(json{{"local", pair_label(g, a.vertex, a.local_rep)},
                                   {"members", members},
                                   {"value", a.value.to_string()}});
      }
      json members = json::array();
      for (auto [v, x] : classes.members(r.class_id)) members.push_back(pair_label(g, v, x));
      rows.push_back(json{{"id", r.class_id},
                          {"representative", r.representative},
                          {"order", r.order},
                          {"beta", r.beta.to_string()},
                          {"in_FG", r.in_fg},
                          {"meets_edge_stabilizer", r.meets_edge_stabilizer},
                          {"members", members},
                          {"attribution", attribution}});
    }
    json j{{"name", g.graph().name},
           {"degree", 1},
           {"chi", rep.chi.to_string()},
           {"beta1", (-rep.chi).to_string()},
           {"FG_generator", rep.fg.generator.to_string()},
           {"classes", rows},
           {"sum", rep.sum().to_string()}};
    out << j.dump(2) << "\n";
    return;
  }
  out << "# " << g.graph().name << "\n";
  out << "# chi = " << rep.chi << ", beta_1 = " << -rep.chi << ", F_G = ("
      << rep.fg.generator << ")Z\n";
  Columns table;
  table.line({"class", "order", "beta", "in_F_G", "members"});
  for (const auto& r : rep.rows) {
    table.line({r.representative, std::to_string(r.order), r.beta.to_string(),
                r.in_fg ? "yes" : "no", members_display(g, classes.members(r.class_id))});
    if (s.local_attribution && r.attribution.size() > 1) {
      for (const auto& a : r.attribution) {
        std::vector<std::pair<int, int>> mem;
        for (int x : a.local_members) mem.emplace_back(a.vertex, x);
        table.line({"  local " + pair_label(g, a.vertex, a.local_rep), "", a.value.to_string(),
                    "", members_display(g, mem)});
      }
    }
  }
  table.print(out);
  out << "# sum over classes = " << rep.sum() << " (= edges - vertices); classes of"
      << " infinite-order elements all have beta = 0\n";
}

void cmd_classes(const ValidatedGraph& g, const CliSettings& s, std::ostream& out) {
  TorsionClassTable classes = element_fusion(g);
  if (!s.word.empty()) {
    WordEngine eng(g);
    NormalForm nf = eng.normalize(parse_word_text(s.word, g));
    auto cls = eng.classify(nf);
    if (s.as_json) {
      json j{{"word", s.word}, {"normal_form", eng.render(nf)}, {"torsion", cls.torsion}};
      if (cls.torsion) {
        j["conjugate_into"] = pair_label(g, cls.vertex, cls.elt);
        j["class"] = classes.locate(cls.vertex, cls.elt);
      }
      out << j.dump(2) << "\n";
      return;
    }
    out << "normal form: " << eng.render(nf) << "\n";
    if (cls.torsion) {
      int id = classes.locate(cls.vertex, cls.elt);
      auto [rv, rx] = classes.representative(id);
      out << "torsion, conjugate into " << pair_label(g, cls.vertex, cls.elt) << ", class "
          << pair_label(g, rv, rx) << "\n";
    } else {
      out << "infinite order\n";
    }
    return;
  }
  if (s.as_json) {
    json rows = json::array();
    for (int c = 0; c < classes.class_count(); ++c) {
      json members = json::array();
      for (auto [v, x] : classes.members(c)) members.push_back(pair_label(g, v, x));
      auto [rv, rx] = classes.representative(c);
      rows.push_back(json{{"id", c},
                          {"representative", pair_label(g, rv, rx)},
                          {"order", classes.class_order(c)},
                          {"members", members}});
    }
    out << json{{"name", g.graph().name}, {"classes", rows}}.dump(2) << "\n";
    return;
  }
  Columns table;
  table.line({"class", "order", "members"});
  for (int c = 0; c < classes.class_count(); ++c) {
    auto [rv, rx] = classes.representative(c);
    table.line({pair_label(g, rv, rx), std::to_string(classes.class_order(c)),
                members_display(g, classes.members(c))});
  }
  table.print(out);
}

void cmd_kclass(const ValidatedGraph& g, const InputDocument& doc, const CliSettings& s,
                std::ostream& out) {
  FormalKClass k;
  int degree = 1;
  if (doc.orbits) {
    degree = s.degree;
    k = kclass_general(g, *doc.orbits, degree);
  } else {
    if (s.degree != 1)
      throw ValidationError("--degree other than 1 needs explicit \"orbits\" input data");
    k = kclass_p1(g, s.force);
  }
  if (s.as_json) {
    json j = kclass_json(g, k, degree);
    if (g.edge_count() == 1) {
      // group-ring representative of the class, with exact coefficients
      WordEngine eng(g);
      GroupRingElement x;
      for (const auto& t : k.terms) {
        GroupRingElement rho = averaging_projection(eng, t.vertex, t.stabilizer);
        x = t.sign > 0 ? add(x, rho) : subtract(x, rho);
      }
      json terms = json::array();
      for (const auto& [w, c] : x.terms)
        terms.push_back(json{{"word", eng.render(w)}, {"coef", c.to_string()}});
      j["ring_representative"] = json{{"terms", terms}};
    }
    out << j.dump(2) << "\n";
    return;
  }
  out << render_kclass(g, k, degree) << "\n";
}

void cmd_eulercmb(const ValidatedGraph& g, const InputDocument& doc, const CliSettings& s,
                  std::ostream& out) {
  const OrbitComplex& complex = doc.orbits ? *doc.orbits : g.bass_serre_orbits();
  EulerDecomposition d = euler_cmb_decomposition(g, complex);
  if (s.as_json) {
    json rows = json::array();
    for (int c = 0; c < d.classes.class_count(); ++c) {
      auto [v, sub] = d.classes.representative(c);
      json row = subgroup_json(g, v, sub);
      row["chi"] = d.chi[c];
      rows.push_back(std::move(row));
    }
    out << json{{"name", g.graph().name},
                {"classes", rows},
                {"induced_kclass", kclass_json(g, d.induced, 0)}}
               .dump(2)
        << "\n";
    return;
  }
  Columns table;
  table.line({"stabilizer class", "chi"});
  for (int c = 0; c < d.classes.class_count(); ++c) {
    auto [v, sub] = d.classes.representative(c);
    table.line({g.vertex(v).id + ":" + subgroup_display(g, v, sub),
                (d.chi[c] >= 0 ? "+" : "") + std::to_string(d.chi[c])});
  }
  table.print(out);
  out << "assembled class: " << render_kclass(g, d.induced, 0) << "\n";
}

int cmd_verify(const ValidatedGraph& g, const CliSettings& s, std::ostream& out) {
  WordEngine eng(g);
  TorsionClassTable classes = element_fusion(g);
  OracleOptions opt;
  opt.depth = s.depth;
  opt.parallel = !s.serial;
  FusionVerification rep = verify_fusion(eng, classes, opt);
  if (s.as_json) {
    json failures = json::array();
    for (const auto& f : rep.failures)
      failures.push_back(json{{"a", pair_label(g, f.a.first, f.a.second)},
                              {"b", pair_label(g, f.b.first, f.b.second)},
                              {"fused", f.fused},
                              {"witnessed", f.witnessed}});
    json certs = json::array();
    for (const auto& c : rep.certificates)
      certs.push_back(json{{"a", pair_label(g, c.a.first, c.a.second)},
                           {"b", pair_label(g, c.b.first, c.b.second)},
                           {"witness", eng.render(c.witness)}});
    out << json{{"name", g.graph().name},
                {"depth", rep.depth},
                {"pass", rep.pass},
                {"certified", rep.certified},
                {"refuted", rep.refuted},
                {"failures", failures},
                {"certificates", certs}}
               .dump(2)
        << "\n";
  } else {
    out << "# fusion verification at depth " << rep.depth << " ("
        << conjugator_count(eng, rep.depth) << " conjugators, "
        << (s.serial ? "serial" : "parallel") << ")\n";
    for (const auto& c : rep.certificates)
      out << "  " << pair_label(g, c.a.first, c.a.second) << " ~ "
          << pair_label(g, c.b.first, c.b.second) << "  witness: " << eng.render(c.witness)
          << "\n";
    for (const auto& f : rep.failures) {
      out << "FAIL: " << pair_label(g, f.a.first, f.a.second) << " vs "
          << pair_label(g, f.b.first, f.b.second)
          << (f.fused ? " fused but no certificate within depth"
                      : " not fused but a conjugator exists")
          << (f.witnessed ? " (witness: " + eng.render(f.witness) + ")" : "") << "\n";
    }
    out << "certified " << rep.certified << " fused pairs, refuted " << rep.refuted
        << " unfused same-order pairs\n";
    out << (rep.pass ? "PASS" : "FAIL") << "\n";
  }
  return rep.pass ? 0 : 4;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact K-theory classes of higher Kazhdan projections and delocalised "
               "L2-Betti numbers of fundamental groups of finite graphs of finite groups",
               "kazhdan"};
  app.require_subcommand(1);
  CliSettings s;

  auto add_common = [&](CLI::App* cmd, bool needs_file = true) {
    if (needs_file) cmd->add_option("file", s.file, "input JSON file")->required();
    cmd->add_flag("--json", s.as_json, "machine-readable output");
    return cmd;
  };
  auto* c_validate = add_common(app.add_subcommand("validate", "check the input datum"));
  auto* c_euler = add_common(app.add_subcommand("euler", "Euler characteristic"));
  auto* c_betti = add_common(app.add_subcommand("betti", "first L2-Betti number"));
  c_betti->add_flag("--force", s.force, "compute even for amenable input");
  auto* c_del = add_common(
      app.add_subcommand("delocalised", "delocalised L2-Betti numbers per torsion class"));
  c_del->add_flag("--force", s.force, "compute even for amenable input");
  c_del->add_flag("--local-attribution", s.local_attribution,
                  "break classes down by vertex-local conjugacy class");
  auto* c_kclass =
      add_common(app.add_subcommand("kclass", "K-theory class of the higher Kazhdan projection"));
  c_kclass->add_flag("--force", s.force, "compute even for amenable input");
  c_kclass->add_option("--degree", s.degree, "degree n (needs \"orbits\" input)")
      ->default_val(1);
  auto* c_classes =
      add_common(app.add_subcommand("classes", "torsion conjugacy classes (fusion table)"));
  c_classes->add_option("--word", s.word,
                        "normalize a word given as JSON letters and locate its class");
  auto* c_cmb = add_common(
      app.add_subcommand("eulercmb", "stabilizer-class decomposition of the Euler class"));
  auto* c_schreier = add_common(app.add_subcommand("schreier", "generalised Schreier rank"));
  c_schreier->add_option("--index", s.index, "index j of the free subgroup")->required();
  auto* c_fcal = add_common(
      app.add_subcommand("fcal", "subgroup of Q generated by inverse finite-subgroup orders"));
  auto* c_verify = add_common(
      app.add_subcommand("verify", "brute-force conjugacy check of the fusion table"));
  c_verify->add_option("--depth", s.depth, "conjugator syllable-length bound");
  c_verify->add_flag("--serial", s.serial, "use the single-threaded reference sweep");

  try {
    std::vector<std::string> argv(args.rbegin(), args.rend());
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    InputDocument doc = load_input(s.file);
    ValidatedGraph g(std::move(doc.graph));
    if (s.force && amenability_gate(g) == Amenability::amenable_or_finite)
      err << "warning: amenable or finite input (chi = " << euler_characteristic(g)
          << " >= 0); results are not Kazhdan-projection invariants\n";

    if (c_validate->parsed()) {
      cmd_validate(g, doc, s, out);
    } else if (c_euler->parsed()) {
      if (s.as_json)
        out << json{{"chi", euler_characteristic(g).to_string()}}.dump(2) << "\n";
      else
        out << euler_characteristic(g) << "\n";
    } else if (c_betti->parsed()) {
      if (amenability_gate(g) == Amenability::amenable_or_finite && !s.force)
        throw AmenableInputError(
            "higher Kazhdan projection does not exist for amenable groups (chi = " +
            euler_characteristic(g).to_string() + " >= 0); pass --force to compute anyway");
      if (s.as_json)
        out << json{{"beta1", l2_betti1(g).to_string()}}.dump(2) << "\n";
      else
        out << l2_betti1(g) << "\n";
    } else if (c_del->parsed()) {
      cmd_delocalised(g, s, out);
    } else if (c_kclass->parsed()) {
      cmd_kclass(g, doc, s, out);
    } else if (c_classes->parsed()) {
      cmd_classes(g, s, out);
    } else if (c_cmb->parsed()) {
      cmd_eulercmb(g, doc, s, out);
    } else if (c_schreier->parsed()) {
      SchreierRank r = schreier_rank(g, s.index);
      if (s.as_json)
        out << json{{"index", s.index},
                    {"rank", r.rank.to_string()},
                    {"integral", r.integral}}
                   .dump(2)
            << "\n";
      else
        out << r.rank << (r.integral ? "" : " (non-integral: no free subgroup of this index)")
            << "\n";
    } else if (c_fcal->parsed()) {
      RationalSubgroupOfQ f = fcal(g);
      if (s.as_json)
        out << json{{"generator", f.generator.to_string()}}.dump(2) << "\n";
      else
        out << "(" << f.generator << ")Z\n";
    } else if (c_verify->parsed()) {
      return cmd_verify(g, s, out);
    }
    return 0;
  } catch (const AmenableInputError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const UndecidedMembership& e) {
    err << "error: " << e.what() << "\n";
    return 5;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const GroupError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace kazhdan
