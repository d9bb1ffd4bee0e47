#include "hourglass/report.hpp"

#include <charconv>
#include <map>
#include <sstream>

namespace hourglass {

std::string format_number(double value) {
  char buf[400];
  auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed);
  return std::string(buf, ptr);
}

json universe_json(const Universe& u) {
  json atoms = json::array();
  for (const Atom& a : u.vocab) {
    json atom{{"name", a.name}};
    if (a.description) atom["description"] = *a.description;
    atoms.push_back(std::move(atom));
  }
  json specs = json::array();
  for (const Specification& s : u.specs) {
    json formulas = json::array();
    for (const Formula& f : s.theory.formulas()) {
      formulas.push_back(render_formula(f));
    }
    json spec{{"name", s.name}, {"formulas", std::move(formulas)}};
    if (!s.annotations.empty()) {
      json annotations = json::object();
      for (const auto& [key, text] : s.annotations) annotations[key] = text;
      spec["annotations"] = std::move(annotations);
    }
    specs.push_back(std::move(spec));
  }
  json programs = json::array();
  for (const Program& p : u.programs) {
    json rules = json::array();
    for (const ProductionRule& r : p.rules) {
      rules.push_back({{"when", render_formula(r.guard)},
                       {"gives", render_formula(r.gives)}});
    }
    programs.push_back({{"name", p.name}, {"rules", std::move(rules)}});
  }
  json values = json::object();
  for (const auto& [name, weight] : u.values) values[name] = weight;
  return json{{"name", u.name},       {"atoms", std::move(atoms)},
              {"specs", std::move(specs)}, {"programs", std::move(programs)},
              {"necessary", u.necessary},  {"values", std::move(values)}};
}

json image_json(const ImageSet& image) {
  json members = json::array();
  for (const ImageMember& m : image.members) {
    json member{{"spec", m.spec}, {"witness", m.witness()}};
    if (m.witnesses.size() > 1) member["witnesses"] = m.witnesses;
    members.push_back(std::move(member));
  }
  return json{{"subject", image.subject},
              {"kind", image.kind == ImageKind::Pre ? "pre" : "post"},
              {"members", std::move(members)}};
}

json lattice_json(Analyzer& analyzer) {
  json edges = json::array();
  for (const LatticeEdge& e : analyzer.weakness_lattice()) {
    edges.push_back(
        {{"weaker", e.weaker}, {"stronger", e.stronger}, {"strict", e.strict}});
  }
  json classes = json::array();
  for (const auto& cls : analyzer.equivalence_classes()) classes.push_back(cls);
  return json{{"edges", std::move(edges)}, {"classes", std::move(classes)}};
}

json tradeoff_json(const std::vector<TradeoffRow>& rows) {
  json out = json::array();
  for (const TradeoffRow& row : rows) {
    out.push_back({{"spec", row.spec},
                   {"pre_count", row.pre_count},
                   {"post_count", row.post_count},
                   {"covered", row.covered},
                   {"value", row.value},
                   {"sufficient", row.sufficient},
                   {"minimal", row.minimal}});
  }
  return out;
}

json verification_json(const VerificationReport& report) {
  json checked = json::array();
  for (const CheckedPair& pair : report.checked) {
    checked.push_back({{"weaker", pair.weaker}, {"stronger", pair.stronger}});
  }
  json violations = json::array();
  for (const HourglassViolation& v : report.violations) {
    violations.push_back(
        {{"weaker", v.weaker},
         {"stronger", v.stronger},
         {"kind", v.kind == HourglassViolation::Kind::PostNotSubset
                      ? "post_not_subset"
                      : "pre_not_superset"},
         {"offending", v.offending}});
  }
  return json{{"checked", std::move(checked)},
              {"violations", std::move(violations)}};
}

json analysis_report(Analyzer& analyzer) {
  const Universe& u = analyzer.universe();
  json images = json::array();
  for (const Specification& s : u.specs) {
    images.push_back(image_json(analyzer.pre_image(s.name)));
    images.push_back(image_json(analyzer.post_image(s.name)));
  }
  return json{{"universe", universe_json(u)},
              {"lattice", lattice_json(analyzer)},
              {"images", std::move(images)},
              {"tradeoff", tradeoff_json(tradeoff_table(analyzer))},
              {"verification", verification_json(analyzer.verify_hourglass())}};
}

std::string to_json_text(const json& j) { return j.dump(2) + "\n"; }

std::string tradeoff_csv(const std::vector<TradeoffRow>& rows) {
  std::string out = "spec,pre_count,post_count,covered,value,sufficient,minimal\n";
  for (const TradeoffRow& row : rows) {
    out += row.spec;
    out += ',' + std::to_string(row.pre_count);
    out += ',' + std::to_string(row.post_count);
    out += ',' + std::to_string(row.covered);
    out += ',' + format_number(row.value);
    out += row.sufficient ? ",true" : ",false";
    out += row.minimal ? ",true" : ",false";
    out += '\n';
  }
  return out;
}

namespace {

std::string dot_quote(const std::string& name) {
  std::string out = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string lattice_dot(Analyzer& analyzer) {
  const auto classes = analyzer.equivalence_classes();
  const auto edges = analyzer.weakness_lattice();

  std::ostringstream out;
  out << "digraph weakness_lattice {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box, style=rounded];\n";
  std::size_t cluster = 0;
  for (const auto& cls : classes) {
    if (cls.size() < 2) {
      out << "  " << dot_quote(cls.front()) << ";\n";
      continue;
    }
    out << "  subgraph cluster_" << cluster++ << " {\n";
    out << "    label=\"equivalent\";\n";
    for (const auto& name : cls) out << "    " << dot_quote(name) << ";\n";
    out << "  }\n";
  }
  for (const LatticeEdge& e : edges) {
    if (e.weaker == e.stronger) continue;  // reflexive edges add no structure
    if (e.strict) {
      out << "  " << dot_quote(e.weaker) << " -> " << dot_quote(e.stronger)
          << ";\n";
    } else if (e.weaker < e.stronger) {
      // One dashed edge per equivalent pair.
      out << "  " << dot_quote(e.weaker) << " -> " << dot_quote(e.stronger)
          << " [style=dashed, dir=none];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string hourglass_dot(Analyzer& analyzer, const std::string& subject) {
  const ImageSet pre = analyzer.pre_image(subject);
  const ImageSet post = analyzer.post_image(subject);

  std::ostringstream out;
  out << "digraph hourglass {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  out << "  " << dot_quote(subject) << " [style=bold];\n";
  for (const ImageMember& m : pre.members) {
    out << "  " << dot_quote("impl: " + m.spec) << " [label=" << dot_quote(m.spec)
        << "];\n";
    out << "  " << dot_quote("impl: " + m.spec) << " -> " << dot_quote(subject)
        << " [label=" << dot_quote(m.witness()) << "];\n";
  }
  for (const ImageMember& m : post.members) {
    out << "  " << dot_quote("app: " + m.spec) << " [label=" << dot_quote(m.spec)
        << "];\n";
    out << "  " << dot_quote(subject) << " -> " << dot_quote("app: " + m.spec)
        << " [label=" << dot_quote(m.witness()) << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace hourglass
