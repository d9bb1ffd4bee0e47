#include "hourglass/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "formula_parsing.hpp"
#include "hourglass/entail.hpp"
#include "hourglass/errors.hpp"
#include "lexer.hpp"

namespace hourglass {

namespace {

const std::set<std::string> kReserved = {
    "atom",  "spec",  "program", "necessary", "value",
    "annotate", "when", "gives", "true",      "false"};

enum class DeclKind { Atom, Spec, Program };

// First pass: every occurrence of a declaration keyword is a statement head
// (reserved words cannot be reused as names), so the declared-name table can
// be collected with a flat token scan. It lets the second pass distinguish a
// forward reference from a genuinely unknown name.
std::map<std::string, DeclKind> scan_declarations(const std::string& text) {
  std::map<std::string, DeclKind> decls;
  detail::Lexer lexer(text, detail::Lexer::Mode::Scenario);
  detail::Token tok = lexer.next();
  while (tok.kind != detail::Tok::End) {
    if (tok.kind == detail::Tok::Ident) {
      DeclKind kind;
      if (tok.text == "atom") {
        kind = DeclKind::Atom;
      } else if (tok.text == "spec") {
        kind = DeclKind::Spec;
      } else if (tok.text == "program") {
        kind = DeclKind::Program;
      } else {
        tok = lexer.next();
        continue;
      }
      tok = lexer.next();
      if (tok.kind == detail::Tok::Ident) decls.emplace(tok.text, kind);
    }
    tok = lexer.next();
  }
  return decls;
}

// Scans the leading comment block for "# universe: NAME".
std::string scan_universe_name(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] != '#') return "";  // first real content reached
    std::string comment = line.substr(start + 1);
    const auto key = comment.find("universe:");
    if (key == std::string::npos) continue;
    std::string name = comment.substr(key + 9);
    const auto first = name.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = name.find_last_not_of(" \t\r");
    return name.substr(first, last - first + 1);
  }
  return "";
}

class ScenarioParser {
 public:
  explicit ScenarioParser(const std::string& text)
      : declared_(scan_declarations(text)),
        ts_(text, detail::Lexer::Mode::Scenario) {
    universe_.name = scan_universe_name(text);
  }

  Universe parse() {
    while (!ts_.check(detail::Tok::End)) {
      statement();
    }
    universe_.validate();
    return std::move(universe_);
  }

 private:
  void statement() {
    const detail::Token head =
        ts_.expect(detail::Tok::Ident,
                   "a statement ('atom', 'spec', 'program', 'necessary', "
                   "'value' or 'annotate')");
    if (head.text == "atom") {
      atom_stmt();
    } else if (head.text == "spec") {
      spec_stmt();
    } else if (head.text == "program") {
      program_stmt();
    } else if (head.text == "necessary") {
      necessary_stmt(head.pos);
    } else if (head.text == "value") {
      value_stmt();
    } else if (head.text == "annotate") {
      annotate_stmt();
    } else {
      throw SyntaxError(head.pos, "unknown statement '" + head.text + "'");
    }
  }

  detail::Token declared_name() {
    detail::Token name = ts_.expect(detail::Tok::Ident, "a name");
    if (kReserved.contains(name.text)) {
      throw SyntaxError(name.pos,
                        "'" + name.text + "' is a reserved word");
    }
    if (seen_.contains(name.text)) throw DuplicateName(name.text, name.pos);
    seen_.insert(name.text);
    return name;
  }

  void atom_stmt() {
    detail::Token name = declared_name();
    if (!is_atom_name(name.text)) {
      throw SyntaxError(name.pos,
                        "atom name must match [a-z][a-z0-9_]*: '" +
                            name.text + "'");
    }
    Atom atom{name.text, std::nullopt};
    if (ts_.check(detail::Tok::String)) {
      atom.description = ts_.advance().text;
    }
    universe_.vocab.push_back(std::move(atom));
    if (universe_.vocab.size() > EntailmentEngine::kVocabLimit) {
      throw VocabularyTooLarge(universe_.vocab.size(),
                               EntailmentEngine::kVocabLimit);
    }
    atoms_.insert(name.text);
  }

  Formula formula() {
    return detail::parse_formula_tokens(
        ts_, [this](const std::string& name, SourcePos pos) {
          if (atoms_.contains(name)) return;
          if (kReserved.contains(name)) {
            throw SyntaxError(pos, "'" + name + "' is a reserved word");
          }
          auto it = declared_.find(name);
          if (it != declared_.end() && it->second == DeclKind::Atom) {
            throw ForwardReference(name, pos);
          }
          throw UnknownAtom(name, pos);
        });
  }

  void spec_stmt() {
    detail::Token name = declared_name();
    Specification spec;
    spec.name = name.text;
    ts_.expect(detail::Tok::LBrace, "'{'");
    if (!ts_.accept(detail::Tok::RBrace)) {
      do {
        spec.theory.add(formula());
      } while (ts_.accept(detail::Tok::Comma));
      ts_.expect(detail::Tok::RBrace, "'}' or ','");
    }
    universe_.specs.push_back(std::move(spec));
  }

  void program_stmt() {
    detail::Token name = declared_name();
    Program program;
    program.name = name.text;
    ts_.expect(detail::Tok::LBrace, "'{'");
    while (!ts_.accept(detail::Tok::RBrace)) {
      detail::Token when = ts_.expect(detail::Tok::Ident, "'when' or '}'");
      if (when.text != "when") {
        throw SyntaxError(when.pos,
                          "expected 'when' or '}', found '" + when.text + "'");
      }
      ProductionRule rule{formula(), Formula::truth()};
      detail::Token gives = ts_.expect(detail::Tok::Ident, "'gives'");
      if (gives.text != "gives") {
        throw SyntaxError(gives.pos,
                          "expected 'gives', found '" + gives.text + "'");
      }
      rule.gives = formula();
      ts_.expect(detail::Tok::Semicolon, "';'");
      if (std::find(program.rules.begin(), program.rules.end(), rule) ==
          program.rules.end()) {
        program.rules.push_back(std::move(rule));
      }
    }
    universe_.programs.push_back(std::move(program));
  }

  // Resolves a spec reference, classifying failures.
  std::string spec_reference() {
    detail::Token name = ts_.expect(detail::Tok::Ident, "a specification name");
    if (std::none_of(universe_.specs.begin(), universe_.specs.end(),
                     [&](const Specification& s) { return s.name == name.text; })) {
      auto it = declared_.find(name.text);
      if (it != declared_.end() && it->second == DeclKind::Spec) {
        throw ForwardReference(name.text, name.pos);
      }
      throw UnknownSpec(name.text, name.pos);
    }
    return name.text;
  }

  void necessary_stmt(SourcePos pos) {
    if (saw_necessary_) {
      throw SyntaxError(pos, "duplicate 'necessary' block");
    }
    saw_necessary_ = true;
    ts_.expect(detail::Tok::LBrace, "'{'");
    if (!ts_.accept(detail::Tok::RBrace)) {
      do {
        std::string name = spec_reference();
        if (std::find(universe_.necessary.begin(), universe_.necessary.end(),
                      name) == universe_.necessary.end()) {
          universe_.necessary.push_back(std::move(name));
        }
      } while (ts_.accept(detail::Tok::Comma));
      ts_.expect(detail::Tok::RBrace, "'}' or ','");
    }
  }

  void value_stmt() {
    detail::Token name_tok = ts_.peek();
    std::string name = spec_reference();
    if (std::any_of(universe_.values.begin(), universe_.values.end(),
                    [&](const auto& kv) { return kv.first == name; })) {
      throw DuplicateValue(name, name_tok.pos);
    }
    ts_.expect(detail::Tok::Equals, "'='");
    detail::Token num = ts_.expect(detail::Tok::Number, "a number");
    double weight = 0.0;
    auto [ptr, ec] =
        std::from_chars(num.text.data(), num.text.data() + num.text.size(), weight);
    if (ec != std::errc() || ptr != num.text.data() + num.text.size()) {
      throw SyntaxError(num.pos, "invalid number '" + num.text + "'");
    }
    universe_.values.emplace_back(std::move(name), weight);
  }

  void annotate_stmt() {
    detail::Token name_tok = ts_.peek();
    std::string name = spec_reference();
    detail::Token key = ts_.expect(detail::Tok::Ident, "an annotation key");
    ts_.expect(detail::Tok::Equals, "'='");
    detail::Token text = ts_.expect(detail::Tok::String, "a string");
    auto spec = std::find_if(universe_.specs.begin(), universe_.specs.end(),
                             [&](const Specification& s) { return s.name == name; });
    if (std::any_of(spec->annotations.begin(), spec->annotations.end(),
                    [&](const auto& kv) { return kv.first == key.text; })) {
      throw DuplicateValue(name + "." + key.text, name_tok.pos);
    }
    spec->annotations.emplace_back(key.text, text.text);
  }

  std::map<std::string, DeclKind> declared_;
  detail::TokenStream ts_;
  Universe universe_;
  std::set<std::string> seen_;
  std::set<std::string> atoms_;
  bool saw_necessary_ = false;
};

std::string escape_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string format_weight(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value,
                                 std::chars_format::fixed);
  return std::string(buf, ptr);
}

}  // namespace

bool is_reserved_word(const std::string& name) { return kReserved.contains(name); }

Universe parse_scenario(const std::string& text) {
  return ScenarioParser(text).parse();
}

Universe parse_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open scenario file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    Universe u = parse_scenario(buffer.str());
    if (u.name.empty()) u.name = std::filesystem::path(path).stem().string();
    return u;
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

std::string render_scenario(const Universe& u) {
  std::ostringstream out;
  if (!u.name.empty()) out << "# universe: " << u.name << "\n";
  for (const Atom& a : u.vocab) {
    out << "atom " << a.name;
    if (a.description) out << " " << escape_string(*a.description);
    out << "\n";
  }
  for (const Specification& s : u.specs) {
    out << "spec " << s.name << " {";
    for (std::size_t i = 0; i < s.theory.size(); ++i) {
      out << (i ? ", " : " ") << render_formula(s.theory.formulas()[i]);
    }
    out << " }\n";
  }
  for (const Program& p : u.programs) {
    out << "program " << p.name << " {\n";
    for (const ProductionRule& r : p.rules) {
      out << "  when " << render_formula(r.guard) << " gives "
          << render_formula(r.gives) << ";\n";
    }
    out << "}\n";
  }
  if (!u.necessary.empty()) {
    out << "necessary {";
    for (std::size_t i = 0; i < u.necessary.size(); ++i) {
      out << (i ? ", " : " ") << u.necessary[i];
    }
    out << " }\n";
  }
  for (const auto& [name, weight] : u.values) {
    out << "value " << name << " = " << format_weight(weight) << "\n";
  }
  for (const Specification& s : u.specs) {
    for (const auto& [key, text] : s.annotations) {
      out << "annotate " << s.name << " " << key << " = " << escape_string(text)
          << "\n";
    }
  }
  return out.str();
}

}  // namespace hourglass
