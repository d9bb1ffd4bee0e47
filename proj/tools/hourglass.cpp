// Command-line front end: batch analyses over scenario files, with verdicts
// reported through the exit code (0 = true/ok, 1 = false/violations,
// 2 = usage, parse or validation error) so scripts can assert layer
// properties without parsing output.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "hourglass/analysis.hpp"
#include "hourglass/errors.hpp"
#include "hourglass/report.hpp"
#include "hourglass/scenario.hpp"
#include "hourglass/spec.hpp"
#include "hourglass/sufficiency.hpp"
#include "hourglass/universe.hpp"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

struct CommonArgs {
  std::string scenario;
  std::string format = "text";
  std::string out_path;
};

void write_output(const CommonArgs& args, const std::string& text) {
  if (args.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(args.out_path, std::ios::binary);
  if (!out) throw hourglass::Error("cannot open output file '" + args.out_path + "'");
  out << text;
}

hourglass::Universe load(const std::string& path) {
  return hourglass::parse_scenario_file(path);
}

const hourglass::Specification& named_spec(const hourglass::Universe& u,
                                           const std::string& name) {
  const hourglass::Specification* spec = u.find_spec(name);
  if (!spec) throw hourglass::UnknownSpec(name);
  return *spec;
}

hourglass::json countermodel_json(
    const hourglass::EntailmentEngine::EntailmentFailure& failure) {
  hourglass::json assignment = hourglass::json::object();
  for (const auto& [atom, value] : failure.assignment) assignment[atom] = value;
  return hourglass::json{{"conclusion", render_formula(failure.conclusion)},
                         {"assignment", std::move(assignment)}};
}

int run_check(const CommonArgs& args) {
  hourglass::Universe u = load(args.scenario);
  if (args.format == "json") {
    hourglass::Analyzer analyzer(u);
    write_output(args, hourglass::to_json_text(hourglass::analysis_report(analyzer)));
  } else {
    std::ostringstream out;
    out << "ok: universe '" << u.name << "': " << u.vocab.size() << " atoms, "
        << u.specs.size() << " specs, " << u.programs.size() << " programs, "
        << u.necessary.size() << " necessary\n";
    write_output(args, out.str());
  }
  return kExitTrue;
}

int run_entailment(const CommonArgs& args, const std::string& left,
                   const std::string& right, bool weakness) {
  hourglass::Universe u = load(args.scenario);
  const hourglass::Specification& s1 = named_spec(u, left);
  const hourglass::Specification& s2 = named_spec(u, right);
  // weaker s1 s2 asks whether s2's theory entails s1's.
  const hourglass::Specification& premises = weakness ? s2 : s1;
  const hourglass::Specification& conclusions = weakness ? s1 : s2;

  hourglass::EntailmentEngine engine(u.vocab);
  auto failure = engine.find_countermodel(premises.theory, conclusions.theory);
  const bool verdict = !failure.has_value();

  if (args.format == "json") {
    hourglass::json j{{"scenario", u.name},
                      {"op", weakness ? "weaker" : "entails"},
                      {"left", left},
                      {"right", right},
                      {"verdict", verdict}};
    if (failure) j["countermodel"] = countermodel_json(*failure);
    write_output(args, hourglass::to_json_text(j));
  } else {
    write_output(args, verdict ? "true\n" : "false\n");
  }
  return verdict ? kExitTrue : kExitFalse;
}

std::string image_text(const hourglass::ImageSet& image) {
  std::ostringstream out;
  out << (image.kind == hourglass::ImageKind::Pre ? "pre(" : "post(")
      << image.subject << "):";
  if (image.members.empty()) out << " (empty)";
  out << "\n";
  for (const auto& m : image.members) {
    out << "  " << m.spec << "  [";
    for (std::size_t i = 0; i < m.witnesses.size(); ++i) {
      out << (i ? ", " : "") << m.witnesses[i];
    }
    out << "]\n";
  }
  return out.str();
}

int run_images(const CommonArgs& args, const std::string& subject,
               bool all_witnesses) {
  hourglass::Universe u = load(args.scenario);
  hourglass::Analyzer analyzer(u, {all_witnesses});

  if (args.format == "dot") {
    if (subject.empty()) {
      throw hourglass::Error("--format dot requires a SPEC argument");
    }
    named_spec(u, subject);
    write_output(args, hourglass::hourglass_dot(analyzer, subject));
    return kExitTrue;
  }

  std::vector<std::string> subjects;
  if (subject.empty()) {
    for (const auto& s : u.specs) subjects.push_back(s.name);
  } else {
    named_spec(u, subject);
    subjects.push_back(subject);
  }

  if (args.format == "json") {
    hourglass::json j = hourglass::json::array();
    for (const auto& name : subjects) {
      j.push_back(hourglass::image_json(analyzer.pre_image(name)));
      j.push_back(hourglass::image_json(analyzer.post_image(name)));
    }
    write_output(args, hourglass::to_json_text(j));
  } else {
    std::string out;
    for (const auto& name : subjects) {
      out += image_text(analyzer.pre_image(name));
      out += image_text(analyzer.post_image(name));
    }
    write_output(args, out);
  }
  return kExitTrue;
}

int run_lattice(const CommonArgs& args) {
  hourglass::Universe u = load(args.scenario);
  hourglass::Analyzer analyzer(u);
  if (args.format == "dot") {
    write_output(args, hourglass::lattice_dot(analyzer));
  } else if (args.format == "json") {
    write_output(args, hourglass::to_json_text(hourglass::lattice_json(analyzer)));
  } else {
    std::ostringstream out;
    for (const auto& e : analyzer.weakness_lattice()) {
      out << e.weaker << (e.strict ? " < " : " <= ") << e.stronger << "\n";
    }
    write_output(args, out.str());
  }
  return kExitTrue;
}

int run_verify(const CommonArgs& args) {
  hourglass::Universe u = load(args.scenario);
  hourglass::Analyzer analyzer(u);
  const hourglass::VerificationReport report = analyzer.verify_hourglass();
  if (args.format == "json") {
    write_output(args, hourglass::to_json_text(hourglass::verification_json(report)));
  } else {
    std::ostringstream out;
    out << "checked " << report.checked.size() << " weaker-than pairs: "
        << report.violations.size() << " violations\n";
    for (const auto& v : report.violations) {
      out << "  violation: "
          << (v.kind == hourglass::HourglassViolation::Kind::PostNotSubset
                  ? "post image not contained"
                  : "pre image not containing")
          << " for weaker=" << v.weaker << " stronger=" << v.stronger
          << " offending=" << v.offending << "\n";
    }
    write_output(args, out.str());
  }
  return report.violations.empty() ? kExitTrue : kExitFalse;
}

int run_sufficient(const CommonArgs& args, const std::string& subject) {
  hourglass::Universe u = load(args.scenario);
  hourglass::Analyzer analyzer(u);
  named_spec(u, subject);
  const hourglass::ImageSet post = analyzer.post_image(subject);

  std::vector<std::pair<std::string, std::string>> covered;  // spec, witness
  std::vector<std::string> missing;
  for (const auto& n : u.necessary) {
    bool found = false;
    for (const auto& m : post.members) {
      if (m.spec == n) {
        covered.emplace_back(n, m.witness());
        found = true;
        break;
      }
    }
    if (!found) missing.push_back(n);
  }
  const bool verdict = missing.empty();

  if (args.format == "json") {
    hourglass::json covered_json = hourglass::json::array();
    for (const auto& [spec, witness] : covered) {
      covered_json.push_back({{"spec", spec}, {"witness", witness}});
    }
    hourglass::json j{{"subject", subject},
                      {"verdict", verdict},
                      {"necessary", u.necessary},
                      {"covered", std::move(covered_json)},
                      {"missing", missing}};
    write_output(args, hourglass::to_json_text(j));
  } else {
    std::ostringstream out;
    out << "sufficient(" << subject << ") = " << (verdict ? "true" : "false")
        << "\n";
    for (const auto& [spec, witness] : covered) {
      out << "  covers: " << spec << "  [" << witness << "]\n";
    }
    for (const auto& n : missing) out << "  missing: " << n << "\n";
    write_output(args, out.str());
  }
  return verdict ? kExitTrue : kExitFalse;
}

int run_minimal(const CommonArgs& args, const std::string& subject) {
  hourglass::Universe u = load(args.scenario);
  hourglass::Analyzer analyzer(u);
  named_spec(u, subject);

  const bool subject_sufficient = hourglass::sufficient(analyzer, subject);
  std::optional<std::string> weaker_sufficient;
  if (subject_sufficient) {
    for (const auto& other : u.specs) {
      if (other.name == subject) continue;
      if (analyzer.strictly(other.name, subject) &&
          hourglass::sufficient(analyzer, other.name)) {
        weaker_sufficient = other.name;
        break;
      }
    }
  }
  const bool verdict = subject_sufficient && !weaker_sufficient;

  if (args.format == "json") {
    hourglass::json j{{"subject", subject},
                      {"verdict", verdict},
                      {"sufficient", subject_sufficient}};
    if (weaker_sufficient) j["weaker_sufficient"] = *weaker_sufficient;
    write_output(args, hourglass::to_json_text(j));
  } else {
    std::ostringstream out;
    out << "minimally_sufficient(" << subject << ") = "
        << (verdict ? "true" : "false") << "\n";
    if (!subject_sufficient) out << "  not sufficient\n";
    if (weaker_sufficient) {
      out << "  strictly weaker and still sufficient: " << *weaker_sufficient
          << "\n";
    }
    write_output(args, out.str());
  }
  return verdict ? kExitTrue : kExitFalse;
}

int run_generic(const CommonArgs& args, const std::string& subject,
                double epsilon, bool closure) {
  hourglass::Universe u = load(args.scenario);
  hourglass::Analyzer analyzer(u);
  hourglass::GenericnessQuery query{subject, epsilon,
                                    closure ? hourglass::CandidateSpace::Closure
                                            : hourglass::CandidateSpace::Declared};
  const hourglass::GenericVerdict verdict = hourglass::generic(analyzer, query);

  const char* space = closure ? "closure" : "declared";
  if (args.format == "json") {
    hourglass::json j{
        {"subject", subject},
        {"epsilon", epsilon},
        {"candidate_space", space},
        {"rule",
         "every strict weakening S' must satisfy loss(S') = v(N) - "
         "v(post(S') & N) >= epsilon"},
        {"verdict", verdict.generic},
        {"sufficient", verdict.sufficient}};
    if (verdict.worst_weakening) {
      j["worst_weakening"] = {{"candidate", verdict.worst_weakening->candidate},
                              {"loss", verdict.worst_weakening->loss}};
    }
    write_output(args, hourglass::to_json_text(j));
  } else {
    std::ostringstream out;
    out << "generic(" << subject << ", epsilon=" << hourglass::format_number(epsilon)
        << ", space=" << space << ") = " << (verdict.generic ? "true" : "false")
        << "\n";
    out << "  sufficient: " << (verdict.sufficient ? "true" : "false") << "\n";
    out << "  rule: every strict weakening S' must satisfy loss(S') = v(N) - "
           "v(post(S') & N) >= epsilon\n";
    if (verdict.worst_weakening) {
      out << "  worst weakening: " << verdict.worst_weakening->candidate
          << " (loss " << hourglass::format_number(verdict.worst_weakening->loss)
          << ")\n";
    } else {
      out << "  no strict weakening in candidate space\n";
    }
    write_output(args, out.str());
  }
  return verdict.generic ? kExitTrue : kExitFalse;
}

int run_tradeoff(const CommonArgs& args) {
  hourglass::Universe u = load(args.scenario);
  hourglass::Analyzer analyzer(u);
  const auto rows = hourglass::tradeoff_table(analyzer);
  if (args.format == "json") {
    write_output(args, hourglass::to_json_text(hourglass::tradeoff_json(rows)));
  } else if (args.format == "csv") {
    write_output(args, hourglass::tradeoff_csv(rows));
  } else {
    std::ostringstream out;
    out << "spec  pre  post  covered  value  sufficient  minimal\n";
    for (const auto& row : rows) {
      out << row.spec << "  " << row.pre_count << "  " << row.post_count << "  "
          << row.covered << "  " << hourglass::format_number(row.value) << "  "
          << (row.sufficient ? "true" : "false") << "  "
          << (row.minimal ? "true" : "false") << "\n";
    }
    write_output(args, out.str());
  }
  return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spanning-layer analysis over declared specification universes"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string left, right, subject;
  double epsilon = 0.0;
  bool closure = false;
  bool all_witnesses = false;

  auto add_common = [&](CLI::App* cmd, std::vector<std::string> formats) {
    cmd->add_option("scenario", args.scenario, "scenario file (.hgl)")
        ->required();
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember(formats))
        ->default_val("text");
    cmd->add_option("--out", args.out_path, "write output to a file");
    return cmd;
  };

  auto* check = add_common(app.add_subcommand("check", "validate a scenario"),
                           {"text", "json"});
  auto* entails = add_common(
      app.add_subcommand("entails", "does S1's theory entail S2's?"),
      {"text", "json"});
  entails->add_option("S1", left, "premise spec")->required();
  entails->add_option("S2", right, "conclusion spec")->required();
  auto* weaker =
      add_common(app.add_subcommand("weaker", "is S1 weaker than S2?"),
                 {"text", "json"});
  weaker->add_option("S1", left, "weaker candidate")->required();
  weaker->add_option("S2", right, "stronger candidate")->required();
  auto* images = add_common(
      app.add_subcommand("images", "pre and post images with witnesses"),
      {"text", "json", "dot"});
  images->add_option("SPEC", subject, "subject spec (all specs when omitted)");
  images->add_flag("--all-witnesses", all_witnesses,
                   "list every witness program per member");
  auto* lattice = add_common(
      app.add_subcommand("lattice", "weakness ordering over the universe"),
      {"text", "json", "dot"});
  auto* verify = add_common(
      app.add_subcommand("verify", "check both hourglass image inclusions on "
                                   "every weaker-than pair"),
      {"text", "json"});
  auto* sufficient_cmd = add_common(
      app.add_subcommand("sufficient",
                         "are all necessary applications implementable atop "
                         "SPEC?"),
      {"text", "json"});
  sufficient_cmd->add_option("SPEC", subject, "subject spec")->required();
  auto* minimal = add_common(
      app.add_subcommand("minimal",
                         "sufficient with no strictly weaker sufficient spec"),
      {"text", "json"});
  minimal->add_option("SPEC", subject, "subject spec")->required();
  auto* generic_cmd = add_common(
      app.add_subcommand("generic",
                         "sufficient and every strict weakening loses at "
                         "least epsilon of necessary value"),
      {"text", "json"});
  generic_cmd->add_option("SPEC", subject, "subject spec")->required();
  generic_cmd->add_option("--epsilon", epsilon, "required value loss")
      ->required()
      ->check(CLI::NonNegativeNumber);
  generic_cmd->add_flag("--closure", closure,
                        "also scan every conjunction-of-atoms weakening");
  auto* tradeoff = add_common(
      app.add_subcommand("tradeoff", "implementation/application counts and "
                                     "coverage per spec"),
      {"text", "csv", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (check->parsed()) return run_check(args);
    if (entails->parsed()) return run_entailment(args, left, right, false);
    if (weaker->parsed()) return run_entailment(args, left, right, true);
    if (images->parsed()) return run_images(args, subject, all_witnesses);
    if (lattice->parsed()) return run_lattice(args);
    if (verify->parsed()) return run_verify(args);
    if (sufficient_cmd->parsed()) return run_sufficient(args, subject);
    if (minimal->parsed()) return run_minimal(args, subject);
    if (generic_cmd->parsed()) return run_generic(args, subject, epsilon, closure);
    if (tradeoff->parsed()) return run_tradeoff(args);
  } catch (const hourglass::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
