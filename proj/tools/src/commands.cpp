#include "toric_cli/commands.hpp"

#include <algorithm>
#include <ostream>

#include "CLI11.hpp"
#include "toric_cli/documents.hpp"
#include "toric_cli/reports.hpp"

namespace toric::cli {

namespace {

std::vector<Integer> parse_integer_list(const std::string& text, const std::string& flag) {
  std::vector<Integer> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    out.push_back(integer_from_json(json(item), flag));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

struct SamplerFlags {
  std::size_t rank = 2;
  long long bound = 5;
  std::size_t count = 1000;
  std::uint64_t seed = 0;
  std::size_t min_gens = 1;
  std::size_t max_gens = 0;
  bool nonnegative = false;

  void attach(CLI::App* app) {
    app->add_option("--rank", rank, "Lattice rank (2..6)")->capture_default_str();
    app->add_option("--bound", bound, "Coordinate bound B")->capture_default_str();
    app->add_option("--count", count, "Number of cones")->capture_default_str();
    app->add_option("--seed", seed, "RNG seed")->capture_default_str();
    app->add_option("--min-gens", min_gens, "Fewest generators per cone")->capture_default_str();
    app->add_option("--max-gens", max_gens, "Most generators per cone (0: rank + 2)")->capture_default_str();
  }

  GeneratorConfig config() const {
    GeneratorConfig cfg;
    cfg.rank = rank;
    cfg.bound = bound;
    cfg.seed = seed;
    cfg.min_generators = min_gens;
    cfg.max_generators = max_gens;
    cfg.nonnegative = nonnegative;
    try {
      cfg.validate();
    } catch (const std::invalid_argument& e) {
      throw DocumentError(e.what());
    }
    return cfg;
  }
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Smoothness and tangent-sheaf local freeness for toric cones and fans", std::string(kToolName)};
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1);

  std::string file, format = "json", ray_text, weight_text;
  auto format_option = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json"}))->capture_default_str();
  };
  auto with_file = [&](const char* name, const char* help, const char* what) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, what)->required();
    format_option(sub);
    return sub;
  };

  CLI::App* smooth = with_file("smooth", "Decide smoothness", "ConeDocument or FanDocument");
  CLI::App* free = with_file("locally-free", "Decide local freeness of the tangent sheaf", "ConeDocument or FanDocument");
  CLI::App* verify = with_file("verify", "Check that both verdicts agree", "ConeDocument or FanDocument");
  CLI::App* recheck = with_file("recheck", "Re-verify a report produced by this tool", "ReportDocument");
  CLI::App* sections = with_file("sections", "Dimension of a graded piece of sections over a ray", "ConeDocument or FanDocument");
  sections->add_option("--ray", ray_text, "Primitive ray generator, comma separated")->required();
  sections->add_option("--weight", weight_text, "Weight m, comma separated")->required();

  SamplerFlags sweep_flags, gen_flags;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Cross-check both deciders on random cones");
  sweep_flags.attach(sweep_cmd);
  format_option(sweep_cmd);
  CLI::App* generate = app.add_subcommand("generate", "Emit random ConeDocuments, one per line");
  gen_flags.count = 1;
  gen_flags.attach(generate);
  generate->add_flag("--nonnegative", gen_flags.nonnegative, "Draw coordinates from [0, bound]");
  format_option(generate);
  std::string example_name;
  CLI::App* example = app.add_subcommand("example", "Print a named example document, or list them");
  example->add_option("name", example_name, "Example name");
  format_option(example);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitYes : kExitError;
  }

  try {
    if (*smooth || *free || *verify) {
      const Document doc = read_document_file(file);
      const Verdict v = *smooth ? smoothness_report(doc) : *free ? local_freeness_report(doc) : agreement_report(doc);
      emit(out, v.report);
      return v.affirmative ? kExitYes : kExitNo;
    }
    if (*recheck) {
      const Verdict v = recheck_report(read_json_file(file));
      emit(out, v.report);
      for (const auto& p : v.report["problems"]) err << kToolName << ": " << p.get<std::string>() << '\n';
      return v.affirmative ? kExitYes : kExitNo;
    }
    if (*sections) {
      const Document doc = read_document_file(file);
      json r = sections_report(doc, LatticeVector(parse_integer_list(ray_text, "--ray")),
                               Weight(parse_integer_list(weight_text, "--weight")));
      r["input"] = document_to_json(doc);
      emit(out, r);
      return kExitYes;
    }
    if (*sweep_cmd) {
      const GeneratorConfig cfg = sweep_flags.config();
      const SweepSummary summary = toric::sweep(ConeGenerator(cfg).take(sweep_flags.count));
      emit(out, sweep_report(summary, cfg));
      return summary.disagreements.empty() ? kExitYes : kExitNo;
    }
    if (*generate) {
      const GeneratorConfig cfg = gen_flags.config();
      ConeGenerator gen(cfg);
      for (std::size_t i = 0; i < gen_flags.count; ++i) {
        json doc = cone_to_json(gen.next());
        doc["source"] = {{"rng", ConeGenerator::kAlgorithm},
                         {"seed", integer_to_json(Integer(cfg.seed))},
                         {"index", i},
                         {"rank", cfg.rank},
                         {"bound", cfg.bound},
                         {"nonnegative", cfg.nonnegative}};
        out << doc.dump() << '\n';
      }
      return kExitYes;
    }
    if (*example) {
      if (example_name.empty()) {
        json list = json::array();
        for (const auto& ex : named_examples())
          list.push_back({{"name", ex.name},
                          {"kind", std::holds_alternative<Cone>(ex.object) ? "cone" : "fan"},
                          {"smooth", ex.smooth},
                          {"locally_free", ex.locally_free}});
        emit(out, {{"examples", list}});
        return kExitYes;
      }
      const auto ex = find_named_example(example_name);
      if (!ex) throw DocumentError("unknown example \"" + example_name + "\"");
      emit(out, std::visit([](const auto& x) { return document_to_json(Document(x)); }, ex->object));
      return kExitYes;
    }
  } catch (const DocumentError& e) {
    err << kToolName << ": " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << kToolName << ": " << e.what() << '\n';
    return kExitError;
  }
  err << kToolName << ": no command\n";
  return kExitError;
}

}  // namespace toric::cli
