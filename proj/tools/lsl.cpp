#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "lsl/generator.hpp"
#include "lsl/io.hpp"
#include "lsl/reports.hpp"

namespace {

using lsl::Json;

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;

struct Options {
  std::string input;
  std::string out;
  std::string report;
  std::string format = "text";
  std::string cert;
  std::string strategy = "from-sections";
  std::string mode = "break-linking";
  std::string from;
  int d = 1;
  int r = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget = 10000;
};

void emit(const Options& opt, const Json& report, const std::string& text) {
  if (!opt.report.empty()) lsl::write_text_file(opt.report, lsl::dump(report));
  if (opt.format == "json")
    std::cout << lsl::dump(report);
  else
    std::cout << text;
}

std::string certificate_path(const Options& opt) {
  if (!opt.cert.empty()) return opt.cert;
  if (opt.out.empty()) return {};
  std::filesystem::path p(opt.out);
  return (p.parent_path() / (p.stem().string() + ".cert.json")).string();
}

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty())
    std::cout << text;
  else
    lsl::write_text_file(path, text);
}

int run_gen(const Options& opt) {
  lsl::GenSpec spec;
  spec.d = opt.d;
  spec.r = opt.r;
  spec.seed = opt.seed;
  spec.budget = opt.budget;
  spec.strategy = lsl::parse_strategy(opt.strategy);
  lsl::check_spec(spec);

  switch (spec.strategy) {
    case lsl::Strategy::FromSections: {
      auto g = lsl::gen_simple(spec);
      write_or_print(opt.out, lsl::dump(lsl::to_json(g.instance)));
      if (auto cp = certificate_path(opt); !cp.empty()) lsl::write_text_file(cp, lsl::dump(lsl::to_json(g.certificate)));
      std::cerr << "generated after " << g.draws << " draw(s)\n";
      return kPass;
    }
    case lsl::Strategy::ExactSearch: {
      auto res = lsl::gen_exact_search(spec);
      if (!res.instance) {
        std::cerr << "not found: no exact instance within " << spec.budget << " expansions (" << res.backtracks
                  << " backtracks)\n";
        return kCheckFailed;
      }
      write_or_print(opt.out, lsl::dump(lsl::to_json(*res.instance)));
      std::cerr << "found after " << res.expansions << " expansions; distributive everywhere: "
                << (res.distributive_everywhere ? "yes" : "no") << "\n";
      return kPass;
    }
    case lsl::Strategy::Degrade: {
      lsl::Instance base;
      if (!opt.from.empty()) {
        base = lsl::read_instance(opt.from);
      } else {
        lsl::GenSpec simple = spec;
        simple.strategy = lsl::Strategy::FromSections;
        base = lsl::gen_simple(simple).instance;
      }
      auto out = lsl::degrade(base, lsl::parse_degrade_mode(opt.mode), spec.seed);
      write_or_print(opt.out, lsl::dump(lsl::to_json(out.instance)));
      std::cerr << "defect: " << out.note << "\n";
      return kPass;
    }
  }
  return kBadInput;
}

int emit_check(const Options& opt, const lsl::CheckResult& res) {
  emit(opt, res.report, res.text);
  return res.ok ? kPass : kCheckFailed;
}

int run_certify(const Options& opt) {
  const auto inst = lsl::read_instance(opt.input);
  if (!opt.cert.empty()) {
    const auto cert = lsl::read_certificate(opt.cert, inst.d());
    return emit_check(opt, lsl::certify_check(inst, &cert));
  }
  const auto res = lsl::certify_check(inst);
  if (res.ok && !opt.out.empty()) lsl::write_text_file(opt.out, lsl::dump(res.report["certificate"]));
  return emit_check(opt, res);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and simple limit linear series on a chain of three curves"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--report", opt.report, "Write the JSON report to this path");
    sub->add_option("--format", opt.format, "Standard output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--d", opt.d, "Total degree");
  gen->add_option("--r", opt.r, "Projective dimension of the series");
  gen->add_option("--strategy", opt.strategy, "from-sections | exact-search | degrade")
      ->check(CLI::IsMember({"from-sections", "exact-search", "degrade"}));
  gen->add_option("--seed", opt.seed, "PRNG seed");
  gen->add_option("--budget", opt.budget, "Draw or expansion limit");
  gen->add_option("-o,--out", opt.out, "Instance output path (stdout if omitted)");
  gen->add_option("--cert", opt.cert, "Certificate output path (default: <out>.cert.json)");
  gen->add_option("--mode", opt.mode, "Degrade mode: break-linking | break-exactness | shrink-V")
      ->check(CLI::IsMember({"break-linking", "break-exactness", "shrink-V"}));
  gen->add_option("--from", opt.from, "Instance to degrade (default: a generated simple one)");

  std::vector<CLI::App*> readers;
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"validate", "Dimension, linking and skeleton checks"},
           {"analyze", "Validation, exactness, codimension grid and identity suite"},
           {"certify", "Decide simplicity and verify or emit a certificate"},
           {"laws", "Sheaf-law checks and identity suite"},
           {"grid", "Render the codimension grid"}}) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub);
    readers.push_back(sub);
  }
  readers[0]->add_option("instance", opt.input, "Instance file")->required();
  readers[1]->add_option("instance", opt.input, "Instance file")->required();
  readers[2]->add_option("instance", opt.input, "Instance file")->required();
  readers[2]->add_option("--cert", opt.cert, "Certificate to verify instead of extracting one");
  readers[2]->add_option("-o,--out", opt.out, "Write the extracted certificate here");
  readers[3]->add_option("instance", opt.input, "Instance file (omit to check the chain skeleton of degree --d)");
  readers[3]->add_option("--d", opt.d, "Degree of the chain skeleton");
  readers[4]->add_option("instance", opt.input, "Instance file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (gen->parsed()) return run_gen(opt);
    if (readers[0]->parsed()) return emit_check(opt, lsl::validate_check(lsl::read_instance(opt.input)));
    if (readers[1]->parsed()) return emit_check(opt, lsl::analyze_check(lsl::read_instance(opt.input)));
    if (readers[2]->parsed()) return run_certify(opt);
    if (readers[3]->parsed())
      return emit_check(opt, opt.input.empty() ? lsl::chain_laws_check(opt.d) : lsl::laws_check(lsl::read_instance(opt.input)));
    if (readers[4]->parsed()) return emit_check(opt, lsl::grid_check(lsl::read_instance(opt.input)));
  } catch (const lsl::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const lsl::BudgetExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const lsl::DegradeUnavailable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kBadInput;
}
