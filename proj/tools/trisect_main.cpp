#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "trisect/builtin_examples.hpp"
#include "trisect/report.hpp"

namespace {

long default_budget() {
  if (const char* env = std::getenv("TRISECT_BUDGET")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end && *end == '\0' && value >= 0) return value;
  }
  return 10000;
}

struct CommonOptions {
  std::string file;
  std::string example;
  long budget = default_budget();
  int jobs = 1;
  std::string format = "text";

  trisect::RunOptions run_options() const {
    return trisect::RunOptions{budget, jobs, format == "json"};
  }
};

void add_common(CLI::App* cmd, CommonOptions& options, bool with_format = true) {
  auto* file =
      cmd->add_option("-f,--file", options.file, "read declarations from a .tri file");
  auto* example = cmd->add_option("--example", options.example,
                                  "use a built-in example document (see `trisect example`)");
  file->excludes(example);
  example->excludes(file);
  cmd->add_option("--budget", options.budget,
                  "simplification move budget (default 10000, env TRISECT_BUDGET)");
  cmd->add_option("--jobs", options.jobs, "independent checks to run concurrently")
      ->check(CLI::Range(1, 64));
  if (with_format)
    cmd->add_option("--format", options.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
}

trisect::Document load_document(const CommonOptions& options) {
  if (!options.example.empty()) {
    const auto* builtin = trisect::find_builtin(options.example);
    if (!builtin)
      throw trisect::Error("unknown built-in example '" + options.example + "'");
    return trisect::parse_document(builtin->source);
  }
  if (options.file.empty())
    throw trisect::Error("provide --file FILE or --example NAME");
  std::ifstream in(options.file);
  if (!in) throw trisect::Error("cannot open '" + options.file + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return trisect::parse_document(text.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relative group trisections: presentations, foldings, pushout and axiom checks"};
  app.require_subcommand(1);
  int exit_code = 0;

  auto* verify = app.add_subcommand("verify", "run every axiom check for a declared trisection");
  CommonOptions verify_options;
  std::string verify_cube;
  verify->add_option("cube", verify_cube, "trisection name")->required();
  add_common(verify, verify_options);
  verify->callback([&] {
    const auto doc = load_document(verify_options);
    const auto result = trisect::run_verify(doc, verify_cube, verify_options.run_options());
    std::cout << result.output;
    exit_code = result.exit_code;
  });

  auto* pushout = app.add_subcommand("pushout", "pushout presentation of two homs with one domain");
  CommonOptions pushout_options;
  std::string pushout_left, pushout_right;
  pushout->add_option("left", pushout_left, "first hom")->required();
  pushout->add_option("right", pushout_right, "second hom")->required();
  add_common(pushout, pushout_options);
  pushout->callback([&] {
    const auto doc = load_document(pushout_options);
    const auto result =
        trisect::run_pushout(doc, pushout_left, pushout_right, pushout_options.run_options());
    std::cout << result.output;
    exit_code = result.exit_code;
  });

  auto* abelianize = app.add_subcommand("abelianize", "abelian invariants of a declared group");
  CommonOptions abelianize_options;
  std::string abelianize_group;
  abelianize->add_option("group", abelianize_group, "group name")->required();
  add_common(abelianize, abelianize_options);
  abelianize->callback([&] {
    const auto doc = load_document(abelianize_options);
    const auto result =
        trisect::run_abelianize(doc, abelianize_group, abelianize_options.run_options());
    std::cout << result.output;
    exit_code = result.exit_code;
  });

  auto* fold = app.add_subcommand("fold", "folded subgroup graph of a hom's images, as DOT");
  CommonOptions fold_options;
  std::string fold_hom, fold_out;
  fold->add_option("hom", fold_hom, "hom name")->required();
  fold->add_option("-o,--out", fold_out, "write DOT here instead of stdout");
  add_common(fold, fold_options, /*with_format=*/false);
  fold->callback([&] {
    const auto doc = load_document(fold_options);
    const auto result = trisect::run_fold(doc, fold_hom, fold_options.run_options());
    if (fold_out.empty()) {
      std::cout << result.output;
    } else {
      std::ofstream out(fold_out);
      if (!out) throw trisect::Error("cannot write '" + fold_out + "'");
      out << result.output;
    }
    exit_code = result.exit_code;
  });

  auto* kernel = app.add_subcommand("kernel", "kernel membership and homology of a curve family");
  CommonOptions kernel_options;
  std::string kernel_curves;
  kernel->add_option("curves", kernel_curves, "curve family name")->required();
  add_common(kernel, kernel_options);
  kernel->callback([&] {
    const auto doc = load_document(kernel_options);
    const auto result = trisect::run_kernel(doc, kernel_curves, kernel_options.run_options());
    std::cout << result.output;
    exit_code = result.exit_code;
  });

  auto* morphism = app.add_subcommand("morphism", "validate and commute-check a cube morphism");
  CommonOptions morphism_options;
  std::string morphism_name;
  morphism->add_option("name", morphism_name, "morphism name")->required();
  add_common(morphism, morphism_options);
  morphism->callback([&] {
    const auto doc = load_document(morphism_options);
    const auto result =
        trisect::run_morphism(doc, morphism_name, morphism_options.run_options());
    std::cout << result.output;
    exit_code = result.exit_code;
  });

  auto* example = app.add_subcommand("example", "print a built-in example document");
  std::string example_name;
  example->add_option("name", example_name, "example name (omit to list)");
  example->callback([&] {
    if (example_name.empty()) {
      for (const auto& builtin : trisect::builtin_examples())
        std::cout << builtin.name << "  -  " << builtin.title << "\n";
      return;
    }
    const auto* builtin = trisect::find_builtin(example_name);
    if (!builtin) throw trisect::Error("unknown built-in example '" + example_name + "'");
    std::cout << builtin->source;
  });

  auto* chi = app.add_subcommand("chi", "Euler characteristic 2 + g - 3k of a closed trisection");
  int chi_g = 0, chi_k = 0;
  std::string chi_format = "text";
  chi->add_option("g", chi_g, "genus")->required();
  chi->add_option("k", chi_k, "handle count")->required();
  chi->add_option("--format", chi_format)->check(CLI::IsMember({"text", "json"}));
  chi->callback([&] {
    const auto result =
        trisect::run_chi(chi_g, chi_k, trisect::RunOptions{0, 1, chi_format == "json"});
    std::cout << result.output;
    exit_code = result.exit_code;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const trisect::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return exit_code;
}
