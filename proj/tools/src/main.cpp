#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv) {
  using alba::cli::Format;
  using alba::cli::OutputKind;

  alba::cli::RunConfig config;
  std::string inequality;
  std::string file;
  int verify = 0;
  bool no_simplify = false;

  CLI::App app{"Compute first-order frame correspondents of modal inequalities", "alba"};
  app.set_version_flag("--version", "alba 0.1.0");
  auto* ineq_opt = app.add_option("inequality", inequality, "Inequality such as 'box p <= p'");
  auto* file_opt = app.add_option("--file", file, "Read one inequality per line")
                       ->check(CLI::ExistingFile);
  ineq_opt->excludes(file_opt);
  std::string output = "fo";
  std::string format = "text";
  app.add_option("--output", output, "What to print")
      ->transform(CLI::IsMember({"fo", "quasi", "trace", "all"}, CLI::ignore_case))
      ->capture_default_str();
  app.add_option("--format", format, "Output format")
      ->transform(CLI::IsMember({"text", "json"}, CLI::ignore_case))
      ->capture_default_str();
  auto* verify_opt = app.add_option("--verify", verify,
                                    "Check the correspondent on every frame with at most N worlds")
                         ->check(CLI::Range(1, 4));
  app.add_flag("--no-simplify", no_simplify, "Print the raw standard translation");
  app.add_flag("--check-inductive", config.check_inductive,
               "Only classify the input and print the dependence order");

  try {
    app.parse(argc, argv);
    if (ineq_opt->count() == 0 && file_opt->count() == 0) {
      throw CLI::RequiredError("an inequality or --file");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : alba::cli::kUsage;
  }

  if (ineq_opt->count() > 0) config.inequality = inequality;
  if (file_opt->count() > 0) config.file = file;
  if (verify_opt->count() > 0) config.verify = verify;
  config.simplify = !no_simplify;
  static const std::map<std::string, OutputKind> kOutputs{{"fo", OutputKind::Fo},
                                                          {"quasi", OutputKind::Quasi},
                                                          {"trace", OutputKind::Trace},
                                                          {"all", OutputKind::All}};
  config.output = kOutputs.at(output);
  config.format = format == "json" ? Format::Json : Format::Text;
  return alba::cli::run_cli(config, std::cout, std::cerr);
}
