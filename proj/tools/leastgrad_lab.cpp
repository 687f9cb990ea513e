#include <CLI11.hpp>
#include <exception>
#include <iostream>

#include "commands.hpp"
#include "config.hpp"
#include "leastgrad/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"leastgrad-lab: fat Cantor arcs, projection fields and least-gradient experiments"};
  app.require_subcommand(1);
  std::string configPath, outDir;
  bool allowNonconverged = false;
  const auto add = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", configPath, "INI configuration file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", outDir, "Output directory (overrides [output] dir)");
    return sub;
  };
  add("build", "Build the chord tree; write its export and an SVG figure");
  add("verify", "Run every verification check and write report.json");
  add("solve", "Run a least-gradient scenario and write report, field and figure")
      ->add_flag("--allow-nonconverged", allowNonconverged,
                 "Exit 0 even if the solver stops at max_iter");
  add("report", "Validate and summarize an existing report.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return lgcli::kMisuse;
  }

  try {
    const lgcli::RunConfig config = lgcli::load_config(configPath);
    lgcli::RunOptions options{outDir.empty() ? config.outDir : outDir, allowNonconverged};
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "build") return lgcli::cmd_build(config, options);
    if (cmd == "verify") return lgcli::cmd_verify(config, options);
    if (cmd == "solve") return lgcli::cmd_solve(config, options);
    return lgcli::cmd_report(config, options);
  } catch (const lgcli::ConfigError& e) {
    std::cerr << e.what() << "\n";
    return lgcli::kMisuse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return lgcli::kCheckFailure;
  }
}
