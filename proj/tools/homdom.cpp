#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "homdom/catalog.hpp"
#include "homdom/suite.hpp"

namespace {

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certificate checks for homogeneous hypersurfaces and their automorphisms"};
  app.require_subcommand(1);

  std::string config_path;
  std::string format = "json";
  std::string report_path;
  std::string summary_path;
  homdom::RunOptions options;
  std::uint64_t seed = 0;

  auto* verify = app.add_subcommand("verify", "run every check in a config file");
  verify->add_option("config", config_path, "config file")->required();
  verify->add_flag("--fail-fast", options.fail_fast, "stop after the first check that does not pass");
  verify->add_option("--jobs,-j", options.jobs, "number of worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--format", format, "stdout format")->check(CLI::IsMember({"json", "md"}));
  auto* seed_opt = verify->add_option("--seed-override", seed, "use this seed for every check");
  verify->add_option("--report", report_path, "also write the NDJSON report here");
  verify->add_option("--summary", summary_path, "also write the markdown summary here");

  std::string id;
  auto* describe = app.add_subcommand("describe", "print a registry object");
  describe->add_option("id", id, "registry identifier, e.g. gamma(alpha=1/12)")->required();

  auto* list = app.add_subcommand("list", "list registry identifiers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*describe) {
      std::cout << homdom::describe(id);
      return 0;
    }
    if (*list) {
      for (const auto& entry : homdom::list_registry()) std::cout << entry.example_id << "\t" << entry.summary << "\n";
      return 0;
    }
    if (*seed_opt) options.seed_override = seed;
    const homdom::SuiteConfig config = homdom::load_config(config_path);
    const homdom::SuiteReport report = homdom::run_suite(config, options);
    const std::string ndjson = homdom::to_ndjson(report);
    const std::string md = homdom::to_markdown(report);
    std::cout << (format == "md" ? md : ndjson);
    if (!report_path.empty() && !write_file(report_path, ndjson)) {
      std::cerr << "cannot write " << report_path << "\n";
      return 2;
    }
    if (!summary_path.empty() && !write_file(summary_path, md)) {
      std::cerr << "cannot write " << summary_path << "\n";
      return 2;
    }
    if (report.count(homdom::CheckStatus::error) > 0) return 2;
    return report.all_pass() && report.skipped == 0 ? 0 : 1;
  } catch (const homdom::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
