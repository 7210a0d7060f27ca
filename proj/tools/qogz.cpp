#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qogz/campaign.hpp"
#include "qogz/errors.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification campaigns for quantum OGZ algebras"};
  app.require_subcommand(1);
  CLI::App* verify = app.add_subcommand("verify", "Run the suites of a campaign config");
  std::string config_path, suite, report_path;
  std::optional<std::uint64_t> seed, max_group;
  verify->add_option("--config", config_path, "Campaign config file")->required();
  verify->add_option("--suite", suite, "Only run this suite");
  verify->add_option("--seed", seed, "Override the config seed");
  verify->add_option("--report", report_path, "Write the report here instead of stdout");
  verify->add_option("--max-group-size", max_group, "Largest group to enumerate (default 100000)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (!suite.empty() && !qogz::is_suite_name(suite)) throw qogz::ParseError("unknown suite '" + suite + "'");
    qogz::Campaign c = qogz::load_campaign(config_path);
    if (seed) c.options.seed = *seed;
    if (max_group) c.options.max_group_size = *max_group;
    if (!report_path.empty()) c.options.report_path = report_path;
    qogz::validate_campaign(c);

    qogz::Report report = qogz::run_campaign(c, suite.empty() ? std::nullopt : std::optional<std::string>(suite));
    const std::string text = qogz::render_report(report);
    if (c.options.report_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(c.options.report_path);
      if (!out || !(out << text)) {
        std::cerr << "qogz: cannot write report '" << c.options.report_path << "'\n";
        return kExitUsage;
      }
    }
    std::size_t fails = 0, unknown = 0, reports = 0;
    for (const auto& r : report) {
      fails += r.status == qogz::Status::fail;
      unknown += r.status == qogz::Status::unknown;
      reports += r.status == qogz::Status::report;
    }
    std::cerr << "qogz: " << report.size() << " checks, " << fails << " failed, " << unknown << " unknown, " << reports
              << " report-only\n";
    return qogz::all_passed(report) ? kExitPass : kExitFail;
  } catch (const qogz::ParseError& e) {
    std::cerr << "qogz: config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const qogz::SizeLimitExceeded& e) {
    std::cerr << "qogz: size limit: " << e.what() << "\n";
    return kExitUsage;
  }
}
