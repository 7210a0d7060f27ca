#pragma once

// Verification campaigns: a declarative config naming suites and specs.
//
//   [options]
//   seed = 1
//   search_radius = 6
//   samples = 50
//   max_group_size = 100000
//   report = out.txt
//
//   [suite invariance]
//   spec = r=(1,2) m=2 p=2
//
// '#' starts a comment. Suites: invariance, galois-support, gl-relations,
// heisenberg, noether-decomposition, psi-equivariance, parameters.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qogz/report.hpp"
#include "qogz/spec.hpp"

namespace qogz {

struct CampaignOptions {
  std::uint64_t seed = 0;
  int search_radius = 6;
  /// Reynolds samples per group in noether-decomposition.
  int samples = 50;
  std::uint64_t max_group_size = 100000;
  std::string report_path;
};

struct SuiteRun {
  std::string name;
  std::vector<AlgebraSpec> specs;
};

struct Campaign {
  std::vector<SuiteRun> suites;
  CampaignOptions options;
};

const std::vector<std::string>& suite_names();
bool is_suite_name(std::string_view name);

/// Throws ParseError with a line number on malformed input.
Campaign parse_campaign(std::string_view text);
/// Throws ParseError when the file cannot be read or parsed.
Campaign load_campaign(const std::string& path);
/// Scope and size checks that do not need any computation: heisenberg
/// needs r = (1,1), psi-equivariance needs n >= 2, noether-decomposition
/// groups must fit max_group_size. Throws ParseError or SizeLimitExceeded.
void validate_campaign(const Campaign& c);

/// One (suite, spec) case.
Report run_case(const std::string& suite, const AlgebraSpec& spec, const CampaignOptions& opts);
/// Every case, optionally restricted to one suite; sorted.
Report run_campaign(const Campaign& c, const std::optional<std::string>& only_suite = std::nullopt);

}  // namespace qogz
