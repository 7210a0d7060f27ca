#include "qogz/campaign.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "qogz/errors.hpp"
#include "qogz/noether.hpp"
#include "qogz/ogz.hpp"

namespace qogz {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"invariance",           "galois-support",   "gl-relations", "heisenberg",
                                              "noether-decomposition", "psi-equivariance", "parameters"};
  return names;
}

bool is_suite_name(std::string_view name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::uint64_t parse_u64(const std::string& v, const std::string& where) {
  if (v.empty() || !std::all_of(v.begin(), v.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError(where + ": expected a nonnegative integer, got '" + v + "'");
  try {
    return std::stoull(v);
  } catch (const std::exception&) {
    throw ParseError(where + ": integer out of range '" + v + "'");
  }
}

int parse_small(const std::string& v, const std::string& where, int lo, int hi) {
  std::uint64_t x = parse_u64(v, where);
  if (x < static_cast<std::uint64_t>(lo) || x > static_cast<std::uint64_t>(hi))
    throw ParseError(where + ": value " + v + " outside [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
  return static_cast<int>(x);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

CheckRecord make_record(const std::string& suite, const AlgebraSpec& spec, std::string id, Status st, std::string witness = "") {
  return {st, suite, spec.to_string(), std::move(id), std::move(witness)};
}

std::vector<int> distinct_rows(const AlgebraSpec& spec) {
  std::set<int> s(spec.r.begin(), spec.r.end());
  return {s.begin(), s.end()};
}

std::string two_digits(int i) { return (i < 10 ? "0" : "") + std::to_string(i); }

Report run_noether(const AlgebraSpec& spec, const CampaignOptions& opts) {
  const std::string suite = "noether-decomposition";
  const int m = spec.m, p = spec.p;
  Report out;
  for (int n : distinct_rows(spec)) {
    const std::string pre = "n=" + std::to_string(n) + "/";
    const auto group = enumerate_group(m, p, n, opts.max_group_size);
    std::mt19937_64 rng(opts.seed ^ fnv1a(suite + "|" + spec.to_string() + "|" + std::to_string(n)));
    const QuantumTorus torus(n);
    RandomTorusOptions ropt;
    ropt.modulus = m;
    ropt.step = m / p;
    ropt.x_min = -1;
    ropt.x_max = 1;
    std::vector<int> nonzero(p, 0);
    int done = 0;
    for (int attempt = 0; done < opts.samples && attempt < 20 * opts.samples + 20; ++attempt) {
      SkewElement f = reynolds_average(random_torus_element(torus, rng, ropt), group);
      if (f.is_zero()) continue;
      const std::string id = pre + "sample[" + two_digits(done) + "]";
      ++done;
      try {
        auto parts = eigenspace_decompose(f, m, p);
        SkewElement residue = eigenspace_reconstruct(parts, m, p) - f;
        std::string bad;
        for (int k = 0; k < p; ++k) {
          if (!parts[k].is_zero()) ++nonzero[k];
          if (!qtorus_is_invariant(parts[k], m, 1)) bad += " component " + std::to_string(k) + " not G(m,1,n)-invariant";
        }
        if (!residue.is_zero()) bad += " reconstruction residue " + torus.to_string(residue);
        out.push_back(make_record(suite, spec, id, bad.empty() ? Status::pass : Status::fail,
                                  bad.empty() ? "" : "f=" + torus.to_string(f) + ";" + bad));
      } catch (const std::exception& e) {
        out.push_back(make_record(suite, spec, id, Status::fail, "f=" + torus.to_string(f) + "; " + e.what()));
      }
    }
    if (done < opts.samples)
      out.push_back(make_record(suite, spec, pre + "sampler", Status::fail,
                                "only " + std::to_string(done) + " nonzero invariants generated"));
    std::string hist;
    for (int k = 0; k < p; ++k) hist += (k ? " " : "") + ("k=" + std::to_string(k) + ":" + std::to_string(nonzero[k]));
    out.push_back(make_record(suite, spec, pre + "nonzero-components", Status::report, hist));

    // Step 1 power map on random pairs of the torus with parameter q^m.
    const QuantumTorus source(n, m);
    std::vector<GroupElement> twists;
    for (int i = 0; i < n; ++i) {
      std::vector<int> perm(n);
      for (int j = 0; j < n; ++j) perm[j] = j + 1;
      std::vector<long> a(n, 0);
      a[i] = 1;
      twists.emplace_back(perm, a, m, 1);
    }
    RandomTorusOptions popt;
    popt.terms = 2;
    for (int s = 0; s < 10; ++s) {
      SkewElement a = random_torus_element(source, rng, popt), b = random_torus_element(source, rng, popt);
      SkewElement lhs = power_map_step1(a * b, m);
      SkewElement residue = lhs - power_map_step1(a, m) * power_map_step1(b, m);
      out.push_back(make_record(suite, spec, pre + "power-map-hom[" + two_digits(s) + "]",
                                residue.is_zero() ? Status::pass : Status::fail, torus.to_string(residue)));
      bool fixed = std::all_of(twists.begin(), twists.end(), [&](const GroupElement& g) { return qtorus_act(g, lhs) == lhs; });
      out.push_back(make_record(suite, spec, pre + "power-map-diagonal-invariant[" + two_digits(s) + "]",
                                fixed ? Status::pass : Status::fail, fixed ? "" : torus.to_string(lhs)));
    }
  }
  for (auto& c : out)
    if (c.status == Status::pass) c.witness.clear();
  return out;
}

Report run_psi(const AlgebraSpec& spec) {
  Report out;
  for (int k = 1; k < spec.n(); ++k) {
    Report r = psi_iso_check(k, spec);
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

Report run_parameters(const AlgebraSpec& spec) {
  const std::string suite = "parameters";
  Report out;
  const WeylFieldParams ogz = weyl_parameters_ogz(spec);
  out.push_back(make_record(suite, spec, "ogz/value", Status::report, ogz.to_string()));
  const VarLayout layout = spec.layout();
  const int rank_M = layout.size() - spec.row(spec.n());
  out.push_back(make_record(suite, spec, "ogz/pairs-equal-rank-M", ogz.pairs() == rank_M ? Status::pass : Status::fail,
                            std::to_string(ogz.pairs()) + " pairs, rank " + std::to_string(rank_M)));
  // One factor per row k < n, each the invariant field of G(m,p,r_k); the
  // last row contributes the transcendental base.
  WeylFieldParams merged{.low = spec.ratio(), .low_count = 0, .high = spec.m, .high_count = 0, .base_degree = spec.row(spec.n())};
  for (int k = 1; k < spec.n(); ++k) {
    WeylFieldParams w = weyl_parameters_invariants(spec.m, spec.p, spec.row(k));
    merged.low_count += w.low_count;
    merged.high_count += w.high_count;
  }
  out.push_back(make_record(suite, spec, "ogz/rows-product", merged == ogz ? Status::pass : Status::fail,
                            "rows give " + merged.to_string() + ", formula gives " + ogz.to_string()));
  for (int n : distinct_rows(spec))
    out.push_back(make_record(suite, spec, "invariants[n=" + std::to_string(n) + "]", Status::report,
                              weyl_parameters_invariants(spec.m, spec.p, n).to_string()));
  for (auto& c : out)
    if (c.status == Status::pass) c.witness.clear();
  return out;
}

}  // namespace

Campaign parse_campaign(std::string_view text) {
  Campaign c;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  enum class Section { none, options, suite } section = Section::none;
  std::set<std::string> seen_keys;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = "line " + std::to_string(lineno);
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string s = trim(line);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') throw ParseError(where + ": unterminated section header");
      std::string body = trim(std::string_view(s).substr(1, s.size() - 2));
      if (body == "options") {
        section = Section::options;
      } else if (body.rfind("suite", 0) == 0 && body.size() > 5 && (body[5] == ' ' || body[5] == '\t')) {
        std::string name = trim(std::string_view(body).substr(5));
        if (!is_suite_name(name)) throw ParseError(where + ": unknown suite '" + name + "'");
        c.suites.push_back({name, {}});
        section = Section::suite;
      } else {
        throw ParseError(where + ": unknown section [" + body + "]");
      }
      continue;
    }
    auto eq = s.find('=');
    if (eq == std::string::npos) throw ParseError(where + ": expected key = value");
    std::string key = trim(std::string_view(s).substr(0, eq));
    std::string value = trim(std::string_view(s).substr(eq + 1));
    switch (section) {
      case Section::none:
        throw ParseError(where + ": entry outside any section");
      case Section::options:
        if (!seen_keys.insert(key).second) throw ParseError(where + ": duplicate option '" + key + "'");
        if (key == "seed") {
          c.options.seed = parse_u64(value, where);
        } else if (key == "search_radius") {
          c.options.search_radius = parse_small(value, where, 0, 64);
        } else if (key == "samples") {
          c.options.samples = parse_small(value, where, 1, 100000);
        } else if (key == "max_group_size") {
          c.options.max_group_size = parse_u64(value, where);
        } else if (key == "report") {
          if (value.empty()) throw ParseError(where + ": empty report path");
          c.options.report_path = value;
        } else {
          throw ParseError(where + ": unknown option '" + key + "'");
        }
        break;
      case Section::suite:
        if (key != "spec") throw ParseError(where + ": suites only take 'spec' entries, got '" + key + "'");
        try {
          c.suites.back().specs.push_back(AlgebraSpec::parse(value));
        } catch (const ParseError& e) {
          throw ParseError(where + ": " + e.what());
        }
        break;
    }
  }
  return c;
}

Campaign load_campaign(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_campaign(ss.str());
}

void validate_campaign(const Campaign& c) {
  for (const auto& run : c.suites) {
    for (const auto& spec : run.specs) {
      const std::string where = run.name + " " + spec.to_string();
      if (run.name == "heisenberg" && spec.r != std::vector<int>{1, 1})
        throw ParseError(where + ": the heisenberg suite needs r=(1,1)");
      if (run.name == "psi-equivariance" && spec.n() < 2) throw ParseError(where + ": psi-equivariance needs n >= 2");
      if (spec.layout().size() > kMaxVars - 1) throw ParseError(where + ": at most 15 variables");
      if (run.name == "noether-decomposition")
        for (int n : distinct_rows(spec))
          if (group_order(spec.m, spec.p, n) > c.options.max_group_size)
            throw SizeLimitExceeded(where + ": |G(" + std::to_string(spec.m) + "," + std::to_string(spec.p) + "," +
                                    std::to_string(n) + ")| = " + std::to_string(group_order(spec.m, spec.p, n)) +
                                    " exceeds max_group_size " + std::to_string(c.options.max_group_size));
    }
  }
}

Report run_case(const std::string& suite, const AlgebraSpec& spec, const CampaignOptions& opts) {
  OgzOptions o;
  o.search_radius = opts.search_radius;
  if (suite == "invariance") return verify_invariance(spec, o);
  if (suite == "galois-support") return verify_galois_support(spec, o);
  if (suite == "gl-relations") return verify_serre_and_cross(spec, o);
  if (suite == "heisenberg") return verify_heisenberg(spec, o);
  if (suite == "noether-decomposition") return run_noether(spec, opts);
  if (suite == "psi-equivariance") return run_psi(spec);
  if (suite == "parameters") return run_parameters(spec);
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

Report run_campaign(const Campaign& c, const std::optional<std::string>& only_suite) {
  Report out;
  for (const auto& run : c.suites) {
    if (only_suite && run.name != *only_suite) continue;
    for (const auto& spec : run.specs) {
      Report r = run_case(run.name, spec, c.options);
      out.insert(out.end(), r.begin(), r.end());
    }
  }
  sort_report(out);
  return out;
}

}  // namespace qogz
