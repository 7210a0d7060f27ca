#include "qogz/report.hpp"

#include <algorithm>
#include <tuple>

namespace qogz {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "PASS";
    case Status::fail:
      return "FAIL";
    case Status::unknown:
      return "UNKNOWN";
    case Status::report:
      return "REPORT";
  }
  return "?";
}

bool all_passed(const Report& r) {
  return std::none_of(r.begin(), r.end(), [](const CheckRecord& c) { return c.status == Status::fail || c.status == Status::unknown; });
}

void sort_report(Report& r) {
  std::stable_sort(r.begin(), r.end(), [](const CheckRecord& a, const CheckRecord& b) {
    return std::tie(a.suite, a.spec, a.check_id) < std::tie(b.suite, b.spec, b.check_id);
  });
}

std::string render_report(Report records) {
  sort_report(records);
  std::string out = "#STATUS\tsuite\tspec\tcheck-id\twitness\n";
  for (const auto& c : records) {
    out += to_string(c.status) + "\t" + c.suite + "\t" + c.spec + "\t" + c.check_id;
    if (!c.witness.empty()) out += "\t" + clip_witness(c.witness);
    out += "\n";
  }
  return out;
}

std::string clip_witness(const std::string& text, std::size_t limit) {
  std::string s;
  for (char c : text) s += (c == '\n' || c == '\t') ? ' ' : c;
  if (s.size() > limit) s = s.substr(0, limit) + "...";
  return s;
}

}  // namespace qogz
