#pragma once

#include <string>
#include <vector>

namespace qogz {

enum class Status {
  pass,
  fail,
  /// An asserted check whose decision procedure was inconclusive.
  unknown,
  /// Report-only finding; never fails a run.
  report,
};

std::string to_string(Status s);

struct CheckRecord {
  Status status = Status::pass;
  std::string suite;
  std::string spec;
  std::string check_id;
  std::string witness;
};

using Report = std::vector<CheckRecord>;

/// True when no record is fail or unknown.
bool all_passed(const Report& r);
/// Stable sort by (suite, spec, check-id).
void sort_report(Report& r);
/// Header line plus one line per record:
/// STATUS<TAB>suite<TAB>spec<TAB>check-id<TAB>witness
std::string render_report(Report records);

/// Trim a witness to a single line of bounded length.
std::string clip_witness(const std::string& text, std::size_t limit = 400);

}  // namespace qogz
