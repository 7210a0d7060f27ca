#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qogz/laurent.hpp"

namespace qogz {

/// (n, r, m, p) with p | m. n is r.size().
struct AlgebraSpec {
  std::vector<int> r;
  int m = 1;
  int p = 1;

  AlgebraSpec() = default;
  /// Throws std::invalid_argument on p not dividing m, empty r, or
  /// nonpositive entries.
  AlgebraSpec(std::vector<int> r, int m, int p);

  int n() const { return static_cast<int>(r.size()); }
  /// r_k for 0 <= k <= n, with r_0 = 0.
  int row(int k) const;
  int ratio() const { return m / p; }
  VarLayout layout() const { return VarLayout(r); }
  /// r = (1, 2, ..., n).
  bool is_gl_type() const;

  /// "r=(1,2,3) m=4 p=2".
  std::string to_string() const;
  /// Inverse of to_string; keys may appear in any order. Throws ParseError.
  static AlgebraSpec parse(std::string_view text);

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

}  // namespace qogz
