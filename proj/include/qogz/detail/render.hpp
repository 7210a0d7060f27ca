#pragma once

#include <string>
#include <vector>

namespace qogz::detail {

/// One summand of a rendered sum: a coefficient text and a monomial text
/// (empty for constants).
struct RenderTerm {
  bool negative = false;     // print as " - " (or leading "-")
  std::string coef;          // magnitude text, "1" when trivial
  bool coef_compound = false;  // needs parentheses when multiplied
  std::string mono;
};

inline std::string join_terms(const std::vector<RenderTerm>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    if (i == 0) {
      if (t.negative) out += "-";
    } else {
      out += t.negative ? " - " : " + ";
    }
    std::string c = t.coef_compound ? "(" + t.coef + ")" : t.coef;
    if (t.mono.empty()) {
      out += (t.coef_compound && terms.size() > 1) ? c : t.coef;
    } else if (t.coef == "1" && !t.coef_compound) {
      out += t.mono;
    } else {
      out += c + "*" + t.mono;
    }
  }
  return out;
}

}  // namespace qogz::detail
