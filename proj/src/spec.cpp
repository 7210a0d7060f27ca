#include "qogz/spec.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "qogz/errors.hpp"

namespace qogz {

AlgebraSpec::AlgebraSpec(std::vector<int> rows, int m_, int p_) : r(std::move(rows)), m(m_), p(p_) {
  if (r.empty()) throw std::invalid_argument("signature r must be nonempty");
  for (int v : r)
    if (v < 1) throw std::invalid_argument("signature entries must be positive");
  if (m < 1 || p < 1) throw std::invalid_argument("m and p must be positive");
  if (m % p) throw std::invalid_argument("p = " + std::to_string(p) + " does not divide m = " + std::to_string(m));
}

int AlgebraSpec::row(int k) const {
  if (k == 0) return 0;
  if (k < 1 || k > n()) throw std::out_of_range("row " + std::to_string(k) + " out of range");
  return r[k - 1];
}

bool AlgebraSpec::is_gl_type() const {
  for (int k = 1; k <= n(); ++k)
    if (r[k - 1] != k) return false;
  return true;
}

std::string AlgebraSpec::to_string() const {
  std::string s = "r=(";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + ") m=" + std::to_string(m) + " p=" + std::to_string(p);
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  if (s.empty()) throw ParseError("missing number in spec \"" + std::string(whole) + "\"");
  int v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad number '" + std::string(s) + "' in spec \"" + std::string(whole) + "\"");
    v = v * 10 + (c - '0');
    if (v > 1000000) throw ParseError("number too large in spec \"" + std::string(whole) + "\"");
  }
  return v;
}

}  // namespace

AlgebraSpec AlgebraSpec::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  std::vector<int> r;
  int m = -1, p = -1;
  bool have_r = false;
  while (in >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value in spec \"" + std::string(text) + "\"");
    std::string key = tok.substr(0, eq);
    std::string val = tok.substr(eq + 1);
    if (key == "r") {
      if (val.size() < 2 || val.front() != '(' || val.back() != ')')
        throw ParseError("r must look like (1,2,3) in spec \"" + std::string(text) + "\"");
      std::string_view body(val);
      body = body.substr(1, body.size() - 2);
      std::size_t start = 0;
      while (true) {
        auto comma = body.find(',', start);
        r.push_back(parse_int(body.substr(start, comma - start), text));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
      have_r = true;
    } else if (key == "m") {
      m = parse_int(val, text);
    } else if (key == "p") {
      p = parse_int(val, text);
    } else {
      throw ParseError("unknown key '" + key + "' in spec \"" + std::string(text) + "\"");
    }
  }
  if (!have_r || m < 0 || p < 0) throw ParseError("spec needs r, m and p: \"" + std::string(text) + "\"");
  try {
    return AlgebraSpec(std::move(r), m, p);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(e.what()) + " in spec \"" + std::string(text) + "\"");
  }
}

}  // namespace qogz
