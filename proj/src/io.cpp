#include "schur/io.hpp"

#include <charconv>
#include <sstream>
#include <string_view>

namespace schur {

std::string format_int_sequence(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string format_partition(const Partition& p) { return format_int_sequence(p.parts()); }

Partition parse_partition(const std::string& text, int n) {
  if (text.empty()) throw ParseError("empty partition text");
  std::vector<int> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string_view token(text.data() + pos, comma - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || value < 0)
      throw ParseError("bad part '" + std::string(token) + "' in partition '" + text + "'");
    parts.push_back(value);
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  return make_partition(std::move(parts), n);
}

std::string format_tableau(const Tableau& t) {
  std::ostringstream os;
  const SkewShape& s = t.shape();
  for (int r = 0; r < s.rank(); ++r) {
    if (r) os << '\n';
    bool first = true;
    for (int c = 0; c < s.row_begin(r); ++c) {
      if (!first) os << ' ';
      os << '.';
      first = false;
    }
    for (int e : t.rows()[static_cast<std::size_t>(r)]) {
      if (!first) os << ' ';
      os << e;
      first = false;
    }
  }
  return os.str();
}

std::string format_expansion(const SchurExpansion& e) {
  std::string out;
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    out += format_partition(it->first);
    out += ": ";
    out += std::to_string(it->second);
    out += '\n';
  }
  return out;
}

nlohmann::json json_partition(const Partition& p) { return nlohmann::json(p.parts()); }

nlohmann::json json_tableau(const Tableau& t) {
  return {{"outer", t.shape().outer().parts()},
          {"inner", t.shape().inner().parts()},
          {"rows", t.rows()}};
}

nlohmann::json json_expansion(const SchurExpansion& e) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it)
    arr.push_back({{"partition", it->first.parts()}, {"coeff", it->second}});
  return arr;
}

nlohmann::json json_certificate(const SnnCertificate& c) {
  return {{"s", c.s},
          {"sigma", c.sigma},
          {"tau", c.tau},
          {"witness", c.witness.parts()},
          {"case", to_string(c.proof_case)}};
}

const char* to_string(SnnCase c) { return c == SnnCase::prefix ? "prefix" : "minimality"; }

const char* to_string(SnnDirection d) { return d == SnnDirection::lhs ? "lhs" : "rhs"; }

}  // namespace schur
