#include "wittlab/bigint.hpp"

#include <cctype>

namespace wittlab {

namespace {

std::string trimmed(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool is_decimal(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

std::optional<mpz_class> parse_bigint(const std::string& s) {
  const std::string t = trimmed(s);
  if (!is_decimal(t)) return std::nullopt;
  return mpz_class(t);
}

std::optional<mpq_class> parse_bigrat(const std::string& s) {
  const std::string t = trimmed(s);
  const size_t slash = t.find('/');
  if (slash == std::string::npos) {
    auto z = parse_bigint(t);
    if (!z) return std::nullopt;
    return mpq_class(*z);
  }
  auto num = parse_bigint(t.substr(0, slash));
  auto den = parse_bigint(t.substr(slash + 1));
  if (!num || !den || *den == 0) return std::nullopt;
  mpq_class q(*num, *den);
  q.canonicalize();
  return q;
}

std::optional<std::vector<mpz_class>> parse_bigint_list(const std::string& s) {
  std::vector<mpz_class> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    const size_t comma = s.find(',', pos);
    const std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    auto z = parse_bigint(item);
    if (!z) return std::nullopt;
    out.push_back(std::move(*z));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace wittlab
