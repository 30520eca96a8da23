#include "swinv/arith.hpp"

#include <cctype>

namespace swinv {

ParseError::ParseError(const std::string &what, std::size_t line,
                       std::size_t column)
    : std::runtime_error(what), line_(line), column_(column) {}

std::string render(const Rational &q) {
  const Integer &den = boost::multiprecision::denominator(q);
  if (den == 1)
    return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

std::string render(const Integer &z) { return z.str(); }

std::string render(const IntVector &v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      out += ',';
    out += render(v[i]);
  }
  return out;
}

std::string render(const RatVector &v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      out += ',';
    out += render(v[i]);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s, std::size_t &offset) {
  offset = 0;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

// Validates [+-]?[0-9]+ and returns the column of the first bad character
// (1-based), or 0 when the token is well formed.
std::size_t bad_integer_column(std::string_view s) {
  if (s.empty())
    return 1;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-')
    i = 1;
  if (i == s.size())
    return i + 1;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      return i + 1;
  return 0;
}

Integer integer_from(std::string_view s) {
  if (!s.empty() && s[0] == '+')
    s.remove_prefix(1);
  return Integer(std::string(s));
}

template <class T, class F>
std::vector<T> parse_list(std::string_view text, F &&parse_one) {
  std::vector<T> out;
  std::size_t lead = 0;
  if (trim(text, lead).empty())
    return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start);
    try {
      out.push_back(parse_one(piece));
    } catch (const ParseError &e) {
      throw ParseError(e.what(), 0, start + e.column());
    }
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return out;
}

} // namespace

Integer parse_integer(std::string_view token) {
  std::size_t offset = 0;
  std::string_view s = trim(token, offset);
  if (std::size_t col = bad_integer_column(s))
    throw ParseError("expected an integer, got '" + std::string(token) + "'",
                     0, offset + col);
  return integer_from(s);
}

Rational parse_rational(std::string_view token) {
  std::size_t offset = 0;
  std::string_view s = trim(token, offset);
  std::size_t slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (std::size_t col = bad_integer_column(s))
      throw ParseError("expected a rational p or p/q, got '" +
                           std::string(token) + "'",
                       0, offset + col);
    return Rational(integer_from(s));
  }
  std::string_view num = s.substr(0, slash);
  std::string_view den = s.substr(slash + 1);
  if (std::size_t col = bad_integer_column(num))
    throw ParseError("bad numerator in '" + std::string(token) + "'", 0,
                     offset + col);
  if (den.empty() || den[0] == '-' || den[0] == '+' || bad_integer_column(den))
    throw ParseError("bad denominator in '" + std::string(token) + "'", 0,
                     offset + slash + 2);
  Integer d = integer_from(den);
  if (d == 0)
    throw ParseError("zero denominator in '" + std::string(token) + "'", 0,
                     offset + slash + 2);
  return Rational(integer_from(num), d);
}

IntVector parse_int_vector(std::string_view text) {
  return parse_list<Integer>(text, parse_integer);
}

RatVector parse_rat_vector(std::string_view text) {
  return parse_list<Rational>(text, parse_rational);
}

RatVector to_rational(const IntVector &v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto &z : v)
    out.emplace_back(z);
  return out;
}

bool is_integral(const Rational &q) {
  return boost::multiprecision::denominator(q) == 1;
}

Integer exact_div(const Integer &num, const Integer &den, const char *what) {
  Integer q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0)
    throw DomainError(std::string(what) + ": " + num.str() + "/" + den.str() +
                      " is not an integer");
  return q;
}

Integer mod(const Integer &z, const Integer &m) {
  Integer r = z % m;
  if (r < 0)
    r += m;
  return r;
}

} // namespace swinv
