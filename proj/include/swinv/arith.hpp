#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace swinv {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;
using IntMatrix = std::vector<IntVector>;
using RatMatrix = std::vector<RatVector>;

// Input or arguments violate a mathematical precondition. CLI exit code 2.
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. CLI exit code 3. Line and column are 1-based; 0 means
// "not applicable" (e.g. a command-line argument).
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &what, std::size_t line = 0,
             std::size_t column = 0);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

// Renders p/q with q > 0 and gcd(p,q) = 1; integral values render as p.
std::string render(const Rational &q);
std::string render(const Integer &z);
std::string render(const IntVector &v);
std::string render(const RatVector &v);

// Strict decimal parsers: optional sign, digits, and for rationals an optional
// "/denominator". Throw ParseError (column relative to the token).
Integer parse_integer(std::string_view token);
Rational parse_rational(std::string_view token);
// Comma-separated list; whitespace around entries is ignored.
IntVector parse_int_vector(std::string_view text);
RatVector parse_rat_vector(std::string_view text);

RatVector to_rational(const IntVector &v);

bool is_integral(const Rational &q);
// Exact division; DomainError carrying `what` when the quotient is not an
// integer.
Integer exact_div(const Integer &num, const Integer &den, const char *what);

inline bool is_even(const Integer &z) { return (z & 1) == 0; }

// Least nonnegative residue.
Integer mod(const Integer &z, const Integer &m);

} // namespace swinv
