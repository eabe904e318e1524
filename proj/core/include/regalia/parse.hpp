#pragma once

#include "regalia/polynomial.hpp"
#include "regalia/ring.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace regalia {

/// Error with the offset (0-based) into the parsed text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, size_t position)
      : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

/// Parses the canonical polynomial syntax, e.g. "3*x0^2*x1 - x2^3" or
/// "1/2*x0 + x1".  Coefficients are integers or fractions a/b; variables are
/// the ring's variable names (case-sensitive); whitespace is insignificant;
/// parentheses and '^' powers are allowed.  Every string emitted by
/// Polynomial::str() parses back to an equal polynomial.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

/// Comma-separated list of polynomials (top-level commas only).
std::vector<Polynomial> parse_polynomial_list(const RingPtr& ring, std::string_view text);

}  // namespace regalia
