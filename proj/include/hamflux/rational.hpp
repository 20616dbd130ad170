#pragma once

#include <gmpxx.h>

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

namespace hamflux {

// GMP keeps every mpq_class canonical after arithmetic: gcd(num, den) = 1 and
// den > 0. Values built from raw parts must be canonicalize()d once.
using Rational = mpq_class;

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace detail

/// Parses "p/q" or "p" (optional sign on p). Rejects a zero denominator and
/// anything that is not plain decimal digits.
inline std::optional<Rational> parse_rational(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  bool negative = false;
  if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
    negative = num.front() == '-';
    num.remove_prefix(1);
  }
  if (!detail::all_digits(num) || !detail::all_digits(den)) return std::nullopt;
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) return std::nullopt;
  if (negative) p = -p;
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace hamflux
