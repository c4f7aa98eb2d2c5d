#ifndef JAMESLOOP_RATIONAL_HPP
#define JAMESLOOP_RATIONAL_HPP

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace jamesloop
{

/// Exact rational scalar used everywhere in the kernel.
using Rational = boost::multiprecision::mpq_rational;

/// Parse "p/q", "p" or a finite decimal such as "0.25". Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q" in lowest terms, or "p" for integers.
std::string format_rational(const Rational& value);

std::vector<Rational> parse_rationals(const std::vector<std::string>& texts);
std::vector<std::string> format_rationals(const std::vector<Rational>& values);

} // namespace jamesloop

#endif
