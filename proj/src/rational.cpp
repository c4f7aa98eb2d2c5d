#include "jamesloop/rational.hpp"

#include <cctype>

#include "jamesloop/errors.hpp"

namespace jamesloop
{

namespace
{

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

// Base-10 digits; leading zeros must not switch the parser to octal.
boost::multiprecision::mpz_int decimal(std::string_view digits)
{
    std::size_t first = digits.find_first_not_of('0');
    if (first == std::string_view::npos)
        return 0;
    return boost::multiprecision::mpz_int(std::string(digits.substr(first)));
}

Rational parse_integer(std::string_view s, std::string_view whole)
{
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
    {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw ParseError("malformed rational \"" + std::string(whole) + "\"");
    Rational value{decimal(s)};
    return negative ? Rational(-value) : value;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    if (auto slash = text.find('/'); slash != std::string_view::npos)
    {
        Rational num = parse_integer(text.substr(0, slash), text);
        std::string_view den_text = text.substr(slash + 1);
        if (!all_digits(den_text))
            throw ParseError("malformed rational \"" + std::string(text) + "\"");
        boost::multiprecision::mpz_int den = decimal(den_text);
        if (den == 0)
            throw ParseError("zero denominator in \"" + std::string(text) + "\"");
        return num / Rational(den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos)
    {
        std::string_view frac = text.substr(dot + 1);
        if (!all_digits(frac))
            throw ParseError("malformed rational \"" + std::string(text) + "\"");
        std::string_view whole = text.substr(0, dot);
        bool negative = !whole.empty() && whole.front() == '-';
        std::string digits = std::string(negative || (!whole.empty() && whole.front() == '+')
                                              ? whole.substr(1)
                                              : whole) +
                             std::string(frac);
        if (!all_digits(digits))
            throw ParseError("malformed rational \"" + std::string(text) + "\"");
        boost::multiprecision::mpz_int scale = 1;
        for (std::size_t k = 0; k < frac.size(); ++k)
            scale *= 10;
        Rational value = Rational(decimal(digits)) / Rational(scale);
        return negative ? Rational(-value) : value;
    }
    return parse_integer(text, text);
}

std::string format_rational(const Rational& value)
{
    return value.str();
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& texts)
{
    std::vector<Rational> out;
    out.reserve(texts.size());
    for (const auto& t : texts)
        out.push_back(parse_rational(t));
    return out;
}

std::vector<std::string> format_rationals(const std::vector<Rational>& values)
{
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const auto& v : values)
        out.push_back(format_rational(v));
    return out;
}

} // namespace jamesloop
