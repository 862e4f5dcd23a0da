#include "kreinccr/types.hpp"

#include <cctype>

namespace kreinccr {

std::string to_string(const Rational& r)
{
    return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

bool is_integer_literal(const std::string& s)
{
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text)
{
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den)) {
        throw DomainError("not a rational literal: '" + text + "'");
    }
    const BigInt d(den[0] == '+' ? den.substr(1) : den);
    if (d == 0) throw DomainError("zero denominator in '" + text + "'");
    return Rational(BigInt(num[0] == '+' ? num.substr(1) : num), d);
}

double to_double(const Rational& r)
{
    return r.convert_to<double>();
}

}  // namespace kreinccr
