#include "bowforge/rational.hpp"

#include "bowforge/errors.hpp"

#include <cctype>
#include <charconv>

namespace bowforge {

std::string to_string(const Rational& q)
{
    if (q.denominator() == 1)
        return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

namespace {

Int parse_int(std::string_view s, const std::string& whole)
{
    Int value = 0;
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw DomainError("parse", "not a rational number: '" + whole + "'");
    return value;
}

} // namespace

Rational parse_rational(const std::string& text)
{
    std::string_view s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Int num = parse_int(s.substr(0, slash), text);
        Int den = parse_int(s.substr(slash + 1), text);
        if (den == 0)
            throw DomainError("parse", "zero denominator in '" + text + "'");
        return Rational(num, den);
    }
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        bool negative = !s.empty() && s.front() == '-';
        std::string_view ip = s.substr(0, dot);
        std::string_view fp = s.substr(dot + 1);
        if (fp.empty() || fp.size() > 15)
            throw DomainError("parse", "unsupported decimal '" + text + "'");
        Int scale = 1;
        for (std::size_t k = 0; k < fp.size(); ++k)
            scale *= 10;
        Int whole = (ip.empty() || ip == "-" || ip == "+") ? 0 : parse_int(ip, text);
        Int frac = parse_int(fp, text);
        if (frac < 0)
            throw DomainError("parse", "not a rational number: '" + text + "'");
        Rational r(whole);
        r += Rational(negative ? -frac : frac, scale);
        return r;
    }
    return Rational(parse_int(s, text));
}

Int to_integer(const Rational& q)
{
    if (q.denominator() != 1)
        throw DomainError("non_integral", "expected an integer, got " + to_string(q));
    return q.numerator();
}

} // namespace bowforge
