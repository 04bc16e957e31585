#include "formacheck/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace formacheck {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign)
{
    if (s.empty())
        return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+'))
        i = 1;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

} // namespace

Rat parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);

    if (!is_integer_literal(num, true) || !is_integer_literal(den, false))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");

    mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0)
        throw std::invalid_argument("malformed rational '" + std::string(text) + "': zero denominator");

    Rat r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& value)
{
    if (value.get_den() == 1)
        return value.get_num().get_str();
    return value.get_str();
}

} // namespace formacheck
