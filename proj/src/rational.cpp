#include "toroidal/rational.hpp"

#include "toroidal/errors.hpp"

namespace toroidal {

Integer parse_integer(std::string_view text)
{
    Integer z;
    std::string s(text);
    if (s.empty() || z.set_str(s, 10) != 0)
        throw ParseError("not an integer: '" + s + "'");
    return z;
}

Rational parse_rational(std::string_view num, std::string_view den)
{
    Rational q(parse_integer(num), parse_integer(den));
    if (q.get_den() == 0)
        throw ParseError("zero denominator");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational pow(const Rational& base, unsigned exponent)
{
    Rational out(pow(Integer(base.get_num()), exponent), pow(Integer(base.get_den()), exponent));
    out.canonicalize();
    return out;
}

Integer pow(const Integer& base, unsigned exponent)
{
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

} // namespace toroidal
