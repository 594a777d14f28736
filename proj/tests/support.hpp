#ifndef TOROIDAL_TESTS_SUPPORT_HPP
#define TOROIDAL_TESTS_SUPPORT_HPP

#include "toroidal/multi_poly.hpp"
#include "toroidal/matrix.hpp"

#include <filesystem>
#include <random>
#include <vector>

namespace test_support {

using toroidal::Exponent;
using toroidal::MultiPoly;
using toroidal::Rational;

inline MultiPoly var(std::size_t n, std::size_t i)
{
    return MultiPoly::variable(n, i);
}

inline MultiPoly cst(std::size_t n, long c)
{
    return MultiPoly::constant(n, Rational(c));
}

inline MultiPoly random_poly(std::mt19937_64& rng, std::size_t nvars, unsigned max_degree, std::size_t terms)
{
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::uniform_int_distribution<std::size_t> pick(0, nvars - 1);
    std::vector<toroidal::Term> out;
    for (std::size_t t = 0; t < terms; ++t) {
        Exponent e(nvars, 0);
        unsigned d = deg(rng);
        for (unsigned k = 0; k < d; ++k)
            ++e[pick(rng)];
        Rational q(coeff(rng), static_cast<unsigned long>(1 + (rng() % 3)));
        q.canonicalize();
        out.push_back({e, q});
    }
    return MultiPoly::from_terms(nvars, std::move(out));
}

inline std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t n)
{
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 7);
    std::vector<Rational> p;
    for (std::size_t i = 0; i < n; ++i) {
        Rational q(num(rng), static_cast<unsigned long>(den(rng)));
        q.canonicalize();
        p.push_back(q);
    }
    return p;
}

inline std::filesystem::path golden_dir()
{
    return TOROIDAL_GOLDEN_DIR;
}

} // namespace test_support

#endif
