#include "../support.hpp"

#include "toroidal/catalog.hpp"
#include "toroidal/errors.hpp"
#include "toroidal/volume_ke.hpp"

#include <doctest.h>

#include <algorithm>

using namespace toroidal;
using namespace test_support;

namespace {

const SymIntMat e11{{1, 0}, {0, 0}};
const SymIntMat e22{{0, 0}, {0, 1}};
const SymIntMat z12{{1, -1}, {-1, 1}};

IntMatrix random_rows(std::mt19937_64& rng)
{
    IntMatrix a(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            a(i, j) = static_cast<long>(rng() % 11) - 5;
    return a;
}

} // namespace

TEST_CASE("volume_function examples")
{
    auto v = volume_function(principal_cone(2));
    auto x = var(3, 0), y = var(3, 1), z = var(3, 2);
    CHECK(v.F == x * y + x * z + y * z);
    CHECK(v.vol == 1);
    auto one = volume_function(MarkedCone(1, 1, {SymIntMat{{1}}}));
    CHECK(one.F == var(1, 0));
    CHECK(one.vol == 1);
    auto level = volume_function(principal_cone(2, 3));
    CHECK(level.F == v.F);
    CHECK_THROWS_AS(volume_function(MarkedCone(2, 1, {e11, e22})), DimensionError);
    CHECK_THROWS_AS(volume_function(MarkedCone(2, 1, {e11, e22, SymIntMat{{1, 0}, {0, 1}}})), DegenerateError);
}

TEST_CASE("t_matrix entries")
{
    auto v = volume_function(principal_cone(2));
    auto t = t_matrix(v);
    auto x = var(3, 0), y = var(3, 1), z = var(3, 2);
    CHECK(t(0, 1) == -(z * z));
    CHECK(t(0, 2) == -(y * y));
    CHECK(t(2, 0) == -(y * y));
    CHECK(t(0, 0) == -((y + z) * (y + z)));
    CHECK(t(1, 2) == -(x * x));
    CHECK(t.is_symmetric());
    auto one = t_matrix(volume_function(MarkedCone(1, 1, {SymIntMat{{1}}})));
    CHECK(one(0, 0) == cst(1, -1));
}

TEST_CASE("ma_constant")
{
    CHECK(ma_constant(1, 1) == -1);
    CHECK(ma_constant(2, 1) == -2);
    CHECK(ma_constant(3, 1) == 8);
    CHECK(ma_constant(2, 3) == -18);
}

TEST_CASE("Monge-Ampere identity, small genus")
{
    auto g1 = volume_function(MarkedCone(1, 1, {SymIntMat{{1}}}));
    CHECK(verify_ma_identity(g1, MaMode::symbolic).holds);
    auto g2 = volume_function(principal_cone(2));
    auto sym = verify_ma_identity(g2, MaMode::symbolic);
    CHECK(sym.holds);
    CHECK(sym.witnesses.empty());
    CHECK_FALSE(sym.seed.has_value());
    auto rnd = verify_ma_identity(g2, MaMode::randomized, 20, 7, 3);
    CHECK(rnd.holds);
    CHECK(rnd.seed == 7u);
}

TEST_CASE("Monge-Ampere identity on non-principal cones")
{
    MarkedCone tilted(2, 1, {e11, SymIntMat{{1, 1}, {1, 1}}, e22});
    CHECK(verify_ma_identity(volume_function(tilted), MaMode::symbolic).holds);
    MarkedCone coarse(2, 1, {e11.scaled(2), SymIntMat{{1, 1}, {1, 1}}, e22});
    auto v = volume_function(coarse);
    CHECK(v.vol == 2);
    CHECK(verify_ma_identity(v, MaMode::symbolic).holds);
}

TEST_CASE("random_rational_point is reproducible")
{
    auto a = random_rational_point(6, 42, 3);
    auto b = random_rational_point(6, 42, 3);
    auto c = random_rational_point(6, 42, 4);
    CHECK(a == b);
    CHECK(a != c);
    for (const auto& q : a) {
        CHECK(q > 0);
        CHECK(q.get_num() <= 1000000);
        CHECK(q.get_den() <= 1000000);
    }
}

TEST_CASE("randomized reports are independent of thread count")
{
    auto v = volume_function(principal_cone(3));
    auto one = verify_ma_identity(v, MaMode::randomized, 12, 5, 1);
    auto four = verify_ma_identity(v, MaMode::randomized, 12, 5, 4);
    CHECK(one.holds);
    CHECK(four.holds);
}

TEST_CASE("homogeneity of F")
{
    std::mt19937_64 rng(8);
    for (const char* name : {"principal-g2", "principal-g3"}) {
        auto v = volume_function(catalog_get(name).cone);
        for (int trial = 0; trial < 20; ++trial) {
            auto pt = random_point(rng, v.n);
            Rational lambda(static_cast<long>(1 + rng() % 9), static_cast<unsigned long>(1 + rng() % 5));
            lambda.canonicalize();
            std::vector<Rational> scaled;
            for (const auto& q : pt)
                scaled.push_back(lambda * q);
            CHECK(v.F.eval(scaled) == pow(lambda, static_cast<unsigned>(v.g)) * v.F.eval(pt));
        }
    }
}

TEST_CASE("Monge-Ampere sides are parity invariant")
{
    std::mt19937_64 rng(13);
    auto v = volume_function(principal_cone(2));
    auto t = t_matrix(v);
    for (int trial = 0; trial < 20; ++trial) {
        auto pt = random_point(rng, 3);
        std::vector<Rational> neg;
        for (const auto& q : pt)
            neg.push_back(-q);
        CHECK(determinant(t.eval(pt)) == determinant(t.eval(neg)));
        CHECK(pow(v.F.eval(pt), 3) * ma_constant(2, 1) == determinant(t.eval(neg)));
    }
}

TEST_CASE("KE membership")
{
    std::vector<SymIntMat> principal{e11, e22, z12};
    CHECK(is_ke_point(principal));
    std::vector<SymIntMat> dependent{e11, e22, SymIntMat{{1, 0}, {0, 1}}};
    CHECK_THROWS_AS(is_ke_point(dependent), DegenerateError);
    std::vector<SymIntMat> one{SymIntMat{{1}}};
    CHECK(is_ke_point(one));
    CHECK(ke_coefficient(principal, Exponent{2, 2, 2}) == 0);
    CHECK(ke_coefficient(principal, Exponent{6, 0, 0}) == 0);
    CHECK(ke_coefficient(one, Exponent{0}) == 0);
    CHECK_THROWS_AS(ke_coefficient(principal, Exponent{1, 1, 1}), DomainError);
    CHECK_THROWS_AS(ke_coefficient(principal, Exponent{6, 0}), DimensionError);
    std::vector<SymIntMat> indefinite{SymIntMat{{1, 2}, {2, -3}}, e22, z12};
    CHECK(is_ke_point(indefinite));
}

TEST_CASE("permutation_check")
{
    std::vector<SymIntMat> principal{e11, e22, z12};
    std::vector<std::size_t> id{0, 1, 2}, sw{1, 0, 2};
    CHECK(permutation_check(principal, id, 10, 1));
    CHECK(permutation_check(principal, sw, 10, 1));
    std::vector<std::size_t> bad{0, 0, 2};
    CHECK_THROWS_AS(permutation_check(principal, bad, 10, 1), DomainError);
}

TEST_CASE("g2 closed form")
{
    IntMatrix rows{{1, 0, 0}, {0, 0, 1}, {1, -1, 1}};
    CHECK(g2_closed_form(rows) == G2Coefficients{0, 0, 0, 1, 1, 1});
    // rows of I_3 give the pencil E11, delta12, E22 and F = xz - y^2.
    CHECK(g2_closed_form(IntMatrix::identity(3)) == G2Coefficients{0, -1, 0, 0, 1, 0});
    CHECK(g2_closed_form(IntMatrix(3, 3)) == G2Coefficients{0, 0, 0, 0, 0, 0});
    CHECK_THROWS_AS(g2_closed_form(IntMatrix(2, 3)), DimensionError);
}

TEST_CASE("g2 closed form matches pencil_det")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 25; ++trial) {
        IntMatrix a = random_rows(rng);
        auto c = g2_closed_form(a);
        auto pencil = g2_pencil_from_rows(a);
        std::vector<RatMatrix> mats;
        for (const auto& m : pencil)
            mats.push_back(m.to_rational());
        auto F = pencil_det(mats);
        CHECK(F.coefficient({2, 0, 0}) == Rational(c.A));
        CHECK(F.coefficient({0, 2, 0}) == Rational(c.B));
        CHECK(F.coefficient({0, 0, 2}) == Rational(c.C));
        CHECK(F.coefficient({1, 1, 0}) == Rational(c.L));
        CHECK(F.coefficient({1, 0, 1}) == Rational(c.M));
        CHECK(F.coefficient({0, 1, 1}) == Rational(c.N));
        if (determinant(a) != 0)
            CHECK(is_ke_point(pencil));
    }
}
