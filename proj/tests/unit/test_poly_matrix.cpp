#include "../support.hpp"

#include "toroidal/errors.hpp"
#include "toroidal/poly_matrix.hpp"

#include <doctest.h>

using namespace toroidal;
using namespace test_support;

TEST_CASE("small determinants")
{
    auto x = var(2, 0), y = var(2, 1);
    PolyMatrix one(1, 1, std::vector<MultiPoly>{x * y});
    CHECK(polymat_det(one) == x * y);
    PolyMatrix m(2, 2, std::vector<MultiPoly>{x, y, y, x});
    CHECK(polymat_det(m) == x * x - y * y);
    CHECK_THROWS_AS(polymat_det(PolyMatrix(2, 3, 2)), DimensionError);
}

TEST_CASE("T-matrix of the genus-two principal cone at (1,1,1)")
{
    auto x = var(3, 0), y = var(3, 1), z = var(3, 2);
    auto F = x * y + x * z + y * z;
    std::vector<MultiPoly> grad{F.partial(0), F.partial(1), F.partial(2)};
    PolyMatrix t(3, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            t.set(i, j, F * grad[i].partial(j) - grad[i] * grad[j]);
    std::vector<Rational> ones(3, Rational(1));
    CHECK(polymat_det(t).eval(ones) == -54);
    CHECK(determinant(t.eval(ones)) == -54);
}

TEST_CASE("pencil_det examples")
{
    RatMatrix e11{{1, 0}, {0, 0}}, e22{{0, 0}, {0, 1}}, z12{{1, -1}, {-1, 1}};
    std::vector<RatMatrix> pencil{e11, e22, z12};
    auto x = var(3, 0), y = var(3, 1), z = var(3, 2);
    CHECK(pencil_det(pencil) == x * y + x * z + y * z);
    std::vector<RatMatrix> id{RatMatrix::identity(2)};
    CHECK(pencil_det(id) == var(1, 0) * var(1, 0));
    std::vector<RatMatrix> ragged{RatMatrix::identity(2), RatMatrix::identity(3)};
    CHECK_THROWS_AS(pencil_det(ragged), DimensionError);
}

TEST_CASE("pencil_det is homogeneous of degree g")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t g = 2 + trial % 3;
        std::size_t n = g * (g + 1) / 2;
        std::vector<RatMatrix> mats;
        for (std::size_t k = 0; k < n; ++k) {
            RatMatrix a(g, g);
            for (std::size_t i = 0; i < g; ++i)
                for (std::size_t j = i; j < g; ++j)
                    a(i, j) = a(j, i) = Rational(static_cast<long>(rng() % 7) - 3);
            mats.push_back(a);
        }
        auto p = pencil_det(mats);
        if (p.is_zero())
            continue;
        for (const auto& t : p.terms()) {
            unsigned s = 0;
            for (auto e : t.exp)
                s += e;
            CHECK(s == g);
        }
    }
}

TEST_CASE("cofactor and Bareiss agree on random matrices")
{
    std::mt19937_64 rng(11);
    for (std::size_t size : {3u, 4u}) {
        for (int trial = 0; trial < 10; ++trial) {
            std::size_t nv = 1 + rng() % 3;
            std::vector<MultiPoly> entries;
            for (std::size_t k = 0; k < size * size; ++k)
                entries.push_back(random_poly(rng, nv, 2, 3));
            PolyMatrix m(size, size, entries);
            auto a = det_cofactor(m);
            auto b = det_bareiss(m);
            CHECK(a == b);
            auto pt = random_point(rng, nv);
            CHECK(a.eval(pt) == determinant(m.eval(pt)));
        }
    }
}

TEST_CASE("Bareiss handles zero pivots and singular matrices")
{
    auto x = var(2, 0), y = var(2, 1);
    MultiPoly o(2);
    PolyMatrix m(3, 3, std::vector<MultiPoly>{o, x, y, x, o, y, y, x, o});
    CHECK(det_bareiss(m) == det_cofactor(m));
    PolyMatrix s(3, 3, std::vector<MultiPoly>{x, y, x + y, x, y, x + y, y, x, o});
    CHECK(det_bareiss(s).is_zero());
    CHECK(det_cofactor(s).is_zero());
}

TEST_CASE("delete_rows_cols and symmetry")
{
    auto x = var(1, 0);
    PolyMatrix m(3, 3, std::vector<MultiPoly>{x, cst(1, 1), cst(1, 2), cst(1, 1), x, cst(1, 3), cst(1, 2), cst(1, 3), x});
    CHECK(m.is_symmetric());
    std::vector<std::size_t> drop{1};
    auto r = m.delete_rows_cols(drop);
    CHECK(r.rows() == 2);
    CHECK(r(0, 1) == cst(1, 2));
}

TEST_CASE("integer and rational determinants")
{
    IntMatrix a{{2, 0, 1}, {1, 3, 2}, {1, 1, 2}};
    CHECK(determinant(a) == 6);
    IntMatrix z{{0, 1}, {1, 0}};
    CHECK(determinant(z) == -1);
    RatMatrix r{{Rational(1, 2), 1}, {1, 2}};
    CHECK(determinant(r) == 0);
    CHECK(rank(r) == 1);
}
