#include "toroidal/catalog.hpp"
#include "toroidal/cone.hpp"
#include "toroidal/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace toroidal;

namespace {

const SymIntMat e11{{1, 0}, {0, 0}};
const SymIntMat e22{{0, 0}, {0, 1}};
const SymIntMat z12{{1, -1}, {-1, 1}};
const GroupElement swap2{{0, 1}, {1, 0}};

MarkedCone sigma0()
{
    return MarkedCone(2, 1, {e11, e22, z12});
}

GroupElement random_unimodular(std::mt19937_64& rng, std::size_t g)
{
    IntMatrix m = IntMatrix::identity(g);
    for (int step = 0; step < 6; ++step) {
        std::size_t i = rng() % g, j = rng() % g;
        IntMatrix e = IntMatrix::identity(g);
        if (i == j)
            e(i, i) = -1;
        else
            e(i, j) = static_cast<long>(rng() % 5) - 2;
        m = m * e;
    }
    return GroupElement(m);
}

} // namespace

TEST_CASE("SymIntMat validation")
{
    CHECK_THROWS_AS(SymIntMat({{1, 2}, {3, 4}}), DomainError);
    CHECK_THROWS_AS(SymIntMat(IntMatrix(2, 3)), DimensionError);
    SymIntMat a{{2, 4}, {4, 6}};
    CHECK(a.content() == 2);
    CHECK(a.primitive() == SymIntMat{{1, 2}, {2, 3}});
    CHECK(same_ray(a, a.primitive()));
    CHECK_FALSE(same_ray(a, a.negated()));
}

TEST_CASE("delta_basis")
{
    auto b1 = delta_basis(1);
    REQUIRE(b1.size() == 1);
    CHECK(b1[0] == SymIntMat{{1}});
    auto b2 = delta_basis(2);
    REQUIRE(b2.size() == 3);
    CHECK(b2[0] == e11);
    CHECK(b2[1] == SymIntMat{{0, 1}, {1, 0}});
    CHECK(b2[2] == e22);
    CHECK(delta_basis(3).size() == 6);
}

TEST_CASE("coords_in_lattice")
{
    CHECK(coords_in_lattice(z12, 1) == std::vector<Integer>{1, -1, 1});
    CHECK(coords_in_lattice(e11, 1) == std::vector<Integer>{1, 0, 0});
    CHECK(coords_in_lattice(e11.scaled(3), 3) == std::vector<Integer>{1, 0, 0});
    CHECK_THROWS_AS(coords_in_lattice(e11, 3), NotInLatticeError);
    CHECK_THROWS_AS(coords_in_lattice(SymIntMat{{0, 1}, {1, 0}}, 2), NotInLatticeError);
}

TEST_CASE("MarkedCone validation")
{
    CHECK_THROWS_AS(MarkedCone(2, 1, {e11, e11.scaled(2)}), DomainError);
    CHECK_THROWS_AS(MarkedCone(2, 1, {SymIntMat{{-1, 0}, {0, 0}}}), DomainError);
    CHECK_NOTHROW(MarkedCone(2, 1, {SymIntMat{{-1, 0}, {0, 0}}}, {}, ConeValidation::structural));
    CHECK_THROWS_AS(MarkedCone(2, 2, {e11}), NotInLatticeError);
    CHECK_THROWS_AS(MarkedCone(2, 0, {e11}), DomainError);
    CHECK_THROWS_AS(MarkedCone(2, 1, {SymIntMat{{0, 0}, {0, 0}}}), DomainError);
    CHECK_THROWS(MarkedCone(2, 1, {e11, e22, z12, SymIntMat{{1, 0}, {0, 1}}}));
    CHECK_THROWS_AS(MarkedCone(2, 1, {SymIntMat{{1}}}), DimensionError);
    auto c = sigma0();
    CHECK(c.labels() == std::vector<std::string>{"e0", "e1", "e2"});
}

TEST_CASE("lattice_volume")
{
    CHECK(lattice_volume(sigma0()) == 1);
    MarkedCone doubled(2, 1, {e11.scaled(2), SymIntMat{{0, 2}, {2, 0}}, e22.scaled(2)}, {}, ConeValidation::structural);
    CHECK(lattice_volume(doubled) == 8);
    CHECK_THROWS_AS(lattice_volume(MarkedCone(2, 1, {e11, e22})), DimensionError);
    MarkedCone dependent(2, 1, {e11, e22, SymIntMat{{1, 0}, {0, 1}}});
    CHECK_THROWS_AS(lattice_volume(dependent), DegenerateError);
    CHECK(lattice_volume(principal_cone(2, 3)) == 1);
}

TEST_CASE("lattice_volume is invariant under generator permutations")
{
    auto c = sigma0();
    std::vector<std::size_t> perm{0, 1, 2};
    int seen = 0;
    do {
        CHECK(lattice_volume(c.permuted(perm)) == 1);
        ++seen;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(seen == 6);
}

TEST_CASE("is_regular")
{
    CHECK(is_regular(sigma0()));
    CHECK_FALSE(is_regular(MarkedCone(2, 1, {e11.scaled(2)})));
    CHECK(is_regular(MarkedCone(2, 1, {e11, e22})));
    CHECK_FALSE(is_regular(MarkedCone(2, 1, {SymIntMat{{1, 1}, {1, 1}}, SymIntMat{{1, -1}, {-1, 1}}})));
    CHECK_THROWS_AS(is_regular(MarkedCone(2, 1, {e11, e22, SymIntMat{{1, 0}, {0, 1}}})), DegenerateError);
    CHECK(is_regular(principal_cone(3)));
}

TEST_CASE("edge_class")
{
    CHECK(edge_class(SymIntMat{{1, 0}, {0, 1}}).kind == EdgeKind::interior);
    auto b = edge_class(e11);
    CHECK(b.kind == EdgeKind::boundary);
    CHECK(b.rank == 1);
    CHECK(edge_class(z12).rank == 1);
    CHECK(edge_class(SymIntMat{{1, 2}, {2, 1}}).kind == EdgeKind::invalid);
    auto mid = edge_class(SymIntMat{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}});
    CHECK(mid.kind == EdgeKind::boundary);
    CHECK(mid.unexpected_rank);
    CHECK_THROWS(edge_class(SymIntMat{{0, 0}, {0, 0}}));
}

TEST_CASE("gl_act examples")
{
    auto c = sigma0();
    auto same = gl_act(GroupElement{{1, 0}, {0, 1}}, c);
    CHECK(same.generators() == c.generators());
    auto swapped = gl_act(swap2, c);
    CHECK(swapped.generators() == std::vector<SymIntMat>{e22, e11, z12});
    GroupElement shear{{1, 0}, {1, 1}};
    CHECK(shear.act(e11) == SymIntMat{{1, 1}, {1, 1}});
    CHECK_THROWS_AS(GroupElement({{2, 0}, {0, 1}}), DomainError);
}

TEST_CASE("gl_act preserves volume, regularity and edge classes")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t g = 2 + trial % 2;
        auto gamma = random_unimodular(rng, g);
        auto c = principal_cone(g);
        auto image = gl_act(gamma, c);
        CHECK(lattice_volume(image) == lattice_volume(c));
        CHECK(is_regular(image));
        for (std::size_t k = 0; k < c.size(); ++k)
            CHECK(edge_class(image.generators()[k]) == edge_class(c.generators()[k]));
        SymIntMat pd = g == 2 ? SymIntMat{{2, 1}, {1, 3}} : SymIntMat{{2, 1, 0}, {1, 2, 1}, {0, 1, 2}};
        CHECK(edge_class(gamma.act(pd)) == edge_class(pd));
    }
}

TEST_CASE("cones_meet_nontrivially")
{
    auto c = sigma0();
    CHECK(cones_meet_nontrivially(c, c));
    MarkedCone neg(2, 1, {e11.negated(), e22.negated(), z12.negated()}, {}, ConeValidation::structural);
    CHECK_FALSE(cones_meet_nontrivially(c, neg));
    MarkedCone other(2, 1, {e11, SymIntMat{{1, 1}, {1, 1}}, SymIntMat{{0, 0}, {0, 1}}});
    CHECK(cones_meet_nontrivially(c, other));
    CHECK(cones_meet_nontrivially(other, c));
    MarkedCone ray(2, 1, {SymIntMat{{1, 1}, {1, 1}}});
    CHECK_FALSE(cones_meet_nontrivially(c, ray));
}

TEST_CASE("is_fan")
{
    auto c = sigma0();
    std::vector<MarkedCone> faces{c, MarkedCone(2, 1, {e11, e22}), MarkedCone(2, 1, {z12}), MarkedCone(2, 1, {e11})};
    CHECK(is_fan(faces).is_fan);

    MarkedCone overlap(2, 1, {SymIntMat{{1, 0}, {0, 1}}, SymIntMat{{2, -1}, {-1, 1}}, e22});
    std::vector<MarkedCone> bad{c, overlap};
    auto rep = is_fan(bad, 2);
    CHECK_FALSE(rep.is_fan);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].first == 0);
    CHECK(rep.violations[0].second == 1);

    std::vector<MarkedCone> equal{c, gl_act(swap2, c)};
    CHECK(is_fan(equal).is_fan);

    MarkedCone adjacent(2, 1, {e11, SymIntMat{{1, 1}, {1, 1}}, e22});
    std::vector<MarkedCone> pair{c, adjacent};
    CHECK(is_fan(pair).is_fan);
}

TEST_CASE("is_fan report does not depend on thread count")
{
    std::vector<MarkedCone> cones{sigma0(), MarkedCone(2, 1, {e11, SymIntMat{{1, 1}, {1, 1}}, e22}),
                                  MarkedCone(2, 1, {SymIntMat{{1, 0}, {0, 1}}, SymIntMat{{2, -1}, {-1, 1}}, e22}),
                                  MarkedCone(2, 1, {SymIntMat{{1, 1}, {1, 2}}, e22})};
    auto a = is_fan(cones, 1), b = is_fan(cones, 4);
    REQUIRE(a.violations.size() == b.violations.size());
    for (std::size_t i = 0; i < a.violations.size(); ++i) {
        CHECK(a.violations[i].first == b.violations[i].first);
        CHECK(a.violations[i].second == b.violations[i].second);
        CHECK(a.violations[i].witness == b.violations[i].witness);
    }
}

TEST_CASE("is_separable")
{
    std::vector<MarkedCone> cones{sigma0()};
    std::vector<GroupElement> sw{swap2};
    auto rep = is_separable(cones, sw);
    CHECK_FALSE(rep.separable);
    REQUIRE(rep.violations.size() == 1);
    std::vector<GroupElement> id{GroupElement{{1, 0}, {0, 1}}};
    CHECK(is_separable(cones, id).separable);
    std::vector<GroupElement> minus{GroupElement{{-1, 0}, {0, -1}}};
    CHECK(is_separable(cones, minus).separable);
}

TEST_CASE("Fan construction")
{
    Fan f({sigma0(), MarkedCone(2, 1, {e11, SymIntMat{{1, 1}, {1, 1}}, e22})});
    CHECK(f.rays().size() == 4);
    CHECK(f.is_regular());
    CHECK_THROWS_AS(Fan({sigma0(), principal_cone(3)}), DomainError);
    CHECK_THROWS(Fan({MarkedCone(2, 1, {e11, e22, SymIntMat{{1, 0}, {0, 1}}})}));
}

TEST_CASE("component_count")
{
    CHECK(component_count(5, 0) == 5);
    CHECK(component_count(1, 0) == 1);
    CHECK(component_count(2, 3) == 8);
    CHECK_THROWS(component_count(0, 0));
    CHECK_THROWS(component_count(1, -1));
}
