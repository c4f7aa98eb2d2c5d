#include <algorithm>
#include <map>
#include <random>

#include <catch_amalgamated.hpp>

#include "jamesloop/corpus.hpp"
#include "jamesloop/cubical.hpp"
#include "jamesloop/errors.hpp"
#include "support.hpp"

using namespace jamesloop;
using testing::F;
using testing::P;
using testing::R;
using testing::Rs;

namespace
{

std::vector<std::size_t> counts(const CubicalSet& k)
{
    std::vector<std::size_t> out;
    for (int n = 0; n <= k.top_dim(); ++n)
        out.push_back(k.cubes_of_dim(n).size());
    return out;
}

CubicalSet three_vertex_interval()
{
    return CubicalSet("v-", {Cube{"v-", 0, {}}, Cube{"m", 0, {}}, Cube{"v+", 0, {}},
                             Cube{"i-", 1, {F("v-"), F("m")}}, Cube{"i+", 1, {F("m"), F("v+")}}});
}

} // namespace

TEST_CASE("circle and square presentations validate")
{
    CHECK(validate(complexes::circle()).empty());
    CHECK(validate(testing::square()).empty());
    CHECK(validate(complexes::torus()).empty());
    CHECK(validate(testing::projective_plane()).empty());
}

TEST_CASE("a swapped corner is reported with its indices")
{
    auto report = validate(testing::square(true));
    REQUIRE_FALSE(report.empty());
    CHECK(std::find(report.begin(), report.end(), RelationViolation{"Q", 1, 2, 0, 0}) !=
          report.end());
    for (const auto& v : report)
    {
        CHECK(v.cube == "Q");
        CHECK(v.i == 1);
        CHECK(v.j == 2);
    }
}

TEST_CASE("structural errors are distinct from relation violations")
{
    CHECK_THROWS_AS(CubicalSet("v", {Cube{"v", 0, {}}, Cube{"e", 1, {F("v"), F("w")}}}),
                    StructureError);
    // Face of the wrong dimension.
    CHECK_THROWS_AS(CubicalSet("v", {Cube{"v", 0, {}}, Cube{"e", 1, {F("v"), F("v")}},
                                     Cube{"q", 2, {F("v"), F("e"), F("e"), F("e")}}}),
                    StructureError);
    // Degeneracy word not strictly decreasing.
    CHECK_THROWS_AS(CubicalSet("v", {Cube{"v", 0, {}}, Cube{"e", 1, {F("v"), F("v")}},
                                     Cube{"c", 3,
                                          {F("v", {1, 2}), F("v", {1, 2}), F("e", {1}), F("e", {1}),
                                           F("e", {1}), F("e", {1})}}}),
                    StructureError);
    CHECK_THROWS_AS(CubicalSet("x", {Cube{"v", 0, {}}}), StructureError);
    CHECK_THROWS_AS(CubicalSet("v", {Cube{"v", 0, {}}, Cube{"v", 0, {}}}), StructureError);
}

TEST_CASE("faces of degenerate cells compose through the dummy coordinates")
{
    CubicalSet c = complexes::circle();
    // s_1 e is a square whose first coordinate is a dummy.
    FaceRef cell = F("e", {1});
    CHECK(c.face(cell, 1, 0) == F("e"));
    CHECK(c.face(cell, 1, 1) == F("e"));
    CHECK(c.face(cell, 2, 0) == F("v", {1}));
    CHECK(c.face(cell, 2, 1) == F("v", {1}));
    CHECK(c.dim(F("v", {2, 1})) == 2);
}

TEST_CASE("tensor products")
{
    CubicalSet torus = complexes::torus();
    CHECK(counts(torus) == std::vector<std::size_t>{1, 2, 1});
    const Cube& q = torus.cube("e|e");
    CHECK(q.face(1, 0) == F("v|e"));
    CHECK(q.face(2, 1) == F("e|v"));

    CubicalSet unit = tensor_product(complexes::point(), complexes::wedge_of_circles(2));
    CHECK(counts(unit) == std::vector<std::size_t>{1, 2});
    CHECK(unit.cube("v|e2").face(1, 1) == F("v|v"));

    CubicalSet ec = tensor_product(three_vertex_interval(), complexes::circle());
    CHECK(counts(ec) == std::vector<std::size_t>{3, 5, 2});
    CHECK(validate(ec).empty());
}

TEST_CASE("tensor products of valid complexes validate")
{
    std::vector<CubicalSet> corpus{complexes::point(), complexes::interval(), complexes::circle(),
                                   complexes::wedge_of_circles(3), testing::square(),
                                   testing::projective_plane()};
    for (const auto& a : corpus)
        for (const auto& b : corpus)
            CHECK(validate(tensor_product(a, b)).empty());
    CHECK(validate(tensor_product(complexes::torus(), testing::projective_plane())).empty());
}

TEST_CASE("quotient collapse")
{
    CubicalSet circle = quotient_collapse(complexes::interval(), {"v0", "v1"});
    CHECK(counts(circle) == std::vector<std::size_t>{1, 1});
    CHECK(circle.basepoint() == "*");
    CHECK(circle.cube("e").face(1, 0) == F("*"));
    CHECK(validate(circle).empty());

    CubicalSet torus = complexes::torus();
    SubComplex all;
    for (const Cube& c : torus.cubes())
        all.insert(c.id);
    CHECK(counts(quotient_collapse(torus, all)) == std::vector<std::size_t>{1});

    // Collapsing an edge turns the squares touching it into degenerate faces.
    CubicalSet sq = quotient_collapse(testing::square(), {"v00", "v10", "bottom"});
    CHECK(sq.cube("Q").face(2, 0) == F("*", {1}));
    CHECK(validate(sq).empty());

    CHECK_THROWS_AS(quotient_collapse(complexes::interval(), {"e"}), DomainError);
    CHECK_THROWS_AS(quotient_collapse(complexes::interval(), {}), DomainError);
}

TEST_CASE("suspension model")
{
    SuspensionModel m = suspension_model(complexes::circle());
    CHECK(counts(m.complex) == std::vector<std::size_t>{1, 1, 2});
    CHECK(m.star == "*");
    CHECK(m.complex.basepoint() == "*");
    CHECK(m.minus == SubComplex{"*", "i-|e", "m|e"});
    CHECK(m.plus == SubComplex{"*", "i+|e", "m|e"});
    CHECK(validate(m.complex).empty());

    CHECK(counts(suspension_model(complexes::point()).complex) == std::vector<std::size_t>{1});
    CHECK(validate(suspension_model(complexes::torus()).complex).empty());
}

TEST_CASE("normalize_point")
{
    CubicalSet c = complexes::circle();
    CHECK(normalize_point(c, "e", Rs({"0"})) == P("v", {}));
    CHECK(normalize_point(c, "e", Rs({"1"})) == P("v", {}));
    CHECK(normalize_point(c, "e", Rs({"1/3"})) == P("e", {"1/3"}));
    CubicalSet t = complexes::torus();
    CHECK(normalize_point(t, "e|e", Rs({"1/2", "1"})) == P("e|v", {"1/2"}));
    CHECK(normalize_point(t, "e|e", Rs({"0", "1/4"})) == P("v|e", {"1/4"}));
    CHECK(normalize_point(t, "e|e", Rs({"1", "0"})) == P("v|v", {}));
    CHECK(is_canonical(t, P("e|e", {"1/2", "1/3"})));
    CHECK_FALSE(is_canonical(t, P("e|e", {"1/2", "1"})));
    CHECK_THROWS_AS(normalize_point(t, "e|e", Rs({"1/2"})), DomainError);
}

TEST_CASE("normalize_point is idempotent and independent of the stripping order")
{
    SuspensionModel model = suspension_model(complexes::torus());
    const CubicalSet& k = model.complex;
    std::mt19937_64 rng(7);
    const std::vector<Rational> levels{R("0"), R("1"), R("1/2"), R("1/3")};
    for (int rep = 0; rep < 300; ++rep)
    {
        const Cube& c = k.cubes()[rng() % k.cubes().size()];
        std::vector<Rational> coords;
        for (int j = 0; j < c.dim; ++j)
            coords.push_back(levels[rng() % levels.size()]);
        RealizationPoint canonical = normalize_point(k, c.id, coords);
        REQUIRE(is_canonical(k, canonical));
        CHECK(normalize_point(k, canonical.cube, canonical.coords) == canonical);

        FaceRef cell{c.id, {}};
        std::vector<Rational> cs = coords;
        for (;;)
        {
            std::vector<std::size_t> boundary;
            for (std::size_t j = 0; j < cs.size(); ++j)
                if (cs[j] == 0 || cs[j] == 1)
                    boundary.push_back(j);
            if (boundary.empty())
                break;
            detail::strip_coordinate(k, cell, cs, boundary[rng() % boundary.size()]);
        }
        detail::drop_degenerate(cell, cs);
        CHECK(RealizationPoint{cell.base, cs} == canonical);
    }
}

TEST_CASE("collapse r and the neighborhood A")
{
    CHECK(collapse_coordinate(R("0.2")) == 0);
    CHECK(collapse_coordinate(R("0.9")) == 1);
    CHECK(collapse_coordinate(R("0.5")) == R("1/2"));
    CHECK(collapse_coordinate(R("1/3")) == 0);
    CHECK(collapse_coordinate(R("2/3")) == 1);
    CHECK(collapse_coordinate(R("0.4")) == R("1/5"));

    // Monotone, symmetric about 1/2, and the identity on {0, 1/2, 1}.
    Rational prev(0);
    for (int num = 0; num <= 60; ++num)
    {
        Rational s(num, 60);
        Rational r = collapse_coordinate(s);
        CHECK(r >= prev);
        CHECK(collapse_coordinate(1 - s) == 1 - r);
        prev = r;
    }

    SuspensionModel m = suspension_model(complexes::circle());
    CHECK(in_A(m.complex, P("i-|e", {"0.95", "1/2"}), m.plus));
    CHECK_FALSE(in_A(m.complex, P("i-|e", {"1/2", "1/2"}), m.plus));
    CHECK(in_A(m.complex, P("i+|e", {"1/2", "1/2"}), m.plus));
    CHECK(r_collapse(m.complex, P("i-|e", {"0.95", "1/2"})) == P("m|e", {"1/2"}));
    CHECK(r_collapse(m.complex, P("i-|e", {"1/2", "0.1"})) == P("*", {}));

    CubicalSet c = complexes::circle();
    CHECK(in_A(c, P("e", {"1/4"}), {"v"}));
    CHECK_FALSE(in_A(c, P("e", {"1/2"}), {"v"}));
    CHECK(minimal_vertex(c, "e") == "v");
    CHECK(minimal_vertex(complexes::interval(), "e") == "v0");
}
