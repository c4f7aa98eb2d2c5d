#include <catch_amalgamated.hpp>

#include "jamesloop/corpus.hpp"
#include "jamesloop/errors.hpp"
#include "jamesloop/james.hpp"
#include "support.hpp"

using namespace jamesloop;
using testing::P;
using testing::R;
using testing::Rs;

TEST_CASE("word reduction and the monoid law")
{
    CubicalSet c = complexes::circle();
    RealizationPoint x0 = P("v", {}), x = P("e", {"1/3"}), y = P("e", {"1/2"});
    CHECK(reduce_word(c, {x0, x, x0}) == JamesWord{{x}});
    CHECK(multiply(c, JamesWord{{x}}, JamesWord{{y}}) == JamesWord{{x, y}});
    CHECK(multiply(c, JamesWord{{x, y}}, JamesWord{}) == JamesWord{{x, y}});
    CHECK(multiply(c, JamesWord{}, JamesWord{{y}}) == JamesWord{{y}});
    JamesWord a{{x}}, b{{y, x}}, d{{y}};
    CHECK(multiply(c, multiply(c, a, b), d) == multiply(c, a, multiply(c, b, d)));
}

TEST_CASE("J(beta') and J(r)")
{
    SuspensionSpace space(complexes::circle());
    RealizationPoint x1 = P("e", {"1/3"}), x2 = P("e", {"2/3"});
    MoorePath two = j_beta_prime(space, {x1, x2});
    CHECK(two.duration() == 4);
    CHECK(sec_times(space, two) == std::vector<Rational>{R("1"), R("3")});
    CHECK(sec(space, two) == JamesWord{{x1, x2}});

    CHECK(j_beta_prime(space, {IntervalLetter{R("1/2")}}) == space.star_path(R("1")));
    CHECK(j_beta_prime(space, {}).empty());
    CHECK(j_beta_prime(space, {P("v", {})}) == space.star_path(R("2")));
    CHECK_THROWS_AS(j_beta_prime(space, {IntervalLetter{R("2")}}), DomainError);

    const CubicalSet& b = space.base();
    CHECK(j_retract(b, {x1, IntervalLetter{R("0.3")}, x2}) == JamesWord{{x1, x2}});
    CHECK(j_retract(b, {IntervalLetter{R("0")}, IntervalLetter{R("1")}}) == JamesWord{});
    CHECK(j_retract(b, {P("v", {})}) == JamesWord{});
}

TEST_CASE("sec reads the zero-slice crossings")
{
    SuspensionSpace space(complexes::torus());
    CHECK(sec(space, space.star_path(R("3"))) == JamesWord{});
    CHECK(sec(space, MoorePath{}) == JamesWord{});

    // A crossing exactly at a segment junction is read once.
    RealizationPoint x = P("e|e", {"1/2", "1/2"});
    MoorePath split = space.concat(space.height_ramp(x, R("-1"), R("0"), R("1")),
                                   space.height_ramp(x, R("0"), R("1"), R("3")));
    CHECK(sec(space, split) == JamesWord{{x}});
    CHECK(sec_times(space, split) == std::vector<Rational>{R("1")});

    // Moving x: the letter is the x at the crossing time.
    MoorePath moving{{Segment{R("2"), Track{R("-1"), R("1"), "e|e", Rs({"1/4", "1/4"}),
                                            Rs({"3/4", "1/2"})}}}};
    CHECK(sec(space, moving) == JamesWord{{P("e|e", {"1/2", "3/8"})}});

    // Crossing while x sits at the basepoint of B contributes no letter.
    MoorePath through{{Segment{R("2"), Track{R("-1"), R("1"), "e|v", Rs({"0"}), Rs({"1/2"})}}}};
    CHECK(sec(space, through) == JamesWord{{P("e|v", {"1/4"})}});
    MoorePath at_base{{Segment{R("1"), Track{R("-1"), R("0"), "v|v", {}, {}}},
                       Segment{R("1"), Track{R("0"), R("1"), "v|v", {}, {}}}}};
    CHECK(sec(space, at_base) == JamesWord{});

    CHECK_THROWS_AS(sec(space, space.make_beta(x, R("-1"), R("0"))), DomainError);
}

TEST_CASE("sec o J(beta') = J(r) on random words")
{
    CorpusGenerator gen(21);
    for (const CubicalSet& base : {complexes::circle(), complexes::wedge_of_circles(3),
                                   complexes::torus(), complexes::interval()})
    {
        SuspensionSpace space(base);
        std::size_t letters = 0;
        for (int k = 0; k < 40; ++k)
        {
            auto word = gen.xprime_word(base, 6);
            JamesWord expected = j_retract(base, word);
            letters += expected.size();
            CHECK(sec(space, j_beta_prime(space, word)) == expected);
        }
        CHECK(letters > 40);
    }
}

TEST_CASE("sec is multiplicative and reparametrization invariant")
{
    CorpusGenerator gen(22);
    SuspensionSpace space(complexes::wedge_of_circles(2));
    for (int k = 0; k < 40; ++k)
    {
        auto wa = gen.word(space.base(), 4), wb = gen.word(space.base(), 4);
        MoorePath a = gen.increasing_loop(space, wa), b = gen.plateau_loop(space, wb);
        CHECK(sec(space, a) == reduce_word(space.base(), wa));
        CHECK(sec(space, b) == reduce_word(space.base(), wb));
        CHECK(sec(space, space.concat(a, b)) ==
              multiply(space.base(), sec(space, a), sec(space, b)));
        CHECK(sec(space, space.reparam(b, gen.time_map(space, b))) == sec(space, b));
        for (const char* eps : {"1/4", "1/2"})
            CHECK(sec(space, space.make_increasing(b, R(eps))) == sec(space, b));
    }
}

TEST_CASE("discrete structure: J(beta') o sec traces the same points")
{
    // Tracks constant in x: the loop and J(beta')(sec) visit the same points
    // in the same order.
    CorpusGenerator gen(23);
    SuspensionSpace space(complexes::torus());
    for (int k = 0; k < 20; ++k)
    {
        std::vector<XPrimeLetter> word;
        for (const auto& x : gen.word(space.base(), 4))
            word.emplace_back(x);
        MoorePath loop = j_beta_prime(space, word);
        // Random nondecreasing reparametrization of the concatenation.
        MoorePath slow = space.reparam(loop, gen.time_map(space, loop));
        JamesWord w = sec(space, slow);
        MoorePath rebuilt = j_beta_prime(space, {w.letters.begin(), w.letters.end()});
        CHECK(rebuilt == loop);
    }
}
