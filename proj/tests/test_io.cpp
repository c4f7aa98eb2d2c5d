#include <catch_amalgamated.hpp>

#include "jamesloop/corpus.hpp"
#include "jamesloop/errors.hpp"
#include "jamesloop/io.hpp"
#include "support.hpp"

using namespace jamesloop;
using testing::P;
using testing::R;

TEST_CASE("complex JSON in the documented format")
{
    Json doc = Json::parse(R"({"basepoint":"v","cubes":[{"id":"e","dim":1,"faces":{
        "d0_1":{"base":"v","degens":[]},"d1_1":{"base":"v","degens":[]}}}]})");
    CubicalSet c = complex_from_json(doc);
    CHECK(c == complexes::circle());
    CHECK(to_json(c).dump() ==
          R"({"basepoint":"v","cubes":[{"id":"v","dim":0,"faces":{}},{"id":"e","dim":1,"faces":{"d0_1":{"base":"v","degens":[]},"d1_1":{"base":"v","degens":[]}}}]})");
}

TEST_CASE("complexes round-trip")
{
    for (const CubicalSet& c : {complexes::torus(), complexes::interval(), testing::projective_plane(),
                                suspension_model(complexes::torus()).complex, testing::square(true)})
    {
        Json once = to_json(c);
        CubicalSet back = complex_from_json(once);
        CHECK(back == c);
        CHECK(to_json(back).dump() == once.dump());
    }
}

TEST_CASE("malformed complexes")
{
    auto load = [](const char* text) { return complex_from_json(Json::parse(text)); };
    CHECK_THROWS_AS(load(R"({"cubes":[]})"), ParseError);
    CHECK_THROWS_AS(load(R"({"basepoint":"v","cubes":{}})"), ParseError);
    CHECK_THROWS_AS(load(R"({"basepoint":"v","cubes":[{"id":"e","dim":-1}]})"), ParseError);
    CHECK_THROWS_AS(load(R"({"basepoint":"v","cubes":[{"id":"e","dim":1,"faces":{"d0_1":{"base":"v"}}}]})"),
                    StructureError);
    CHECK_THROWS_AS(load(R"({"basepoint":"v","cubes":[{"id":"e","dim":1,"faces":{"d0_1":{"base":"v"},"d1_1":{"base":"w"}}}]})"),
                    StructureError);
    CHECK_THROWS_AS(load(R"({"basepoint":"v","cubes":[{"id":"e","dim":1,"faces":{"d0_1":{"base":"v"},"d1_1":{"base":"v"},"d2_1":{"base":"v"}}}]})"),
                    ParseError);
    CHECK_THROWS_AS(load(R"({"basepoint":"v","cubes":[{"id":"e","dim":1,"faces":{"d0_1":{"base":"v"},"d1_2":{"base":"v"}}}]})"),
                    StructureError);
}

TEST_CASE("paths in the documented format")
{
    SuspensionSpace space(complexes::circle());
    Json doc = Json::parse(R"({"segments":[{"kind":"star","dur":"1/2"},
        {"kind":"track","dur":"2","h":["-1","1"],"cube":"e","c0":["1/4"],"c1":["1/4"]}]})");
    MoorePath p = path_from_json(doc, space.base());
    CHECK(p.duration() == R("5/2"));
    CHECK(space.evaluate(p, R("3/2")) == space.point(R("0"), P("e", {"1/4"})));
    CHECK(to_json(p).dump() ==
          R"({"segments":[{"kind":"star","dur":"1/2"},{"kind":"track","dur":"2","h":["-1","1"],"cube":"e","c0":["1/4"],"c1":["1/4"]}]})");

    // Non-canonical spellings come back canonical.
    Json loose = Json::parse(R"({"segments":[{"kind":"track","dur":"4/2","h":["-1","0.5"],"cube":"e","c0":["2/8"]}]})");
    CHECK(to_json(path_from_json(loose, space.base())).dump() ==
          R"({"segments":[{"kind":"track","dur":"2","h":["-1","1/2"],"cube":"e","c0":["1/4"],"c1":["1/4"]}]})");
}

TEST_CASE("paths and words round-trip")
{
    SuspensionSpace space(complexes::torus());
    CorpusGenerator gen(41);
    for (int k = 0; k < 30; ++k)
    {
        MoorePath p = gen.plateau_loop(space, gen.word(space.base(), 4));
        Json once = to_json(p);
        CHECK(path_from_json(once, space.base()) == p);
        CHECK(to_json(path_from_json(Json::parse(once.dump()), space.base())).dump() == once.dump());

        JamesWord w = reduce_word(space.base(), gen.word(space.base(), 5));
        CHECK(word_from_json(to_json(w), space.base()) == w);

        auto xw = gen.xprime_word(space.base(), 5);
        CHECK(xprime_word_from_json(to_json(xw), space.base()) == xw);
    }
}

TEST_CASE("malformed paths and words")
{
    CubicalSet c = complexes::circle();
    auto path = [&](const char* text) { return path_from_json(Json::parse(text), c); };
    CHECK_THROWS_AS(path(R"({"segments":[{"kind":"star","dur":"1/0"}]})"), ParseError);
    CHECK_THROWS_AS(path(R"({"segments":[{"kind":"star","dur":0.5}]})"), ParseError);
    CHECK_THROWS_AS(path(R"({"segments":[{"kind":"star","dur":"-1"}]})"), ParseError);
    CHECK_THROWS_AS(path(R"({"segments":[{"kind":"loop","dur":"1"}]})"), ParseError);
    CHECK_THROWS_AS(path(R"({"segments":[{"kind":"track","dur":"1","h":["0"],"cube":"e","c0":["1/2"]}]})"),
                    ParseError);
    CHECK_THROWS_AS(path(R"({"segments":[{"kind":"track","dur":"1","h":["0","1"],"cube":"f","c0":["1/2"]}]})"),
                    StructureError);
    CHECK_THROWS_AS(path(R"({"segments":[{"kind":"track","dur":"1","h":["0","1"],"cube":"e","c0":["3/2"]}]})"),
                    ParseError);
    CHECK_THROWS_AS(path(R"({"segments":[{"kind":"track","dur":"1","h":["0","1"],"cube":"e","c0":[]}]})"),
                    ParseError);

    CHECK(word_from_json(Json::parse(R"([{"cube":"e","coords":["1"]},{"cube":"e","coords":["1/3"]}])"), c) ==
          JamesWord{{P("e", {"1/3"})}});
    CHECK_THROWS_AS(word_from_json(Json::parse(R"([{"cube":"q","coords":[]}])"), c), StructureError);
    CHECK_THROWS_AS(word_from_json(Json::parse(R"({"cube":"e"})"), c), ParseError);
    CHECK_THROWS_AS(xprime_word_from_json(Json::parse(R"([{"interval":"2"}])"), c), ParseError);
}

TEST_CASE("summaries")
{
    CHECK(to_json(GradedDims{{{0, 1}, {1, 1}}, 1}).dump() == R"({"dims":{"0":1,"1":1}})");
    CHECK(to_json(HilbertSeries{{1, 2, 5}}).dump() == R"({"series":[1,2,5]})");
    CHECK(to_json(SuspensionPoint::basepoint()).dump() == R"({"star":true})");
    CHECK(to_json(std::vector<RelationViolation>{{"Q", 1, 2, 0, 0}}).dump() ==
          R"([{"cube":"Q","i":1,"j":2,"eps":0,"eta":0}])");
    CHECK_THROWS_AS(load_json_file("/nonexistent/file.json"), ParseError);
}
