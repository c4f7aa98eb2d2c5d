#ifndef JAMESLOOP_TESTS_SUPPORT_HPP
#define JAMESLOOP_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "jamesloop/cubical.hpp"
#include "jamesloop/rational.hpp"

namespace testing
{

inline jamesloop::Rational R(const std::string& text) { return jamesloop::parse_rational(text); }

inline std::vector<jamesloop::Rational> Rs(const std::vector<std::string>& texts)
{
    return jamesloop::parse_rationals(texts);
}

inline jamesloop::FaceRef F(std::string base, std::vector<int> degens = {})
{
    return jamesloop::FaceRef{std::move(base), std::move(degens)};
}

inline jamesloop::RealizationPoint P(std::string cube, const std::vector<std::string>& coords)
{
    return jamesloop::RealizationPoint{std::move(cube), Rs(coords)};
}

// Four vertices, four edges, one square; the corner opposite the origin is
// glued consistently unless `swap_left` reverses the left edge.
inline jamesloop::CubicalSet square(bool swap_left = false)
{
    using jamesloop::Cube;
    return jamesloop::CubicalSet(
        "v00", {Cube{"v00", 0, {}}, Cube{"v10", 0, {}}, Cube{"v01", 0, {}}, Cube{"v11", 0, {}},
                Cube{"left", 1, swap_left ? std::vector{F("v01"), F("v00")} : std::vector{F("v00"), F("v01")}},
                Cube{"right", 1, {F("v10"), F("v11")}},
                Cube{"bottom", 1, {F("v00"), F("v10")}},
                Cube{"top", 1, {F("v01"), F("v11")}},
                Cube{"Q", 2, {F("left"), F("right"), F("bottom"), F("top")}}});
}

// One vertex, one edge a, one square with boundary 2a: homology of RP^2.
inline jamesloop::CubicalSet projective_plane()
{
    using jamesloop::Cube;
    return jamesloop::CubicalSet(
        "v", {Cube{"v", 0, {}}, Cube{"a", 1, {F("v"), F("v")}},
              Cube{"q", 2, {F("v", {1}), F("a"), F("a"), F("v", {1})}}});
}

} // namespace testing

#endif
