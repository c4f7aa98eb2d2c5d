#include "jamesloop/corpus.hpp"

#include <algorithm>

#include "jamesloop/errors.hpp"

namespace jamesloop
{

namespace complexes
{

namespace
{
FaceRef ref(std::string base) { return FaceRef{std::move(base), {}}; }
} // namespace

CubicalSet point() { return CubicalSet("v", {Cube{"v", 0, {}}}); }

CubicalSet interval()
{
    return CubicalSet("v0", {Cube{"v0", 0, {}}, Cube{"v1", 0, {}}, Cube{"e", 1, {ref("v0"), ref("v1")}}});
}

CubicalSet circle() { return wedge_of_circles(1); }

CubicalSet wedge_of_circles(int count)
{
    std::vector<Cube> cubes{Cube{"v", 0, {}}};
    for (int k = 1; k <= count; ++k)
        cubes.push_back(Cube{count == 1 ? "e" : "e" + std::to_string(k), 1, {ref("v"), ref("v")}});
    return CubicalSet("v", std::move(cubes));
}

CubicalSet torus() { return tensor_product(circle(), circle()); }

CubicalSet two_points() { return CubicalSet("a", {Cube{"a", 0, {}}, Cube{"b", 0, {}}}); }

CubicalSet two_components()
{
    return CubicalSet("v", {Cube{"v", 0, {}}, Cube{"e", 1, {ref("v"), ref("v")}}, Cube{"w", 0, {}}});
}

} // namespace complexes

Rational CorpusGenerator::open_unit()
{
    auto den = static_cast<long>(2 + below(11));
    auto num = static_cast<long>(1 + below(static_cast<std::uint64_t>(den - 1)));
    return Rational(num, den);
}

Rational CorpusGenerator::duration()
{
    return Rational(static_cast<long>(1 + below(8)), static_cast<long>(1 + below(4)));
}

Rational CorpusGenerator::between(const Rational& a, const Rational& b)
{
    return Rational(a + (b - a) * open_unit());
}

RealizationPoint CorpusGenerator::letter(const CubicalSet& base)
{
    std::vector<const Cube*> candidates;
    for (const Cube& c : base.cubes())
        if (c.id != base.basepoint())
            candidates.push_back(&c);
    if (candidates.empty())
        throw DomainError("the complex has no points off the basepoint");
    const Cube& c = *candidates[below(candidates.size())];
    std::vector<Rational> coords;
    for (int k = 0; k < c.dim; ++k)
        coords.push_back(open_unit());
    return RealizationPoint{c.id, std::move(coords)};
}

std::vector<RealizationPoint> CorpusGenerator::word(const CubicalSet& base, std::size_t max_length)
{
    std::size_t n = below(max_length + 1);
    std::vector<RealizationPoint> out;
    for (std::size_t k = 0; k < n; ++k)
        out.push_back(letter(base));
    return out;
}

std::vector<XPrimeLetter> CorpusGenerator::xprime_word(const CubicalSet& base, std::size_t max_length)
{
    std::size_t n = below(max_length + 1);
    std::vector<XPrimeLetter> out;
    for (std::size_t k = 0; k < n; ++k)
    {
        if (below(4) == 0)
            out.emplace_back(IntervalLetter{below(3) == 0 ? Rational(1) : open_unit()});
        else
            out.emplace_back(letter(base));
    }
    return out;
}

namespace
{

// Componentwise x + (target - x) * s, which stays inside (0,1).
std::vector<Rational> drift(const std::vector<Rational>& x, const Rational& target, const Rational& s)
{
    std::vector<Rational> out;
    for (const Rational& c : x)
        out.push_back(Rational(c + (target - c) * s));
    return out;
}

Segment track(const Rational& duration, const Rational& h0, const Rational& h1, const std::string& cube,
              std::vector<Rational> c0, std::vector<Rational> c1)
{
    return Segment{duration, Track{h0, h1, cube, std::move(c0), std::move(c1)}};
}

} // namespace

MoorePath CorpusGenerator::excursion(const SuspensionSpace& space, const RealizationPoint& x,
                                     bool plateaus)
{
    // x moves only while |h| >= 1/2, monotonically in every coordinate:
    // low -> x on the way up from -1, x -> high after 1/2.
    std::vector<Rational> low = drift(x.coords, Rational(0), Rational(open_unit() / 2));
    std::vector<Rational> high = drift(x.coords, Rational(1), Rational(open_unit() / 2));
    const Rational half(1, 2);
    std::vector<Segment> segs;

    if (plateaus)
    {
        Rational level = between(-1, -half);
        std::vector<Rational> a = low, b = x.coords;
        std::vector<Rational> p1, p2;
        for (std::size_t k = 0; k < a.size(); ++k)
        {
            p1.push_back(Rational(a[k] + (b[k] - a[k]) / 3));
            p2.push_back(Rational(a[k] + 2 * (b[k] - a[k]) / 3));
        }
        segs.push_back(track(duration(), -1, level, x.cube, low, p1));
        segs.push_back(track(duration(), level, level, x.cube, p1, p2));
        segs.push_back(track(duration(), level, -half, x.cube, p2, x.coords));
    }
    else
        segs.push_back(track(duration(), -1, -half, x.cube, low, x.coords));

    Rational below_zero = between(-half, 0);
    segs.push_back(track(duration(), -half, below_zero, x.cube, x.coords, x.coords));
    segs.push_back(track(duration(), below_zero, 0, x.cube, x.coords, x.coords));
    Rational above_zero = between(0, half);
    if (plateaus)
    {
        segs.push_back(track(duration(), 0, above_zero, x.cube, x.coords, x.coords));
        segs.push_back(track(duration(), above_zero, above_zero, x.cube, x.coords, x.coords));
        segs.push_back(track(duration(), above_zero, half, x.cube, x.coords, x.coords));
    }
    else
    {
        segs.push_back(track(duration(), 0, above_zero, x.cube, x.coords, x.coords));
        segs.push_back(track(duration(), above_zero, half, x.cube, x.coords, x.coords));
    }
    segs.push_back(track(duration(), half, 1, x.cube, x.coords, high));
    return space.normalize(MoorePath{std::move(segs)});
}

MoorePath CorpusGenerator::increasing_loop(const SuspensionSpace& space,
                                           const std::vector<RealizationPoint>& word)
{
    MoorePath loop;
    for (const RealizationPoint& x : word)
    {
        if (coin())
            loop = space.concat(loop, space.star_path(duration()));
        loop = space.concat(loop, excursion(space, x, false));
    }
    if (coin())
        loop = space.concat(loop, space.star_path(duration()));
    return loop;
}

MoorePath CorpusGenerator::plateau_loop(const SuspensionSpace& space,
                                        const std::vector<RealizationPoint>& word)
{
    MoorePath loop;
    for (const RealizationPoint& x : word)
    {
        if (coin())
            loop = space.concat(loop, space.star_path(duration()));
        loop = space.concat(loop, excursion(space, x, true));
    }
    return loop;
}

TimeMap CorpusGenerator::time_map(const SuspensionSpace& space, const MoorePath& path)
{
    const Rational total = path.duration();
    TimeMap map;
    map.breakpoints.emplace_back(Rational(0), Rational(0));
    if (total == 0)
    {
        map.breakpoints.emplace_back(duration(), Rational(0));
        return map;
    }
    std::vector<Rational> us;
    std::size_t knots = below(4);
    for (std::size_t k = 0; k < knots; ++k)
        us.push_back(Rational(total * open_unit()));
    std::sort(us.begin(), us.end());
    us.erase(std::unique(us.begin(), us.end()), us.end());

    Rational s(0);
    for (const Rational& u : us)
    {
        s += duration();
        map.breakpoints.emplace_back(s, u);
        // A pause is allowed anywhere except on the zero slice.
        SuspensionPoint p = space.evaluate(path, u);
        if (coin() && (p.star || p.h != 0))
        {
            s += duration();
            map.breakpoints.emplace_back(s, u);
        }
    }
    s += duration();
    map.breakpoints.emplace_back(s, total);
    return map;
}

} // namespace jamesloop
