#include "jamesloop/straightening.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>

#include "jamesloop/errors.hpp"
#include "jamesloop/homology.hpp"

namespace jamesloop
{

namespace
{

void require_increasing_loop(const SuspensionSpace& space, const MoorePath& loop,
                             const char* what)
{
    if (!space.verify_directed(loop, XStructure::total))
        throw DomainError(std::string(what) + ": the path is not directed");
    if (!space.is_loop(loop))
        throw DomainError(std::string(what) + ": the path is not a loop at *");
    if (!space.is_strictly_increasing(loop))
        throw DomainError(std::string(what) + ": the loop is not strictly increasing; apply "
                                              "make_increasing first");
}

struct ExcursionShape
{
    std::optional<Rational> crossing;
    std::optional<RealizationPoint> letter;
    bool below_zero = false;
};

ExcursionShape shape_of(const SuspensionSpace& space, const MoorePath& excursion)
{
    ExcursionShape shape;
    std::vector<Rational> times = sec_times(space, excursion);
    if (times.size() > 1)
        throw DomainError("straighten: the excursion crosses the zero slice more than once");
    if (times.size() == 1)
    {
        shape.crossing = times.front();
        shape.letter = space.evaluate(excursion, times.front()).x;
        return shape;
    }
    Rational top = -1;
    for (const Segment& seg : excursion.segments)
        if (!seg.is_star())
            top = std::max(top, seg.track().h_end);
    shape.below_zero = top <= 0;
    return shape;
}

} // namespace

ChainDecomposition chain_split(const SuspensionSpace& space, const MoorePath& loop)
{
    if (!space.verify_directed(loop, XStructure::total) || !space.is_loop(loop))
        throw DomainError("chain_split: expected a directed loop at *");
    MoorePath p = space.normalize(loop);
    ChainDecomposition chain;
    chain.pauses.push_back(0);
    MoorePath run;
    auto flush = [&] {
        if (run.empty())
            return;
        chain.excursions.push_back(std::move(run));
        chain.pauses.push_back(0);
        run = {};
    };
    for (const Segment& seg : p.segments)
    {
        if (seg.is_star())
        {
            flush();
            chain.pauses.back() += seg.duration;
            continue;
        }
        const Track& tr = seg.track();
        if (space.point(tr.h_start, tr.cube, tr.c_start).star)
            flush();
        run.segments.push_back(seg);
        if (space.point(tr.h_end, tr.cube, tr.c_end).star)
            flush();
    }
    flush();
    return chain;
}

MoorePath assemble(const SuspensionSpace& space, const ChainDecomposition& chain)
{
    MoorePath out = space.star_path(chain.pauses.at(0));
    for (std::size_t i = 0; i < chain.excursions.size(); ++i)
    {
        out = space.concat(out, chain.excursions[i]);
        out = space.concat(out, space.star_path(chain.pauses.at(i + 1)));
    }
    return out;
}

MoorePath straighten_step(const SuspensionSpace& space, const MoorePath& excursion,
                          const Rational& t)
{
    if (t < 0 || t > 1)
        throw DomainError("straighten_step: t must lie in [0,1]");
    require_increasing_loop(space, excursion, "straighten_step");
    ChainDecomposition chain = chain_split(space, excursion);
    if (chain.excursions.size() != 1 || chain.pauses.front() != 0 || chain.pauses.back() != 0)
        throw DomainError("straighten_step: expected a single excursion from * to *");

    std::vector<Rational> times = sec_times(space, excursion);
    if (times.size() != 1)
        throw DomainError("straighten_step: the excursion must cross the zero slice exactly "
                          "once (found " +
                          std::to_string(times.size()) + ")");
    const Rational a = excursion.duration();
    const Rational b = times.front();
    const RealizationPoint x = space.evaluate(excursion, b).x;
    if (t == 0)
        return space.normalize(excursion);

    const Rational shrink = 1 / (1 + t);
    MoorePath lower = space.concat(space.remap_height(space.restrict(excursion, 0, b), 1, -t),
                                   space.height_ramp(x, -t, 0, b * t));
    MoorePath upper = space.concat(space.height_ramp(x, 0, t, (a - b) * t),
                                   space.remap_height(space.restrict(excursion, b, a), 1, t));
    return space.concat(space.scale_time(lower, shrink), space.scale_time(upper, shrink));
}

MoorePath uniform_deformation(const SuspensionSpace& space, const RealizationPoint& x,
                              const Rational& duration, const Rational& crossing,
                              const Rational& u)
{
    if (u < 0 || u > 1)
        throw DomainError("uniform_deformation: u must lie in [0,1]");
    if (crossing <= 0 || crossing >= duration)
        throw DomainError("uniform_deformation: crossing time must lie inside the excursion");
    const Rational& a = duration;
    const Rational& b = crossing;
    Rational rise = (1 - u) * b / 2;
    Rational cross = (1 - u) * b + u * a / 2;
    Rational top = (1 - u) * (a + b) / 2 + u * a;
    MoorePath out = space.star_path(rise);
    out = space.concat(out, space.height_ramp(x, -1, 0, cross - rise));
    out = space.concat(out, space.height_ramp(x, 0, 1, top - cross));
    return space.concat(out, space.star_path(a - top));
}

MoorePath straighten_frame(const SuspensionSpace& space, const MoorePath& loop,
                           const Rational& tau)
{
    if (tau < 0 || tau > 1)
        throw DomainError("straighten_frame: tau must lie in [0,1]");
    require_increasing_loop(space, loop, "full_straighten");
    const Rational third(1, 3);
    const Rational two_thirds(2, 3);

    ChainDecomposition chain = chain_split(space, loop);
    ChainDecomposition frame;
    const Rational shrink = tau > two_thirds ? Rational(3 - 3 * tau) : Rational(1);
    for (const Rational& pause : chain.pauses)
        frame.pauses.push_back(pause * shrink);

    for (const MoorePath& excursion : chain.excursions)
    {
        ExcursionShape shape = shape_of(space, excursion);
        const Rational a = excursion.duration();
        if (!shape.crossing)
        {
            // No letter: push the excursion into * and treat it as a pause.
            Rational t = tau <= third ? Rational(3 * tau) : Rational(1);
            MoorePath pushed = t == 1 ? space.star_path(a * shrink)
                                      : space.remap_height(excursion, 1,
                                                           shape.below_zero ? Rational(-t) : t);
            frame.excursions.push_back(std::move(pushed));
            continue;
        }
        if (tau <= third)
            frame.excursions.push_back(straighten_step(space, excursion, 3 * tau));
        else if (tau <= two_thirds)
            frame.excursions.push_back(
                uniform_deformation(space, *shape.letter, a, *shape.crossing, 3 * tau - 1));
        else
            frame.excursions.push_back(space.height_ramp(*shape.letter, -1, 1, a));
    }
    return assemble(space, frame);
}

std::vector<Rational> default_samples()
{
    return uniform_samples(5);
}

std::vector<Rational> uniform_samples(int count)
{
    if (count < 2)
        throw DomainError("at least two samples are needed");
    std::vector<Rational> out;
    for (int k = 0; k < count; ++k)
        out.emplace_back(k, count - 1);
    return out;
}

StraightenResult full_straighten(const SuspensionSpace& space, const MoorePath& loop,
                                 const std::vector<Rational>& samples)
{
    require_increasing_loop(space, loop, "full_straighten");
    StraightenResult out;
    for (const Rational& tau : samples)
        out.frames.push_back(straighten_frame(space, loop, tau));
    out.result = straighten_frame(space, loop, Rational(1));
    return out;
}

MoorePath normalize_part_durations(const SuspensionSpace& space, const MoorePath& loop)
{
    ChainDecomposition chain = chain_split(space, loop);
    MoorePath out;
    for (const MoorePath& excursion : chain.excursions)
        out = space.concat(out, space.scale_time(excursion, 2 / excursion.duration()));
    return out;
}

namespace
{

// Shortest edge path from `from` to `to` in the 1-skeleton, endpoints included.
std::vector<std::string> edge_path(const CubicalSet& base, const std::string& from,
                                   const std::string& to)
{
    std::map<std::string, std::vector<std::string>> adjacent;
    for (const std::string& e : base.cubes_of_dim(1))
    {
        std::string u = normalize_point(base, e, {Rational(0)}).cube;
        std::string v = normalize_point(base, e, {Rational(1)}).cube;
        adjacent[u].push_back(v);
        adjacent[v].push_back(u);
    }
    std::map<std::string, std::string> parent{{from, from}};
    std::deque<std::string> queue{from};
    while (!queue.empty())
    {
        std::string v = queue.front();
        queue.pop_front();
        if (v == to)
            break;
        for (const std::string& w : adjacent[v])
            if (parent.emplace(w, v).second)
                queue.push_back(w);
    }
    if (!parent.count(to))
        throw DomainError("contract_to_constant: no edge path from \"" + from +
                          "\" to the basepoint; the connectedness hypothesis (\"Suppose that "
                          "X and Y are path connected\") fails");
    std::vector<std::string> path{to};
    while (path.back() != from)
        path.push_back(parent.at(path.back()));
    return {path.rbegin(), path.rend()};
}

} // namespace

std::vector<MoorePath> contract_to_constant(const SuspensionSpace& space, const MoorePath& loop)
{
    const CubicalSet& base = space.base();
    if (betti(base, FieldSpec::rationals()).at(0) != 1)
        throw DomainError("contract_to_constant: the complex is disconnected; the "
                          "connectedness hypothesis (\"Suppose that X and Y are path "
                          "connected\") fails");
    require_increasing_loop(space, loop, "contract_to_constant");

    MoorePath start = space.normalize(loop);
    std::vector<MoorePath> trail;
    auto emit = [&trail](MoorePath frame) {
        if (trail.empty() || trail.back() != frame)
            trail.push_back(std::move(frame));
    };
    if (std::all_of(start.segments.begin(), start.segments.end(),
                    [](const Segment& s) { return s.is_star(); }))
        return {start};

    for (MoorePath& frame : full_straighten(space, start).frames)
        emit(std::move(frame));

    // After straightening the loop is beta(x_1)(s/a_1) * ... * beta(x_n)(s/a_n).
    struct Part
    {
        std::optional<RealizationPoint> letter;
        Rational duration;
    };
    std::vector<Part> parts;
    for (const MoorePath& excursion : chain_split(space, trail.back()).excursions)
        parts.push_back({space.evaluate(excursion, excursion.duration() / 2).x,
                         excursion.duration()});

    auto render = [&] {
        MoorePath out;
        for (const Part& part : parts)
            out = space.concat(out, part.letter ? space.height_ramp(*part.letter, -1, 1,
                                                                    part.duration)
                                                : space.star_path(part.duration));
        return out;
    };
    auto move_letter = [&](Part& part, const std::string& vertex) {
        if (vertex == base.basepoint())
            part.letter.reset();
        else
            part.letter = RealizationPoint{vertex, {}};
        emit(render());
    };

    for (Part& part : parts)
    {
        const RealizationPoint x = *part.letter;
        std::string vertex = minimal_vertex(base, x.cube);
        if (!x.coords.empty())
            move_letter(part, vertex);
        std::vector<std::string> route = edge_path(base, vertex, base.basepoint());
        for (std::size_t k = 1; k < route.size(); ++k)
            move_letter(part, route[k]);
    }
    return trail;
}

} // namespace jamesloop
