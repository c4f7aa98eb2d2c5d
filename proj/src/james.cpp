#include "jamesloop/james.hpp"

#include <algorithm>

#include "jamesloop/errors.hpp"

namespace jamesloop
{

JamesWord reduce_word(const CubicalSet& base, std::vector<RealizationPoint> letters)
{
    std::erase_if(letters, [&](const RealizationPoint& x) { return x.cube == base.basepoint(); });
    return {std::move(letters)};
}

JamesWord multiply(const CubicalSet& base, const JamesWord& u, const JamesWord& w)
{
    std::vector<RealizationPoint> letters = u.letters;
    letters.insert(letters.end(), w.letters.begin(), w.letters.end());
    return reduce_word(base, std::move(letters));
}

MoorePath j_beta_prime(const SuspensionSpace& space, const std::vector<XPrimeLetter>& word)
{
    MoorePath out;
    for (const XPrimeLetter& letter : word)
    {
        if (const auto* x = std::get_if<RealizationPoint>(&letter))
            out = space.concat(out, space.beta(*x));
        else
        {
            const Rational& t = std::get<IntervalLetter>(letter).t;
            if (t < 0 || t > 1)
                throw DomainError("interval letter outside [0,1]");
            out = space.concat(out, space.star_path(2 * t));
        }
    }
    return out;
}

JamesWord j_retract(const CubicalSet& base, const std::vector<XPrimeLetter>& word)
{
    std::vector<RealizationPoint> letters;
    for (const XPrimeLetter& letter : word)
        if (const auto* x = std::get_if<RealizationPoint>(&letter))
            letters.push_back(*x);
    return reduce_word(base, std::move(letters));
}

namespace
{

struct Crossing
{
    Rational time;
    RealizationPoint x;
};

std::vector<Crossing> crossings(const SuspensionSpace& space, const MoorePath& loop)
{
    if (!space.verify_directed(loop, XStructure::total))
        throw DomainError("sec: the path is not directed");
    if (!space.is_loop(loop))
        throw DomainError("sec: the path is not a loop at *");
    MoorePath p = space.normalize(loop);
    std::vector<Crossing> out;
    Rational offset = 0;
    for (const Segment& seg : p.segments)
    {
        if (!seg.is_star())
        {
            const Track& tr = seg.track();
            if (tr.h_start == 0 && tr.h_end == 0)
                throw DomainError("sec: the loop rests on the zero slice over an interval; "
                                  "apply make_increasing first");
            if (tr.h_start <= 0 && tr.h_end >= 0)
            {
                Rational local = -tr.h_start / (tr.h_end - tr.h_start) * seg.duration;
                Rational time = offset + local;
                SuspensionPoint pt = space.evaluate(MoorePath{{seg}}, local);
                if (!pt.star && (out.empty() || out.back().time != time))
                    out.push_back({time, pt.x});
            }
        }
        offset += seg.duration;
    }
    return out;
}

} // namespace

JamesWord sec(const SuspensionSpace& space, const MoorePath& loop)
{
    std::vector<RealizationPoint> letters;
    for (auto& c : crossings(space, loop))
        letters.push_back(std::move(c.x));
    return reduce_word(space.base(), std::move(letters));
}

std::vector<Rational> sec_times(const SuspensionSpace& space, const MoorePath& loop)
{
    std::vector<Rational> times;
    for (const auto& c : crossings(space, loop))
        times.push_back(c.time);
    return times;
}

} // namespace jamesloop
