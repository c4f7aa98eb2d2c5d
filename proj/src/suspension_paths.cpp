#include "jamesloop/suspension_paths.hpp"

#include <algorithm>

#include "jamesloop/errors.hpp"

namespace jamesloop
{

namespace
{

Rational lerp(const Rational& a, const Rational& b, const Rational& frac)
{
    return a + (b - a) * frac;
}

std::vector<Rational> lerp(const std::vector<Rational>& a, const std::vector<Rational>& b,
                           const Rational& frac)
{
    std::vector<Rational> out;
    out.reserve(a.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        out.push_back(lerp(a[k], b[k], frac));
    return out;
}

bool is_boundary(const Rational& s)
{
    return s == 0 || s == 1;
}

// Local times in (0, duration) at which an affine quantity from `from` to
// `to` takes the value `level`.
void add_level_crossing(std::vector<Rational>& times, const Rational& from, const Rational& to,
                        const Rational& duration, const Rational& level)
{
    if (from == to)
        return;
    Rational tau = (level - from) / (to - from) * duration;
    if (tau > 0 && tau < duration)
        times.push_back(tau);
}

void sort_unique(std::vector<Rational>& v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

Rational MoorePath::duration() const
{
    Rational total = 0;
    for (const Segment& s : segments)
        total += s.duration;
    return total;
}

SuspensionSpace::SuspensionSpace(CubicalSet base)
    : base_(std::make_shared<const CubicalSet>(std::move(base)))
{
    model_ = std::make_shared<const SuspensionModel>(suspension_model(*base_));
}

SuspensionPoint SuspensionSpace::point(const Rational& h, const RealizationPoint& x) const
{
    if (h <= -1 || h >= 1 || x.cube == base_->basepoint())
        return SuspensionPoint::basepoint();
    if (!is_canonical(*base_, x))
        return point(h, x.cube, x.coords);
    return {false, h, x};
}

SuspensionPoint SuspensionSpace::point(const Rational& h, std::string_view cube,
                                       std::vector<Rational> coords) const
{
    RealizationPoint x = normalize_point(*base_, cube, std::move(coords));
    if (h <= -1 || h >= 1 || x.cube == base_->basepoint())
        return SuspensionPoint::basepoint();
    return {false, h, std::move(x)};
}

SuspensionPoint SuspensionSpace::track_point(const Track& track, const Rational& duration,
                                             const Rational& local) const
{
    Rational frac = duration == 0 ? Rational(0) : Rational(local / duration);
    return point(lerp(track.h_start, track.h_end, frac), track.cube,
                 lerp(track.c_start, track.c_end, frac));
}

Track SuspensionSpace::sub_track(const Track& track, const Rational& duration,
                                 const Rational& from, const Rational& to) const
{
    Rational f0 = from / duration;
    Rational f1 = to / duration;
    return {lerp(track.h_start, track.h_end, f0), lerp(track.h_start, track.h_end, f1),
            track.cube, lerp(track.c_start, track.c_end, f0),
            lerp(track.c_start, track.c_end, f1)};
}

namespace
{

void push_star(std::vector<Segment>& out, const Rational& duration)
{
    if (!out.empty() && out.back().is_star())
        out.back().duration += duration;
    else
        out.push_back({duration, StarBody{}});
}

bool same_velocity(const Rational& a0, const Rational& a1, const Rational& da,
                   const Rational& b0, const Rational& b1, const Rational& db)
{
    return (a1 - a0) * db == (b1 - b0) * da;
}

void push_track(std::vector<Segment>& out, Track track, const Rational& duration)
{
    if (!out.empty() && !out.back().is_star())
    {
        Segment& last = out.back();
        Track& prev = std::get<Track>(last.body);
        bool mergeable = prev.cube == track.cube && prev.h_end == track.h_start &&
                         prev.c_end == track.c_start &&
                         same_velocity(prev.h_start, prev.h_end, last.duration, track.h_start,
                                       track.h_end, duration);
        for (std::size_t k = 0; mergeable && k < track.c_start.size(); ++k)
            mergeable = same_velocity(prev.c_start[k], prev.c_end[k], last.duration,
                                      track.c_start[k], track.c_end[k], duration);
        if (mergeable)
        {
            prev.h_end = std::move(track.h_end);
            prev.c_end = std::move(track.c_end);
            last.duration += duration;
            return;
        }
    }
    out.push_back({duration, std::move(track)});
}

} // namespace

void SuspensionSpace::append_normalized(std::vector<Segment>& out, const Segment& seg) const
{
    if (seg.duration < 0)
        throw DomainError("segment with negative duration");
    if (seg.duration == 0)
        return;
    if (seg.is_star())
    {
        push_star(out, seg.duration);
        return;
    }
    const Track& tr = seg.track();
    const Rational& d = seg.duration;
    const int dim = base_->dim(tr.cube);
    if (static_cast<int>(tr.c_start.size()) != dim || static_cast<int>(tr.c_end.size()) != dim)
        throw DomainError("track in \"" + tr.cube + "\" needs " + std::to_string(dim) +
                          " coordinates");
    for (std::size_t k = 0; k < tr.c_start.size(); ++k)
        if (tr.c_start[k] < 0 || tr.c_start[k] > 1 || tr.c_end[k] < 0 || tr.c_end[k] > 1)
            throw DomainError("track coordinate outside [0,1] in \"" + tr.cube + "\"");

    std::vector<Rational> cuts{Rational(0), d};
    add_level_crossing(cuts, tr.h_start, tr.h_end, d, Rational(-1));
    add_level_crossing(cuts, tr.h_start, tr.h_end, d, Rational(1));
    sort_unique(cuts);

    for (std::size_t k = 0; k + 1 < cuts.size(); ++k)
    {
        const Rational piece_duration = cuts[k + 1] - cuts[k];
        Track piece = sub_track(tr, d, cuts[k], cuts[k + 1]);
        Rational mid = (piece.h_start + piece.h_end) / 2;
        if (mid <= -1 || mid >= 1)
        {
            push_star(out, piece_duration);
            continue;
        }
        // Coordinates pinned at 0 or 1 move the track into a face.
        for (;;)
        {
            std::size_t pinned = piece.c_start.size();
            for (std::size_t c = 0; c < piece.c_start.size(); ++c)
                if (piece.c_start[c] == piece.c_end[c] && is_boundary(piece.c_start[c]))
                {
                    pinned = c;
                    break;
                }
            if (pinned == piece.c_start.size())
                break;
            FaceRef cell{piece.cube, {}};
            std::vector<Rational> end = piece.c_end;
            detail::strip_coordinate(*base_, cell, piece.c_start, pinned);
            end.erase(end.begin() + static_cast<std::ptrdiff_t>(pinned));
            FaceRef cell_copy = cell;
            detail::drop_degenerate(cell, piece.c_start);
            detail::drop_degenerate(cell_copy, end);
            piece.c_end = std::move(end);
            piece.cube = cell.base;
        }
        if (piece.cube == base_->basepoint())
            push_star(out, piece_duration);
        else
            push_track(out, std::move(piece), piece_duration);
    }
}

MoorePath SuspensionSpace::normalize(const MoorePath& path) const
{
    MoorePath out;
    for (const Segment& seg : path.segments)
        append_normalized(out.segments, seg);
    return out;
}

MoorePath SuspensionSpace::star_path(const Rational& duration) const
{
    if (duration < 0)
        throw DomainError("negative duration");
    MoorePath p;
    if (duration > 0)
        p.segments.push_back({duration, StarBody{}});
    return p;
}

Segment SuspensionSpace::constant_segment(const SuspensionPoint& p, const Rational& duration) const
{
    if (p.star)
        return {duration, StarBody{}};
    return {duration, Track{p.h, p.h, p.x.cube, p.x.coords, p.x.coords}};
}

MoorePath SuspensionSpace::constant(const SuspensionPoint& p, const Rational& duration) const
{
    if (duration < 0)
        throw DomainError("negative duration");
    return normalize(MoorePath{{constant_segment(p, duration)}});
}

MoorePath SuspensionSpace::height_ramp(const RealizationPoint& x, const Rational& a,
                                       const Rational& b, const Rational& duration) const
{
    if (a > b)
        throw DomainError("height ramp must be nondecreasing");
    if (duration < 0 || (duration == 0 && a != b))
        throw DomainError("height ramp needs a positive duration");
    MoorePath p;
    if (duration > 0)
        p.segments.push_back({duration, Track{a, b, x.cube, x.coords, x.coords}});
    return normalize(p);
}

MoorePath SuspensionSpace::make_beta(const RealizationPoint& x, const Rational& a,
                                     const Rational& b) const
{
    if (a >= b)
        throw DomainError("make_beta: need a < b, got a = " + format_rational(a) +
                          ", b = " + format_rational(b));
    return height_ramp(x, a, b, b - a);
}

MoorePath SuspensionSpace::beta(const RealizationPoint& x) const
{
    return make_beta(x, Rational(-1), Rational(1));
}

SuspensionPoint SuspensionSpace::evaluate(const MoorePath& path, const Rational& t) const
{
    if (t < 0 || t > path.duration())
        throw DomainError("evaluate: time " + format_rational(t) + " outside [0, " +
                          format_rational(path.duration()) + "]");
    Rational offset = 0;
    for (const Segment& seg : path.segments)
    {
        if (t <= offset + seg.duration)
        {
            if (seg.is_star())
                return SuspensionPoint::basepoint();
            return track_point(seg.track(), seg.duration, t - offset);
        }
        offset += seg.duration;
    }
    return SuspensionPoint::basepoint();
}

SuspensionPoint SuspensionSpace::start(const MoorePath& path) const
{
    return evaluate(path, Rational(0));
}

SuspensionPoint SuspensionSpace::end(const MoorePath& path) const
{
    return evaluate(path, path.duration());
}

MoorePath SuspensionSpace::concat(const MoorePath& a, const MoorePath& b) const
{
    if (a.duration() == 0)
        return normalize(b);
    if (b.duration() == 0)
        return normalize(a);
    if (end(a) != start(b))
        throw DomainError("concat: the first path does not end where the second starts");
    MoorePath joined = a;
    joined.segments.insert(joined.segments.end(), b.segments.begin(), b.segments.end());
    return normalize(joined);
}

MoorePath SuspensionSpace::restrict(const MoorePath& path, const Rational& from,
                                   const Rational& to) const
{
    const Rational total = path.duration();
    if (from < 0 || to < from || to > total)
        throw DomainError("restrict: interval [" + format_rational(from) + ", " +
                          format_rational(to) + "] not inside [0, " + format_rational(total) +
                          "]");
    MoorePath out;
    Rational offset = 0;
    for (const Segment& seg : path.segments)
    {
        Rational lo = std::max(offset, from);
        Rational hi = std::min(Rational(offset + seg.duration), to);
        if (hi > lo)
        {
            if (seg.is_star())
                append_normalized(out.segments, {hi - lo, StarBody{}});
            else
                append_normalized(out.segments,
                                  {hi - lo, sub_track(seg.track(), seg.duration, lo - offset,
                                                      hi - offset)});
        }
        offset += seg.duration;
    }
    return out;
}

MoorePath SuspensionSpace::scale_time(const MoorePath& path, const Rational& factor) const
{
    if (factor <= 0)
        throw DomainError("scale_time: factor must be positive");
    MoorePath out = normalize(path);
    for (Segment& seg : out.segments)
        seg.duration *= factor;
    return out;
}

MoorePath SuspensionSpace::reparam(const MoorePath& path, const TimeMap& map) const
{
    const auto& bp = map.breakpoints;
    if (bp.empty() || bp.front().first != 0 || bp.front().second != 0)
        throw DomainError("reparam: the time map must start at (0, 0)");
    if (bp.back().second != path.duration())
        throw DomainError("reparam: the time map must end at the path's duration");
    for (std::size_t k = 1; k < bp.size(); ++k)
        if (bp[k].first <= bp[k - 1].first || bp[k].second < bp[k - 1].second)
            throw DomainError("reparam: the time map must be nondecreasing with strictly "
                              "increasing breakpoints");

    MoorePath out;
    for (std::size_t k = 1; k < bp.size(); ++k)
    {
        const auto& [s0, u0] = bp[k - 1];
        const auto& [s1, u1] = bp[k];
        if (u0 == u1)
        {
            append_normalized(out.segments, constant_segment(evaluate(path, u0), s1 - s0));
            continue;
        }
        MoorePath piece = scale_time(restrict(path, u0, u1), (s1 - s0) / (u1 - u0));
        for (const Segment& seg : piece.segments)
            append_normalized(out.segments, seg);
    }
    return out;
}

namespace
{

struct Ends
{
    SuspensionPoint first;
    SuspensionPoint last;
};

} // namespace

bool SuspensionSpace::verify_directed(const MoorePath& path, XStructure structure) const
{
    try
    {
        bool have_prev = false;
        SuspensionPoint prev_end;
        for (const Segment& seg : path.segments)
        {
            if (seg.duration < 0)
                return false;
            Ends ends;
            if (!seg.is_star())
            {
                const Track& tr = seg.track();
                const auto dim = static_cast<std::size_t>(base_->dim(tr.cube));
                if (tr.c_start.size() != dim || tr.c_end.size() != dim)
                    return false;
                if (tr.h_start > tr.h_end)
                    return false;
                for (std::size_t k = 0; k < dim; ++k)
                {
                    if (tr.c_start[k] < 0 || tr.c_start[k] > 1 || tr.c_end[k] < 0 ||
                        tr.c_end[k] > 1)
                        return false;
                    if (structure == XStructure::directed && tr.c_start[k] > tr.c_end[k])
                        return false;
                }
                if (seg.duration == 0 && (tr.h_start != tr.h_end || tr.c_start != tr.c_end))
                    return false;
                ends.first = point(tr.h_start, tr.cube, tr.c_start);
                ends.last = point(tr.h_end, tr.cube, tr.c_end);
            }
            if (have_prev && prev_end != ends.first)
                return false;
            prev_end = ends.last;
            have_prev = true;
        }
        return true;
    }
    catch (const DomainError&)
    {
        return false;
    }
    catch (const StructureError&)
    {
        return false;
    }
}

bool SuspensionSpace::is_loop(const MoorePath& path) const
{
    return start(path).star && end(path).star;
}

bool SuspensionSpace::is_strictly_increasing(const MoorePath& path) const
{
    MoorePath p = normalize(path);
    return std::all_of(p.segments.begin(), p.segments.end(), [](const Segment& s) {
        return s.is_star() || s.track().h_end > s.track().h_start;
    });
}

EndpointInfo SuspensionSpace::classify_endpoint(const MoorePath& path) const
{
    if (!start(path).star)
        throw DomainError("classify_endpoint: the path does not start at *");
    EndpointInfo info;
    info.end = end(path);
    if (info.end.star)
    {
        info.label = EndpointClass::star;
        info.in_minus = info.in_plus = true;
        return info;
    }
    const Rational& h = info.end.h;
    info.in_minus = h <= 0;
    info.in_plus = h >= 0;
    info.in_zero = h == 0;
    info.label = info.in_zero  ? EndpointClass::l_zero
                 : info.in_minus ? EndpointClass::l_minus
                                 : EndpointClass::l_plus;
    return info;
}

MoorePath SuspensionSpace::remap_height(const MoorePath& path, const Rational& lambda,
                                        const Rational& mu) const
{
    if (lambda <= 0)
        throw DomainError("remap_height: the slope must be positive");
    MoorePath out;
    for (const Segment& seg : path.segments)
    {
        if (seg.is_star())
        {
            append_normalized(out.segments, seg);
            continue;
        }
        Track tr = seg.track();
        tr.h_start = lambda * tr.h_start + mu;
        tr.h_end = lambda * tr.h_end + mu;
        append_normalized(out.segments, {seg.duration, std::move(tr)});
    }
    return out;
}

MoorePath SuspensionSpace::apply_phi(const MoorePath& path, Sign sign, const Rational& t) const
{
    if (t < 0 || t > 1)
        throw DomainError("apply_phi: t must lie in [0,1]");
    if (!verify_directed(path, XStructure::total))
        throw DomainError("apply_phi: the path is not directed");
    return remap_height(path, t + 1, sign == Sign::minus ? Rational(-t) : t);
}

MoorePath SuspensionSpace::F_pair(const RealizationPoint& x, const MoorePath& loop) const
{
    if (!is_loop(loop))
        throw DomainError("F: the path is not a loop at *");
    return concat(loop, height_ramp(x, Rational(-1), Rational(0), Rational(1)));
}

std::pair<RealizationPoint, MoorePath> SuspensionSpace::G_pair(const MoorePath& path) const
{
    EndpointInfo info = classify_endpoint(path);
    if (info.label != EndpointClass::l_zero)
        throw DomainError("G: the path does not end on the zero slice (L_0)");
    return {info.end.x, apply_phi(path, Sign::minus, Rational(1))};
}

std::pair<RealizationPoint, MoorePath>
SuspensionSpace::gf_homotopy(const RealizationPoint& x, const MoorePath& loop,
                             const Rational& t) const
{
    if (t < 0 || t > 1)
        throw DomainError("homotopy parameter must lie in [0,1]");
    if (!is_loop(loop))
        throw DomainError("H_t: the path is not a loop at *");
    Rational top = (t - 1) / (t + 1);
    MoorePath extended = concat(loop, height_ramp(x, Rational(-1), top, top + 1));
    return {x, apply_phi(extended, Sign::minus, t)};
}

MoorePath SuspensionSpace::fg_homotopy(const MoorePath& path, const Rational& t) const
{
    if (t < 0 || t > 1)
        throw DomainError("homotopy parameter must lie in [0,1]");
    EndpointInfo info = classify_endpoint(path);
    if (info.label != EndpointClass::l_zero)
        throw DomainError("H'_t: the path does not end on the zero slice (L_0)");
    return concat(apply_phi(path, Sign::minus, t), height_ramp(info.end.x, -t, Rational(0), t));
}

MoorePath SuspensionSpace::truncate_moore(const MoorePath& path, const Rational& s) const
{
    if (s < 0 || s > 1)
        throw DomainError("truncate_moore: s must lie in [0,1]");
    return restrict(path, Rational(0), s * path.duration());
}

MoorePath SuspensionSpace::make_increasing(const MoorePath& loop, const Rational& epsilon) const
{
    if (epsilon <= 0 || epsilon >= 1)
        throw DomainError("make_increasing: epsilon must lie in (0,1)");
    if (!verify_directed(loop, XStructure::total))
        throw DomainError("make_increasing: the path is not directed");
    if (!is_loop(loop))
        throw DomainError("make_increasing: the path is not a loop at *");
    MoorePath p = normalize(loop);
    const Rational total = p.duration();
    if (total == 0)
        return p;
    const Rational scale = 1 / (1 - epsilon);
    MoorePath out;
    Rational offset = 0;
    for (const Segment& seg : p.segments)
    {
        if (seg.is_star())
            append_normalized(out.segments, seg);
        else
        {
            Track tr = seg.track();
            tr.h_start = (tr.h_start + epsilon * offset / total) * scale;
            tr.h_end = (tr.h_end + epsilon * (offset + seg.duration) / total) * scale;
            append_normalized(out.segments, {seg.duration, std::move(tr)});
        }
        offset += seg.duration;
    }
    return out;
}

RealizationPoint SuspensionSpace::to_model_point(const SuspensionPoint& p) const
{
    if (p.star)
        return {model_->star, {}};
    std::vector<Rational> coords;
    std::string prefix;
    if (p.h < 0)
    {
        prefix = "i-";
        coords.push_back(p.h + 1);
    }
    else if (p.h > 0)
    {
        prefix = "i+";
        coords.push_back(p.h);
    }
    else
        prefix = "m";
    coords.insert(coords.end(), p.x.coords.begin(), p.x.coords.end());
    return normalize_point(model_->complex, tensor_name(prefix, p.x.cube), std::move(coords));
}

bool SuspensionSpace::near_basepoint(const SuspensionPoint& p,
                                     const BasepointNeighborhood& nbhd) const
{
    if (p.star)
        return true;
    if (const auto* threshold = std::get_if<HeightThreshold>(&nbhd))
        return abs(p.h) > 1 - threshold->delta;
    return in_A(model_->complex, to_model_point(p), SubComplex{model_->star});
}

bool SuspensionSpace::excursion_near(const std::vector<Segment>& run,
                                     const BasepointNeighborhood& nbhd) const
{
    const auto* threshold = std::get_if<HeightThreshold>(&nbhd);
    for (const Segment& seg : run)
    {
        const Track& tr = seg.track();
        const Rational& d = seg.duration;
        // On each open piece between these times the membership is constant.
        std::vector<Rational> times{Rational(0), d};
        if (threshold)
        {
            add_level_crossing(times, tr.h_start, tr.h_end, d, 1 - threshold->delta);
            add_level_crossing(times, tr.h_start, tr.h_end, d, threshold->delta - 1);
        }
        else
        {
            for (const Rational& level : {Rational(-2, 3), Rational(-1, 3), Rational(0),
                                         Rational(1, 3), Rational(2, 3)})
                add_level_crossing(times, tr.h_start, tr.h_end, d, level);
            for (std::size_t k = 0; k < tr.c_start.size(); ++k)
                for (const Rational& level : {Rational(1, 3), Rational(2, 3)})
                    add_level_crossing(times, tr.c_start[k], tr.c_end[k], d, level);
        }
        sort_unique(times);
        for (std::size_t k = 0; k < times.size(); ++k)
        {
            if (!near_basepoint(track_point(tr, d, times[k]), nbhd))
                return false;
            if (k + 1 < times.size() &&
                !near_basepoint(track_point(tr, d, (times[k] + times[k + 1]) / 2), nbhd))
                return false;
        }
    }
    return true;
}

MoorePath SuspensionSpace::truncate_near_basepoint(const MoorePath& path,
                                                   const BasepointNeighborhood& nbhd) const
{
    if (const auto* threshold = std::get_if<HeightThreshold>(&nbhd))
        if (threshold->delta <= 0)
            throw DomainError("truncate_near_basepoint: delta must be positive");
    if (!verify_directed(path, XStructure::total))
        throw DomainError("truncate_near_basepoint: the path is not directed");

    MoorePath p = normalize(path);
    MoorePath out;
    std::vector<Segment> run;
    auto flush = [&] {
        if (run.empty())
            return;
        if (excursion_near(run, nbhd))
        {
            Rational total = 0;
            for (const Segment& s : run)
                total += s.duration;
            append_normalized(out.segments, {total, StarBody{}});
        }
        else
            for (const Segment& s : run)
                append_normalized(out.segments, s);
        run.clear();
    };
    for (const Segment& seg : p.segments)
    {
        if (seg.is_star())
        {
            flush();
            append_normalized(out.segments, seg);
            continue;
        }
        const Track& tr = seg.track();
        if (point(tr.h_start, tr.cube, tr.c_start).star)
            flush();
        run.push_back(seg);
        if (point(tr.h_end, tr.cube, tr.c_end).star)
            flush();
    }
    flush();
    return out;
}

} // namespace jamesloop
