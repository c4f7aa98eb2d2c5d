#ifndef JAMESLOOP_SUSPENSION_PATHS_HPP
#define JAMESLOOP_SUSPENSION_PATHS_HPP

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "jamesloop/cubical.hpp"
#include "jamesloop/rational.hpp"

namespace jamesloop
{

/// Directed structure assumed on the X factor. Heights are always monotone.
enum class XStructure
{
    directed,
    total
};

/// A point of Σ|B|: the basepoint, or [(h, x)] with h in (-1,1) and x a
/// canonical non-basepoint point of |B|.
struct SuspensionPoint
{
    bool star = true;
    Rational h;
    RealizationPoint x;

    static SuspensionPoint basepoint() { return {}; }

    friend bool operator==(const SuspensionPoint& a, const SuspensionPoint& b)
    {
        if (a.star || b.star)
            return a.star == b.star;
        return a.h == b.h && a.x == b.x;
    }
};

struct StarBody
{
    friend bool operator==(const StarBody&, const StarBody&) = default;
};

/// Affine height and affine coordinates in `cube` over the segment's duration.
struct Track
{
    Rational h_start;
    Rational h_end;
    std::string cube;
    std::vector<Rational> c_start;
    std::vector<Rational> c_end;

    friend bool operator==(const Track&, const Track&) = default;
};

struct Segment
{
    Rational duration;
    std::variant<StarBody, Track> body;

    bool is_star() const { return std::holds_alternative<StarBody>(body); }
    const Track& track() const { return std::get<Track>(body); }

    friend bool operator==(const Segment&, const Segment&) = default;
};

/// A piecewise-linear Moore path parametrized by [0, duration()]. The empty
/// path is the zero-duration path at the basepoint.
struct MoorePath
{
    std::vector<Segment> segments;

    Rational duration() const;
    bool empty() const { return segments.empty(); }

    friend bool operator==(const MoorePath&, const MoorePath&) = default;
};

/// A PL nondecreasing surjection [0, S] -> [0, T] given by its breakpoints
/// (s_k, u_k); s strictly increasing, u nondecreasing, (s_0, u_0) = (0, 0).
struct TimeMap
{
    std::vector<std::pair<Rational, Rational>> breakpoints;
};

enum class EndpointClass
{
    star,
    l_zero,
    l_minus,
    l_plus
};

struct EndpointInfo
{
    EndpointClass label = EndpointClass::star;
    bool in_minus = false;
    bool in_plus = false;
    bool in_zero = false;
    SuspensionPoint end;
};

enum class Sign
{
    minus,
    plus
};

/// |h| > 1 - delta counts as near the basepoint.
struct HeightThreshold
{
    Rational delta;
};

/// The set A = R_1^{-1}({*}) inside the cubical model of the suspension.
struct ModelNeighborhood
{
};

using BasepointNeighborhood = std::variant<ModelNeighborhood, HeightThreshold>;

/// Σ|B| together with its cubical model. Every operation returns paths in
/// normal form: no zero-duration segments, maximal star runs merged, tracks
/// reduced to the smallest cube carrying them and collinear tracks merged.
/// Normal form makes path equality decidable by segment-list equality.
class SuspensionSpace
{
public:
    explicit SuspensionSpace(CubicalSet base);

    const CubicalSet& base() const { return *base_; }
    const SuspensionModel& model() const { return *model_; }

    SuspensionPoint point(const Rational& h, const RealizationPoint& x) const;
    SuspensionPoint point(const Rational& h, std::string_view cube,
                          std::vector<Rational> coords) const;

    MoorePath normalize(const MoorePath& path) const;

    MoorePath star_path(const Rational& duration) const;
    MoorePath constant(const SuspensionPoint& p, const Rational& duration) const;

    /// beta_x^{a,b}: height a -> b at unit speed, clamped to * where |h| >= 1.
    /// Requires a < b.
    MoorePath make_beta(const RealizationPoint& x, const Rational& a, const Rational& b) const;
    /// beta(x) = beta_x^{-1,1}.
    MoorePath beta(const RealizationPoint& x) const;
    /// Height a -> b with x fixed over an arbitrary duration; a <= b, and
    /// a == b with zero duration gives the empty path.
    MoorePath height_ramp(const RealizationPoint& x, const Rational& a, const Rational& b,
                          const Rational& duration) const;

    SuspensionPoint evaluate(const MoorePath& path, const Rational& t) const;
    SuspensionPoint start(const MoorePath& path) const;
    SuspensionPoint end(const MoorePath& path) const;

    /// Moore concatenation. Zero-duration paths are two-sided units;
    /// otherwise end(a) must equal start(b).
    MoorePath concat(const MoorePath& a, const MoorePath& b) const;
    MoorePath restrict(const MoorePath& path, const Rational& from, const Rational& to) const;
    MoorePath scale_time(const MoorePath& path, const Rational& factor) const;
    MoorePath reparam(const MoorePath& path, const TimeMap& map) const;

    bool verify_directed(const MoorePath& path, XStructure structure) const;
    bool is_loop(const MoorePath& path) const;
    /// Strict increase: between any two times not separated by a visit to *,
    /// the height strictly increases.
    bool is_strictly_increasing(const MoorePath& path) const;

    EndpointInfo classify_endpoint(const MoorePath& path) const;

    /// [(h, x)] -> [(lambda h + mu, x)], collapsing |h| >= 1 to *.
    MoorePath remap_height(const MoorePath& path, const Rational& lambda,
                           const Rational& mu) const;
    MoorePath apply_phi(const MoorePath& path, Sign sign, const Rational& t) const;

    /// F(x, alpha) = alpha * beta_x^{-1,0}.
    MoorePath F_pair(const RealizationPoint& x, const MoorePath& loop) const;
    /// G(alpha) = (p(en alpha), phi^- o alpha) for alpha ending on the zero slice.
    std::pair<RealizationPoint, MoorePath> G_pair(const MoorePath& path) const;
    /// H_t(x, alpha) = (x, phi^-_t o (alpha * beta_x^{-1,(t-1)/(1+t)})), joining
    /// the identity (t = 0) to GF (t = 1).
    std::pair<RealizationPoint, MoorePath> gf_homotopy(const RealizationPoint& x,
                                                       const MoorePath& loop,
                                                       const Rational& t) const;
    /// H'_t(alpha) = (phi^-_t o alpha) * beta_x^{-t,0}, joining the identity to FG.
    MoorePath fg_homotopy(const MoorePath& path, const Rational& t) const;

    /// alpha restricted to [0, s * duration].
    MoorePath truncate_moore(const MoorePath& path, const Rational& s) const;

    /// h -> (h + eps * t/T) / (1 - eps), where T is the loop's duration.
    MoorePath make_increasing(const MoorePath& loop, const Rational& epsilon) const;

    /// Replace every excursion away from * that stays inside the neighborhood
    /// by a * segment of the same duration.
    MoorePath truncate_near_basepoint(const MoorePath& path,
                                      const BasepointNeighborhood& nbhd) const;

    bool near_basepoint(const SuspensionPoint& p, const BasepointNeighborhood& nbhd) const;

    /// The point of |K| (K the cubical model) corresponding to p.
    RealizationPoint to_model_point(const SuspensionPoint& p) const;

    /// Track segment for the constant point, or * when p is *.
    Segment constant_segment(const SuspensionPoint& p, const Rational& duration) const;

private:
    SuspensionPoint track_point(const Track& track, const Rational& duration,
                                const Rational& local) const;
    Track sub_track(const Track& track, const Rational& duration, const Rational& from,
                    const Rational& to) const;
    void append_normalized(std::vector<Segment>& out, const Segment& seg) const;
    bool excursion_near(const std::vector<Segment>& run, const BasepointNeighborhood& nbhd) const;

    std::shared_ptr<const CubicalSet> base_;
    std::shared_ptr<const SuspensionModel> model_;
};

} // namespace jamesloop

#endif
