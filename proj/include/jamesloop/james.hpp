#ifndef JAMESLOOP_JAMES_HPP
#define JAMESLOOP_JAMES_HPP

#include <variant>
#include <vector>

#include "jamesloop/cubical.hpp"
#include "jamesloop/suspension_paths.hpp"

namespace jamesloop
{

/// Element of J(X): a word of canonical points with no basepoint letters.
struct JamesWord
{
    std::vector<RealizationPoint> letters;

    std::size_t size() const { return letters.size(); }
    friend bool operator==(const JamesWord&, const JamesWord&) = default;
};

/// Letter t of the whisker [0,1] in X' = X ∨ [0,1]; t = 1 is glued to x0.
struct IntervalLetter
{
    Rational t;
    friend bool operator==(const IntervalLetter&, const IntervalLetter&) = default;
};

using XPrimeLetter = std::variant<RealizationPoint, IntervalLetter>;

JamesWord reduce_word(const CubicalSet& base, std::vector<RealizationPoint> letters);
JamesWord multiply(const CubicalSet& base, const JamesWord& u, const JamesWord& w);

/// J(beta'): Point(x) -> beta(x), Interval(t) -> constant * path of length 2t.
MoorePath j_beta_prime(const SuspensionSpace& space, const std::vector<XPrimeLetter>& word);

/// J(r): interval letters collapse to the basepoint and vanish.
JamesWord j_retract(const CubicalSet& base, const std::vector<XPrimeLetter>& word);

/// The points p(omega(t)) at the finitely many times with h = 0 and
/// omega(t) != *, in time order. Throws DomainError when a height plateau at
/// h = 0 carries a non-basepoint point (make the loop increasing first).
JamesWord sec(const SuspensionSpace& space, const MoorePath& loop);

/// Times of the h = 0 crossings that sec reads off.
std::vector<Rational> sec_times(const SuspensionSpace& space, const MoorePath& loop);

} // namespace jamesloop

#endif
