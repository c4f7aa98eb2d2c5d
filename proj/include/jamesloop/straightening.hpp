#ifndef JAMESLOOP_STRAIGHTENING_HPP
#define JAMESLOOP_STRAIGHTENING_HPP

#include <vector>

#include "jamesloop/james.hpp"
#include "jamesloop/suspension_paths.hpp"

namespace jamesloop
{

/// const_0 * alpha_1 * const_1 * ... * alpha_n * const_n. `pauses[i]` is the
/// duration of const_i (possibly 0); each excursion starts and ends at * and
/// avoids * in between.
struct ChainDecomposition
{
    std::vector<Rational> pauses;
    std::vector<MoorePath> excursions;

    friend bool operator==(const ChainDecomposition&, const ChainDecomposition&) = default;
};

ChainDecomposition chain_split(const SuspensionSpace& space, const MoorePath& loop);
MoorePath assemble(const SuspensionSpace& space, const ChainDecomposition& chain);

/// Ĥ_t on a single excursion with one h = 0 crossing at time b: the part
/// before b is shifted down by t and followed by a ramp -t -> 0, the part
/// after b is preceded by a ramp 0 -> t and shifted up by t; each half is
/// rescaled back to its original duration.
MoorePath straighten_step(const SuspensionSpace& space, const MoorePath& excursion,
                          const Rational& t);

/// Deformation from Ĥ_1(alpha) (u = 0) to beta_x^{-1,1}(s/a) (u = 1). The
/// three breakpoints of the height profile move linearly; x stays fixed.
MoorePath uniform_deformation(const SuspensionSpace& space, const RealizationPoint& x,
                              const Rational& duration, const Rational& crossing,
                              const Rational& u);

/// The straightening homotopy at tau in [0,1]: Ĥ on [0,1/3], the uniform
/// deformation on [1/3,2/3], shrinking the constant parts on [2/3,1].
MoorePath straighten_frame(const SuspensionSpace& space, const MoorePath& loop,
                           const Rational& tau);

struct StraightenResult
{
    MoorePath result;
    std::vector<MoorePath> frames;
};

std::vector<Rational> default_samples();
std::vector<Rational> uniform_samples(int count);

StraightenResult full_straighten(const SuspensionSpace& space, const MoorePath& loop,
                                 const std::vector<Rational>& samples = default_samples());

/// Each excursion linearly rescaled to duration 2, constant parts dropped.
MoorePath normalize_part_durations(const SuspensionSpace& space, const MoorePath& loop);

/// Straighten, then drag every letter to the basepoint of B (first to the
/// minimal vertex of its cube, then along a shortest edge path). Ends at the
/// constant loop. Requires B connected.
std::vector<MoorePath> contract_to_constant(const SuspensionSpace& space, const MoorePath& loop);

} // namespace jamesloop

#endif
