#ifndef JAMESLOOP_CORPUS_HPP
#define JAMESLOOP_CORPUS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "jamesloop/cubical.hpp"
#include "jamesloop/james.hpp"
#include "jamesloop/suspension_paths.hpp"

namespace jamesloop
{

namespace complexes
{
CubicalSet point();
CubicalSet interval();
CubicalSet circle();
CubicalSet wedge_of_circles(int count);
CubicalSet torus();
/// Two vertices, no edges; basepoint "a".
CubicalSet two_points();
/// Circle plus an isolated vertex.
CubicalSet two_components();
} // namespace complexes

/// Deterministic generator: every draw goes through one mt19937_64 stream,
/// so a seed fixes the whole corpus.
class CorpusGenerator
{
public:
    explicit CorpusGenerator(std::uint64_t seed) : rng_(seed) {}

    /// Uniform-ish integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return rng_() % n; }
    bool coin() { return below(2) == 1; }

    /// k/den with 0 < k < den and den drawn from {2, ..., 12}.
    Rational open_unit();
    /// Positive duration with small denominator.
    Rational duration();
    /// a + (b - a) * open_unit(), strictly between a and b.
    Rational between(const Rational& a, const Rational& b);

    /// A canonical point of |B| off the basepoint. B must have such points.
    RealizationPoint letter(const CubicalSet& base);
    std::vector<RealizationPoint> word(const CubicalSet& base, std::size_t max_length);
    std::vector<XPrimeLetter> xprime_word(const CubicalSet& base, std::size_t max_length);

    /// Strictly increasing loop reading `word`: a perturbed j_beta_prime image
    /// with random pauses, split segments and x drifting (monotonically)
    /// while |h| >= 1/2.
    MoorePath increasing_loop(const SuspensionSpace& space,
                              const std::vector<RealizationPoint>& word);
    /// Directed loop with plateaus at nonzero heights; not strictly increasing.
    MoorePath plateau_loop(const SuspensionSpace& space, const std::vector<RealizationPoint>& word);
    /// Random reparametrization [0,S] -> [0,T]; pauses avoid h = 0 crossings.
    TimeMap time_map(const SuspensionSpace& space, const MoorePath& path);

private:
    MoorePath excursion(const SuspensionSpace& space, const RealizationPoint& x, bool plateaus);

    std::mt19937_64 rng_;
};

} // namespace jamesloop

#endif
