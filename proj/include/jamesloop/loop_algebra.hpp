#ifndef JAMESLOOP_LOOP_ALGEBRA_HPP
#define JAMESLOOP_LOOP_ALGEBRA_HPP

#include <cstdint>
#include <vector>

#include "jamesloop/cubical.hpp"
#include "jamesloop/homology.hpp"

namespace jamesloop
{

/// Graded dimensions a_0, ..., a_N of a connected graded algebra.
struct HilbertSeries
{
    std::vector<std::int64_t> coefficients;

    int truncation() const { return static_cast<int>(coefficients.size()) - 1; }
    friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

/// Dimensions of the tensor algebra T(V) through degree N:
/// a_0 = 1, a_k = sum_{j>=1} v_j a_{k-j}. V must vanish in degree 0.
/// Throws DomainError on overflow of 64-bit counts.
HilbertSeries tensor_algebra_dims(const GradedDims& generators, int degree);

/// reduced(betti(B)) fed through tensor_algebra_dims: the homology of the
/// directed loop space of the directed suspension of |B| in degrees <= N.
HilbertSeries loop_space_homology(const CubicalSet& base, const FieldSpec& field, int degree);

/// dim Ã_k == sum_j v_j a_{k-j} for 1 <= k <= N, i.e. V ⊗ A -> Ã is an
/// isomorphism at the level of dimensions.
bool verify_tensor_characterization(const GradedDims& generators, const HilbertSeries& algebra);

} // namespace jamesloop

#endif
