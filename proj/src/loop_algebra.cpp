#include "jamesloop/loop_algebra.hpp"

#include "jamesloop/errors.hpp"

namespace jamesloop
{

namespace
{

std::int64_t checked_mul_add(std::int64_t acc, std::int64_t a, std::int64_t b)
{
    std::int64_t prod = 0;
    if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(acc, prod, &acc))
        throw DomainError("tensor algebra dimension exceeds 64-bit range");
    return acc;
}

std::int64_t convolve(const GradedDims& generators, const std::vector<std::int64_t>& a, int k)
{
    std::int64_t sum = 0;
    for (int j = 1; j <= k; ++j)
        if (auto v = generators.at(j))
            sum = checked_mul_add(sum, v, a[static_cast<std::size_t>(k - j)]);
    return sum;
}

} // namespace

HilbertSeries tensor_algebra_dims(const GradedDims& generators, int degree)
{
    if (degree < 0)
        throw DomainError("tensor_algebra_dims: negative degree");
    if (generators.at(0) != 0)
        throw DomainError("tensor_algebra_dims: V has a degree-0 part; the space must be "
                          "connected (\"Suppose that X is a connected space\")");
    for (const auto& [d, v] : generators.dims)
        if (d < 0 || v < 0)
            throw DomainError("tensor_algebra_dims: negative degree or dimension in V");

    HilbertSeries series;
    series.coefficients.assign(static_cast<std::size_t>(degree) + 1, 0);
    series.coefficients[0] = 1;
    for (int k = 1; k <= degree; ++k)
        series.coefficients[static_cast<std::size_t>(k)] =
            convolve(generators, series.coefficients, k);
    return series;
}

HilbertSeries loop_space_homology(const CubicalSet& base, const FieldSpec& field, int degree)
{
    GradedDims dims = betti(base, field);
    if (dims.at(0) != 1)
        throw DomainError("loop_space_homology: the complex has " + std::to_string(dims.at(0)) +
                          " components; the connectedness hypothesis (\"Suppose that X is a "
                          "connected space\") fails");
    return tensor_algebra_dims(reduced(dims), degree);
}

bool verify_tensor_characterization(const GradedDims& generators, const HilbertSeries& algebra)
{
    const auto& a = algebra.coefficients;
    if (a.empty() || a[0] != 1)
        return false;
    for (int k = 1; k <= algebra.truncation(); ++k)
        if (a[static_cast<std::size_t>(k)] != convolve(generators, a, k))
            return false;
    return true;
}

} // namespace jamesloop
