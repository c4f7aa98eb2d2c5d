#ifndef JAMESLOOP_HOMOLOGY_HPP
#define JAMESLOOP_HOMOLOGY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "jamesloop/cubical.hpp"

namespace jamesloop
{

/// Coefficient field: the rationals or Z/p for a prime p.
struct FieldSpec
{
    enum class Kind
    {
        rationals,
        prime_field
    };
    Kind kind = Kind::rationals;
    std::uint64_t p = 0;

    static FieldSpec rationals() { return {}; }
    static FieldSpec prime(std::uint64_t p);

    std::string name() const;
    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// "q" or "zp:<p>".
FieldSpec parse_field(std::string_view text);

bool is_prime(std::uint64_t n);

/// Normalized cubical chains. Boundary entries are integers; they are read in
/// the coefficient field when ranks are taken.
struct ChainComplex
{
    FieldSpec field;
    std::vector<std::vector<std::string>> basis;
    // boundary[n] is the matrix of d_n : C_n -> C_{n-1}, rows indexed by
    // basis[n-1]. boundary[0] is empty.
    std::vector<std::vector<std::vector<std::int64_t>>> boundary;

    int top_degree() const { return static_cast<int>(basis.size()) - 1; }
};

ChainComplex chain_complex(const CubicalSet& complex, const FieldSpec& field);

/// d_{n-1} ∘ d_n vanishes in the coefficient field for every n.
bool boundary_squared_vanishes(const ChainComplex& chains);

/// Rank of an integer matrix read in the given field.
std::size_t matrix_rank(const std::vector<std::vector<std::int64_t>>& matrix,
                        const FieldSpec& field);

/// Degree -> dimension table, truncated at `truncation`.
struct GradedDims
{
    std::map<int, std::int64_t> dims;
    int truncation = 0;

    std::int64_t at(int degree) const
    {
        auto it = dims.find(degree);
        return it == dims.end() ? 0 : it->second;
    }
    friend bool operator==(const GradedDims&, const GradedDims&) = default;
};

GradedDims betti(const CubicalSet& complex, const FieldSpec& field);
GradedDims reduced(const GradedDims& dims);

} // namespace jamesloop

#endif
