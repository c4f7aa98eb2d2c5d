#include "jamesloop/homology.hpp"

#include <numeric>

#include "jamesloop/errors.hpp"

namespace jamesloop
{

namespace
{

std::uint64_t mod_reduce(std::int64_t value, std::uint64_t p)
{
    auto m = static_cast<std::int64_t>(p);
    std::int64_t r = value % m;
    return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p)
{
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp)
    {
        if (exp & 1)
            result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return result;
}

std::size_t rank_rational(std::vector<std::vector<Rational>> a)
{
    std::size_t rank = 0;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col)
    {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r)
        {
            if (a[r][col] == 0)
                continue;
            Rational factor = a[r][col] / a[rank][col];
            for (std::size_t c = col; c < cols; ++c)
                a[r][c] -= factor * a[rank][c];
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p)
{
    std::size_t rank = 0;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col)
    {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(a[pivot], a[rank]);
        std::uint64_t inv = pow_mod(a[rank][col], p - 2, p);
        for (std::size_t r = rank + 1; r < rows; ++r)
        {
            if (a[r][col] == 0)
                continue;
            std::uint64_t factor = mul_mod(a[r][col], inv, p);
            for (std::size_t c = col; c < cols; ++c)
            {
                std::uint64_t sub = mul_mod(factor, a[rank][c], p);
                a[r][c] = (a[r][c] + p - sub) % p;
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (n % q == 0)
            return n == q;
    // Miller-Rabin with the first twelve primes as bases is exact below 2^64.
    auto mul = [n](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
    };
    auto pow = [&](std::uint64_t a, std::uint64_t e) {
        std::uint64_t r = 1;
        for (a %= n; e; e >>= 1, a = mul(a, a))
            if (e & 1)
                r = mul(r, a);
        return r;
    };
    std::uint64_t d = n - 1;
    int s = 0;
    for (; d % 2 == 0; d /= 2)
        ++s;
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
    {
        std::uint64_t x = pow(a, d);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s && composite; ++r)
        {
            x = mul(x, x);
            composite = x != n - 1;
        }
        if (composite)
            return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p)
{
    if (!is_prime(p))
        throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
    if (p >= (std::uint64_t{1} << 63))
        throw DomainError("field characteristic too large");
    return {Kind::prime_field, p};
}

std::string FieldSpec::name() const
{
    return kind == Kind::rationals ? "q" : "zp:" + std::to_string(p);
}

FieldSpec parse_field(std::string_view text)
{
    if (text == "q" || text == "Q")
        return FieldSpec::rationals();
    if (text.rfind("zp:", 0) == 0)
    {
        std::string digits(text.substr(3));
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
            digits.size() > 19)
            throw ParseError("malformed field \"" + std::string(text) + "\"");
        std::uint64_t p = std::stoull(digits);
        if (!is_prime(p))
            throw ParseError("field characteristic " + digits + " is not prime");
        return FieldSpec::prime(p);
    }
    throw ParseError("unknown field \"" + std::string(text) + "\" (expected q or zp:<p>)");
}

ChainComplex chain_complex(const CubicalSet& complex, const FieldSpec& field)
{
    if (!validate(complex).empty())
        throw DomainError("chain_complex: the cubical relations do not hold");

    ChainComplex chains;
    chains.field = field;
    const int top = complex.top_dim();
    chains.basis.resize(static_cast<std::size_t>(top) + 1);
    for (int n = 0; n <= top; ++n)
        chains.basis[static_cast<std::size_t>(n)] = complex.cubes_of_dim(n);

    chains.boundary.resize(static_cast<std::size_t>(top) + 1);
    for (int n = 1; n <= top; ++n)
    {
        const auto& rows = chains.basis[static_cast<std::size_t>(n - 1)];
        const auto& cols = chains.basis[static_cast<std::size_t>(n)];
        std::map<std::string, std::size_t> row_of;
        for (std::size_t r = 0; r < rows.size(); ++r)
            row_of[rows[r]] = r;
        auto& m = chains.boundary[static_cast<std::size_t>(n)];
        m.assign(rows.size(), std::vector<std::int64_t>(cols.size(), 0));
        for (std::size_t c = 0; c < cols.size(); ++c)
        {
            const Cube& cube = complex.cube(cols[c]);
            for (int i = 1; i <= n; ++i)
            {
                const std::int64_t sign = (i % 2 == 0) ? 1 : -1;
                for (int eps = 0; eps <= 1; ++eps)
                {
                    const FaceRef& f = cube.face(i, eps);
                    if (f.degenerate())
                        continue;
                    m[row_of.at(f.base)][c] += eps == 0 ? sign : -sign;
                }
            }
        }
    }
    return chains;
}

std::size_t matrix_rank(const std::vector<std::vector<std::int64_t>>& matrix,
                        const FieldSpec& field)
{
    if (matrix.empty() || matrix[0].empty())
        return 0;
    if (field.kind == FieldSpec::Kind::rationals)
    {
        std::vector<std::vector<Rational>> a;
        for (const auto& row : matrix)
            a.emplace_back(row.begin(), row.end());
        return rank_rational(std::move(a));
    }
    std::vector<std::vector<std::uint64_t>> a;
    for (const auto& row : matrix)
    {
        std::vector<std::uint64_t> r;
        for (auto v : row)
            r.push_back(mod_reduce(v, field.p));
        a.push_back(std::move(r));
    }
    return rank_mod_p(std::move(a), field.p);
}

bool boundary_squared_vanishes(const ChainComplex& chains)
{
    for (int n = 2; n <= chains.top_degree(); ++n)
    {
        const auto& outer = chains.boundary[static_cast<std::size_t>(n - 1)];
        const auto& inner = chains.boundary[static_cast<std::size_t>(n)];
        for (std::size_t r = 0; r < outer.size(); ++r)
            for (std::size_t c = 0; c < (inner.empty() ? 0 : inner[0].size()); ++c)
            {
                std::int64_t sum = 0;
                for (std::size_t k = 0; k < inner.size(); ++k)
                    sum += outer[r][k] * inner[k][c];
                bool zero = chains.field.kind == FieldSpec::Kind::rationals
                                ? sum == 0
                                : mod_reduce(sum, chains.field.p) == 0;
                if (!zero)
                    return false;
            }
    }
    return true;
}

GradedDims betti(const CubicalSet& complex, const FieldSpec& field)
{
    ChainComplex chains = chain_complex(complex, field);
    const int top = chains.top_degree();
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);
    for (int n = 1; n <= top; ++n)
        ranks[static_cast<std::size_t>(n)] =
            matrix_rank(chains.boundary[static_cast<std::size_t>(n)], field);

    GradedDims out;
    out.truncation = top;
    for (int n = 0; n <= top; ++n)
    {
        auto size = static_cast<std::int64_t>(chains.basis[static_cast<std::size_t>(n)].size());
        out.dims[n] = size - static_cast<std::int64_t>(ranks[static_cast<std::size_t>(n)]) -
                      static_cast<std::int64_t>(ranks[static_cast<std::size_t>(n) + 1]);
    }
    return out;
}

GradedDims reduced(const GradedDims& dims)
{
    GradedDims out = dims;
    out.dims[0] = dims.at(0) - 1;
    return out;
}

} // namespace jamesloop
