#include <catch_amalgamated.hpp>

#include "jamesloop/acceptance.hpp"
#include "jamesloop/corpus.hpp"
#include "jamesloop/errors.hpp"
#include "jamesloop/loop_algebra.hpp"
#include "support.hpp"

using namespace jamesloop;

namespace
{

GradedDims V(std::map<int, std::int64_t> dims, int truncation = 0)
{
    for (const auto& [d, n] : dims)
        truncation = std::max(truncation, d);
    return GradedDims{std::move(dims), truncation};
}

using Series = std::vector<std::int64_t>;

} // namespace

TEST_CASE("tensor algebra dimensions")
{
    CHECK(tensor_algebra_dims(V({{1, 1}}), 6).coefficients == Series{1, 1, 1, 1, 1, 1, 1});
    CHECK(tensor_algebra_dims(V({{1, 2}}), 4).coefficients == Series{1, 2, 4, 8, 16});
    CHECK(tensor_algebra_dims(V({{1, 2}, {2, 1}}), 5).coefficients == Series{1, 2, 5, 12, 29, 70});
    CHECK(tensor_algebra_dims(V({}), 3).coefficients == Series{1, 0, 0, 0});
    CHECK(tensor_algebra_dims(V({{2, 1}}), 5).coefficients == Series{1, 0, 1, 0, 1, 0});
    CHECK(tensor_algebra_dims(V({{1, 1}}), 0).coefficients == Series{1});
    CHECK_THROWS_AS(tensor_algebra_dims(V({{0, 1}, {1, 1}}), 3), DomainError);
    CHECK_THROWS_AS(tensor_algebra_dims(V({{1, 1}}), -1), DomainError);
    // 3^40 overflows 64 bits.
    CHECK_THROWS_AS(tensor_algebra_dims(V({{1, 3}}), 41), DomainError);
    CHECK(tensor_algebra_dims(V({{1, 3}}), 39).coefficients.back() == 4052555153018976267LL);
}

TEST_CASE("the recurrence agrees with explicit word enumeration")
{
    for (const GradedDims& v : {V({{1, 1}}), V({{1, 2}}), V({{1, 2}, {2, 1}}), V({{2, 3}, {3, 1}}),
                                V({{1, 1}, {3, 2}})})
    {
        HilbertSeries series = tensor_algebra_dims(v, 9);
        CHECK(series == brute_force_tensor_dims(v, 9));
        CHECK(verify_tensor_characterization(v, series));
    }
}

TEST_CASE("James filtration counts grow and stabilize")
{
    GradedDims v = V({{1, 2}, {2, 1}});
    const int n = 7;
    HilbertSeries full = tensor_algebra_dims(v, n);
    HilbertSeries prev = brute_force_tensor_dims(v, n, 0);
    CHECK(prev.coefficients == Series{1, 0, 0, 0, 0, 0, 0, 0});
    for (int m = 1; m <= n + 1; ++m)
    {
        HilbertSeries cur = brute_force_tensor_dims(v, n, m);
        for (int k = 0; k <= n; ++k)
        {
            CHECK(cur.coefficients[k] >= prev.coefficients[k]);
            if (m >= k)
                CHECK(cur.coefficients[k] == full.coefficients[k]);
        }
        prev = cur;
    }
}

TEST_CASE("verify_tensor_characterization")
{
    CHECK(verify_tensor_characterization(V({{1, 1}}), HilbertSeries{{1, 1, 1, 1}}));
    CHECK(verify_tensor_characterization(V({{1, 2}, {2, 1}}), HilbertSeries{{1, 2, 5, 12, 29}}));
    CHECK_FALSE(verify_tensor_characterization(V({{1, 1}}), HilbertSeries{{1, 2, 4}}));
    CHECK_FALSE(verify_tensor_characterization(V({{1, 1}}), HilbertSeries{{2, 2, 2}}));
}

TEST_CASE("loop-space homology pipeline")
{
    for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(7)})
    {
        CHECK(loop_space_homology(complexes::circle(), f, 10).coefficients == Series(11, 1));
        CHECK(loop_space_homology(complexes::point(), f, 3).coefficients == Series{1, 0, 0, 0});
        CHECK(loop_space_homology(complexes::torus(), f, 5).coefficients ==
              Series{1, 2, 5, 12, 29, 70});
        CHECK(loop_space_homology(complexes::wedge_of_circles(2), f, 4).coefficients ==
              Series{1, 2, 4, 8, 16});
        CHECK_THROWS_AS(loop_space_homology(complexes::two_components(), f, 3), DomainError);
    }
    // RP^2 is acyclic over Q but not over F2.
    CHECK(loop_space_homology(testing::projective_plane(), FieldSpec::rationals(), 3).coefficients ==
          Series{1, 0, 0, 0});
    CHECK(loop_space_homology(testing::projective_plane(), FieldSpec::prime(2), 3).coefficients ==
          Series{1, 1, 2, 3});
}
