#ifndef JAMESLOOP_ACCEPTANCE_HPP
#define JAMESLOOP_ACCEPTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "jamesloop/homology.hpp"
#include "jamesloop/loop_algebra.hpp"

namespace jamesloop
{

struct CriterionResult
{
    int number = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

constexpr std::uint64_t default_seed = 20240917;

/// Count tensor words over a graded basis by explicit enumeration (no
/// recurrence); independent check for tensor_algebra_dims. A nonnegative
/// `max_length` keeps only words with at most that many letters (the James
/// filtration).
HilbertSeries brute_force_tensor_dims(const GradedDims& generators, int degree,
                                      int max_length = -1);

CriterionResult check_homology(std::uint64_t seed);
CriterionResult check_suspension_iso(std::uint64_t seed);
CriterionResult check_loop_homology(std::uint64_t seed);
CriterionResult check_sec_section(std::uint64_t seed);
CriterionResult check_sec_homomorphism(std::uint64_t seed);
CriterionResult check_make_increasing(std::uint64_t seed);
CriterionResult check_straightening(std::uint64_t seed);
CriterionResult check_contraction(std::uint64_t seed);
CriterionResult check_homotopy_endpoints(std::uint64_t seed);
CriterionResult check_retraction(std::uint64_t seed);

/// All criteria in order; a criterion that throws is reported as failed.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = default_seed);

/// One line per criterion: "PASS  1 name: detail".
std::string format_report(const std::vector<CriterionResult>& results);

} // namespace jamesloop

#endif
