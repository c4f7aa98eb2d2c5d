#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "jamesloop/acceptance.hpp"

int main(int argc, char** argv)
{
    std::uint64_t seed = jamesloop::default_seed;
    if (argc > 1)
        seed = std::stoull(argv[1]);
    auto results = jamesloop::run_acceptance(seed);
    std::cout << jamesloop::format_report(results);
    int failed = 0;
    for (const auto& r : results)
        failed += r.passed ? 0 : 1;
    std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
