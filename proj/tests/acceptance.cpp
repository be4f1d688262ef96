// Acceptance suite: one line per criterion, exact tolerances pinned in checks.cpp.
#include <cstdio>
#include <cstring>
#include <string>

#include "sierpile/checks.hpp"

int main(int argc, char** argv) {
    std::string suite = "fast";
    std::uint64_t seed = 20240801;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--suite") && i + 1 < argc) suite = argv[++i];
        if (!std::strcmp(argv[i], "--seed") && i + 1 < argc) seed = std::strtoull(argv[++i], nullptr, 10);
    }
    std::printf("acceptance suite (%s, seed %llu)\n", suite.c_str(),
                static_cast<unsigned long long>(seed));
    int failed = sierpile::run_acceptance(suite, seed, true);
    if (failed) {
        std::printf("\n%d criterion(s) failed. Failures marked [documented paper erratum]\n"
                    "are intentional: the published closed forms they assert are\n"
                    "contradicted by the exhaustive oracle; see notes in the README and\n"
                    "the erratum guard checks above.\n", failed);
        return 2;
    }
    std::printf("\nall criteria passed\n");
    return 0;
}
