// Minimal check helpers for the standalone test programs: every failure
// prints file:line and the test's main returns the failure count.
#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace checks {

inline int failures = 0;

inline void report(const char *file, int line, const std::string &msg) {
    ++failures;
    std::printf("FAIL %s:%d  %s\n", file, line, msg.c_str());
}

inline int summary(const char *name) {
    if (failures == 0) {
        std::printf("%s: all checks passed\n", name);
        return 0;
    }
    std::printf("%s: %d check(s) FAILED\n", name, failures);
    return 1;
}

} // namespace checks

#define CHECK(cond)                                                          \
    do {                                                                     \
        if (!(cond)) checks::report(__FILE__, __LINE__, "CHECK(" #cond ")"); \
    } while (0)

#define CHECK_MSG(cond, ...)                                                 \
    do {                                                                     \
        if (!(cond)) {                                                       \
            char buf_[512];                                                  \
            std::snprintf(buf_, sizeof buf_, __VA_ARGS__);                   \
            checks::report(__FILE__, __LINE__, buf_);                        \
        }                                                                    \
    } while (0)

#define CHECK_CLOSE(a, b, tol)                                               \
    do {                                                                     \
        const double a_ = (a), b_ = (b), tol_ = (tol);                       \
        if (!(std::abs(a_ - b_) <= tol_)) {                                  \
            char buf_[512];                                                  \
            std::snprintf(buf_, sizeof buf_,                                 \
                          "|%s - %s| = |%.17g - %.17g| > %.3g", #a, #b, a_,  \
                          b_, tol_);                                         \
            checks::report(__FILE__, __LINE__, buf_);                        \
        }                                                                    \
    } while (0)
