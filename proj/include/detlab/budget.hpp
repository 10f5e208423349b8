#pragma once

#include <chrono>
#include <cstddef>
#include <optional>

#include "detlab/errors.hpp"

namespace detlab {

// Resource caps shared by the expensive kernels.  Exceeding any of them throws
// ResourceError, which callers report as BUDGET rather than as a failure.
struct Budget {
    std::size_t max_pairs = 2'000'000;
    std::size_t max_basis = 20'000;
    unsigned max_degree = 64;
    std::size_t max_terms = 5'000'000;  // per intermediate polynomial
    std::optional<std::chrono::steady_clock::time_point> deadline;

    static Budget unlimited() {
        Budget b;
        b.max_pairs = static_cast<std::size_t>(-1);
        b.max_basis = static_cast<std::size_t>(-1);
        b.max_degree = static_cast<unsigned>(-1);
        b.max_terms = static_cast<std::size_t>(-1);
        return b;
    }

    Budget with_timeout_ms(long long ms) const {
        Budget b = *this;
        b.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(ms);
        return b;
    }

    void check_time(const char* where) const {
        if (deadline && std::chrono::steady_clock::now() > *deadline)
            throw ResourceError(std::string("wall-time budget exhausted in ") + where);
    }
};

}  // namespace detlab
