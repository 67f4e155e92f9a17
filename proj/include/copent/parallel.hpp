#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace copent {

/// Runs body(i) for i in [0, count) on the OpenMP team. Exceptions are
/// caught per index; after the loop the one with the lowest index is
/// rethrown, so failure reporting does not depend on scheduling.
template <typename Body>
void parallel_for(std::size_t count, Body&& body)
{
    std::vector<std::exception_ptr> errors(count);
    const auto total = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t idx = 0; idx < total; ++idx) {
        const auto i = static_cast<std::size_t>(idx);
        try {
            body(i);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (auto& error : errors) {
        if (error) {
            std::rethrow_exception(error);
        }
    }
}

}  // namespace copent
