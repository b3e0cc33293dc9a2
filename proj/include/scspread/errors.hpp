#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace scspread {

// Thrown when an enumeration or search would exceed its size budget.
// `projected` is the estimated item count that tripped the guard.
struct resource_limit_error : std::runtime_error {
    resource_limit_error(const std::string& what, double projected_count, std::int64_t limit)
        : std::runtime_error(what), projected(projected_count), budget(limit) {}

    double projected;
    std::int64_t budget;
};

}  // namespace scspread
