#pragma once

#include <stdexcept>

namespace rla {

// A computation would exceed its configured size budget.
struct SizeError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

}  // namespace rla
