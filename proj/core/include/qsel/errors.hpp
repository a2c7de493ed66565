#pragma once

#include <stdexcept>
#include <string>

namespace qsel {

// Every library error derives from qsel::error so callers can catch one type.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic kernel
struct zero_division : error { using error::error; };
struct non_divisible : error { using error::error; };
struct inexact_division : error { using error::error; };
struct truncated_value : error { using error::error; };
struct insufficient_precision : error { using error::error; };

// Combinatorial layers
struct length_exceeded : error { using error::error; };
struct too_large : error { using error::error; };
struct bad_shape : error { using error::error; };
struct contract_violation : error { using error::error; };
struct degenerate_denominator : error { using error::error; };
struct non_convergent : error { using error::error; };

} // namespace qsel
