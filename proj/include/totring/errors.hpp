#pragma once

#include <stdexcept>
#include <string>

namespace totring {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed ring description: non-prime p, bad operation tables, ...
struct spec_error : error {
    using error::error;
};

// Requested carrier exceeds the configured order guard.
struct order_guard_error : error {
    using error::error;
};

// Exact-domination instance exceeds the solve guard (try --slow).
struct solve_guard_error : error {
    using error::error;
};

// Ring is local: tau(R) is disconnected, no Hamiltonian cycle exists.
struct local_ring_error : error {
    using error::error;
};

// A constructed snake/product/lift edge summed to a non-zero-divisor.
// Always carries the offending pair; indicates a construction bug.
struct edge_violation_error : error {
    using error::error;
};

// Backtracking search ran out of options or budget.
struct search_exhausted_error : error {
    using error::error;
};

// Caller-supplied object failed validation (e.g. bad quotient cycle).
struct invalid_input_error : error {
    using error::error;
};

// Internal cross-check failed (brute-force vs structural disagreement).
struct internal_error : error {
    using error::error;
};

} // namespace totring
