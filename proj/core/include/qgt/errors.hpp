#pragma once

#include <stdexcept>

namespace qgt {

/// Random construction exhausted its retry budget.
struct SamplingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A search has no feasible answer (no converging degree, bad bracket).
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Decoder bookkeeping detected an impossible state (e.g. a syndrome value
/// exceeding the residual degree of its test).
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qgt
