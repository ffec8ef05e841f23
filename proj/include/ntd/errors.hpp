#pragma once

#include <stdexcept>
#include <string>

namespace ntd {

// Error categories map to CLI exit codes: ConfigError -> 2, InputError -> 3,
// anything else -> 4.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised by the trace-replay provider when asked for more steps than the
// dump contains.
struct TraceExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ntd
