#ifndef SPINDEX_CONFIG_HPP
#define SPINDEX_CONFIG_HPP

#include <atomic>
#include <stdexcept>
#include <string>

namespace spindex {

// Clifford dimension cap. 12 keeps the worst-case basis at 4096 blades.
// Overridable at runtime (the CLI wires this to SPINDEX_MAX_DIM).
namespace config {

inline std::atomic<int>& max_dimension_slot() {
    static std::atomic<int> cap{12};
    return cap;
}

inline int max_dimension() { return max_dimension_slot().load(); }

inline void set_max_dimension(int n) {
    if (n < 1 || n > 30)
        throw std::invalid_argument("dimension cap must be in [1, 30], got " + std::to_string(n));
    max_dimension_slot().store(n);
}

} // namespace config

// Thrown when a sweep or enumeration would exceed a desk-scale guard.
struct GuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a (r, parity) combination falls outside the supported tables.
struct UnsupportedCase : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace spindex

#endif
