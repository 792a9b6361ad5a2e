#pragma once

#include <stdexcept>
#include <string>

namespace descalg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Enumeration did not close before the element cap (infinite or too large group).
struct CapExceeded : Error {
    using Error::Error;
};

struct InvalidSpec : Error {
    using Error::Error;
};

/// apply_exchange called with a generator that is not a left descent.
struct NotADescent : Error {
    using Error::Error;
};

/// A step of a walk or lift leaves the recoil class it should stay in.
struct NotAClassEdge : Error {
    using Error::Error;
};

/// Covering fibers of different size over one target class.
struct FiberInconstant : Error {
    using Error::Error;
};

/// Group-algebra product not constant on a recoil class.
struct ClassInconstant : Error {
    using Error::Error;
};

/// Braid-loop monodromy with order outside {1, 2}.
struct OrderViolation : Error {
    using Error::Error;
};

/// Covering route and convolution route disagree.
struct OracleMismatch : Error {
    using Error::Error;
};

}  // namespace descalg
