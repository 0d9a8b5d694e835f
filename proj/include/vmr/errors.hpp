#ifndef VMR_ERRORS_HPP
#define VMR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vmr {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Density pair is not mutually absolutely continuous (or the ratio is
// unbounded on some piece); callers should apply ensure_equivalent first.
struct NonEquivalent : Error {
    using Error::Error;
};

// Mass argument outside [0, mu1(X)].
struct OutOfRange : Error {
    using Error::Error;
};

// Target vector lies outside the relevant range set.
struct NotInRange : Error {
    using Error::Error;
};

struct InvalidKernel : Error {
    using Error::Error;
};

struct Infeasible : Error {
    using Error::Error;
};

// Oracle enumeration limits exceeded.
struct TooLarge : Error {
    using Error::Error;
};

// Malformed input file or violated type invariant on load.
struct SchemaError : Error {
    using Error::Error;
};

} // namespace vmr

#endif
