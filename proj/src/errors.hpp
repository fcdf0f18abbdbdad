#ifndef KSAT_ERRORS_HPP
#define KSAT_ERRORS_HPP

#include <stdexcept>

namespace ksat {

// graph6 input that cannot be decoded.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operation whose contract requires a saturated input graph.
class NotSaturatedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Eigenvalue computation failed to converge within its iteration cap.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ksat

#endif
