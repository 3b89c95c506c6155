#ifndef SPECHT_ERRORS_HPP
#define SPECHT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace specht {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad input to a library operation (wrong subset size, non-injective map, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Raised where an operation cannot accept a zero module (n < |lambda| + lambda_1).
class ZeroModuleError : public Error {
public:
    using Error::Error;
};

/// Exact computation would exceed the configured work budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Malformed or inconsistent sample store / table file.
class StoreError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace specht

#endif // SPECHT_ERRORS_HPP
