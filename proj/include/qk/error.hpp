#ifndef QK_ERROR_HPP
#define QK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qk {

/// Bad input: malformed file, invalid vertex, unmet precondition.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exact computation was asked for on an instance larger than its budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A constructive procedure produced output that fails its own re-check.
/// Either a bug, or a counterexample to the statement the procedure relies on.
class PostconditionViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An injected oracle returned something outside its contract.
class OracleViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qk

#endif  // QK_ERROR_HPP
