#pragma once

#include <stdexcept>
#include <string>

namespace rpcover {

/// Bad parameters or a violated precondition.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed hypergraph or cover input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A search or sampling loop hit its configured cap.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace rpcover
