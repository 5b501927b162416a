#pragma once

#include <stdexcept>
#include <string>

namespace cubic {

/// Input outside the domain where an operation is defined (bad tuple, d <= 9, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Two routes that must agree did not, or an internal bound was exceeded.
class InconsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

}  // namespace cubic
