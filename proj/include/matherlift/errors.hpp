#pragma once

#include <stdexcept>
#include <string>

namespace matherlift {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed user input: unreadable files, bad JSON, bad polynomial text.
class parse_error : public error {
public:
    using error::error;
};

/// Operands live over different variable lists.
class variable_context_error : public error {
public:
    using error::error;
};

/// A homogeneous input was required.
class homogeneity_error : public error {
public:
    using error::error;
};

/// A caller violated a documented precondition.
class precondition_error : public error {
public:
    using error::error;
};

/// Power series is zero up to its truncation; the order cannot be read off.
class indeterminate_order_error : public error {
public:
    using error::error;
};

/// Seeded retries were exhausted without hitting a generic configuration.
class genericity_error : public error {
public:
    using error::error;
};

/// A flag failed the expected-codimension checks; names the offending step.
class bad_flag_error : public error {
public:
    using error::error;
};

/// Input so special that no sampled flag certifies; caller should inspect.
class degenerate_input_error : public error {
public:
    using error::error;
};

/// The pairing system of a codimension-one lift is singular.
class non_unique_lift_error : public error {
public:
    using error::error;
};

/// A mathematical property that must hold was observed to fail.
class property_violation_error : public error {
public:
    using error::error;
};

/// An end-to-end scenario diverged from its expected intermediate value.
class scenario_failure_error : public error {
public:
    using error::error;
};

} // namespace matherlift
