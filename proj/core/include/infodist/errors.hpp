#pragma once

#include <stdexcept>
#include <string>

namespace infodist {

// Base class for numerical/domain failures raised by this library.
// Precondition violations on plain arguments use std::invalid_argument.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An input object violates its type invariant (e.g. an unnormalized wavefunction).
class invalid_state_error : public error {
public:
    using error::error;
};

// Input is structurally valid but carries no usable signal (e.g. all-zero samples).
class degenerate_input_error : public error {
public:
    using error::error;
};

// The grid truncates too much probability mass for the requested state.
class domain_coverage_error : public error {
public:
    using error::error;
};

// KL-type divergence requested where the second density vanishes on the
// effective support of the first.
class support_error : public error {
public:
    using error::error;
};

// Too few ladder points to fit a coefficient.
class insufficient_data_error : public error {
public:
    using error::error;
};

// No ladder point carries a value above the noise floor, or nothing to fit.
class degenerate_fit_error : public error {
public:
    using error::error;
};

}  // namespace infodist
