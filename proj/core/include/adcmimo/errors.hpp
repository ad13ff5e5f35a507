#ifndef ADCMIMO_ERRORS_HPP_
#define ADCMIMO_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace adcmimo {

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotHermitianError : std::domain_error {
    using std::domain_error::domain_error;
};

struct SingularError : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotPositiveDefiniteError : std::domain_error {
    using std::domain_error::domain_error;
};

struct BadResolutionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BadKappaError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BudgetTooSmallError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace adcmimo

#endif // ADCMIMO_ERRORS_HPP_
