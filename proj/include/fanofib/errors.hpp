#pragma once

#include <stdexcept>
#include <string>

namespace fanofib {

// Mixing polynomials from different variable contexts.
struct context_error : std::logic_error {
    using std::logic_error::logic_error;
};

// A class list whose total degree does not match the ambient dimension.
struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed resolution graph (arrow orientation, codimension order, ...).
struct graph_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A witness class that cannot certify anything (e.g. nonpositive fiber pairing).
struct witness_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Family not present in the built-in catalog.
struct catalog_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Out-of-range or inconsistent numeric parameters.
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Inconsistent multiplicity data (zero fiber multiplicity, non-monotone ledger, ...).
struct data_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A certificate that fails to verify; callers treat this as fatal.
struct certificate_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace fanofib
