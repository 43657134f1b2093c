#pragma once

#include <stdexcept>
#include <string>

namespace cbseries {

/// Argument outside the mathematical domain of an operation
/// (e.g. arcsin beyond [-1,1], I(r) at r = 0, a GF sample point on the
/// boundary of its disc of validity).
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Quadrature level cap reached without two successive levels agreeing.
struct NonConvergence : std::runtime_error {
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

/// Fitted decay exponent too small for a finite tail estimate.
struct DecayTooSlow : std::runtime_error {
    explicit DecayTooSlow(const std::string& what) : std::runtime_error(what) {}
};

/// A recurrence coefficient a(k) or b(k) vanished at index k.
struct ZeroCoefficient : std::runtime_error {
    long index;
    explicit ZeroCoefficient(long k)
        : std::runtime_error("recurrence coefficient vanishes at k = " + std::to_string(k)),
          index(k) {}
};

struct UnknownIdentity : std::invalid_argument {
    explicit UnknownIdentity(const std::string& id)
        : std::invalid_argument("unknown identity: " + id) {}
};

struct ParamOutOfDomain : std::invalid_argument {
    explicit ParamOutOfDomain(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace cbseries
