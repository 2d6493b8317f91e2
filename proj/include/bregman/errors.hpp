#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace bregman {

// Base class for all library errors. `code()` is the stable machine-readable
// name used by the CLI error objects.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// A point (or a computed center) left the open domain of the generator.
struct DomainViolation : Error {
    explicit DomainViolation(const std::string& w) : Error("DomainViolation", w) {}
};

// Affinely dependent simplex vertices.
struct Degenerate : Error {
    explicit Degenerate(const std::string& w) : Error("Degenerate", w) {}
};

// Iteration cap reached without meeting the gradient tolerance.
struct NoConvergence : Error {
    explicit NoConvergence(const std::string& w) : Error("NoConvergence", w) {}
};

// Line search could not keep the iterate strictly inside the domain.
struct DomainEscape : Error {
    explicit DomainEscape(const std::string& w) : Error("DomainEscape", w) {}
};

// A point of the cloud sits on a circumball boundary within tolerance, or a
// membership verdict is numerically marginal.
struct GeneralPositionViolation : Error {
    explicit GeneralPositionViolation(const std::string& w)
        : Error("GeneralPositionViolation", w) {}
};

// Interval extraction or value inheritance left a simplex unassigned or
// inconsistent.
struct PartitionFailure : Error {
    explicit PartitionFailure(const std::string& w) : Error("PartitionFailure", w) {}
};

// A face carries a strictly larger radius than one of its cofaces.
struct MonotonicityViolation : Error {
    explicit MonotonicityViolation(const std::string& w)
        : Error("MonotonicityViolation", w) {}
};

// Diagrams with different counts of infinite points per dimension.
struct InfinityMismatch : Error {
    explicit InfinityMismatch(const std::string& w) : Error("InfinityMismatch", w) {}
};

// Malformed input file.
struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error("ParseError", w) {}
};

} // namespace bregman
