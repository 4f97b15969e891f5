#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cayspec {

// Base for all library errors. name() is the stable identifier used by the
// CLI exit-code mapping and by tests; what() carries the diagnostic.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

// Malformed or out-of-range input (bad integers, parse failures, shape
// mismatches between group and arguments).
struct InvalidInput : Error {
    explicit InvalidInput(const std::string& what) : Error("InvalidInput", what) {}
};

// Connection-set validation failures.
struct IdentityInConnectionSet : Error {
    explicit IdentityInConnectionSet(const std::string& what)
        : Error("IdentityInConnectionSet", what) {}
};

struct NotInverseClosed : Error {
    explicit NotInverseClosed(const std::string& what) : Error("NotInverseClosed", what) {}
};

struct EmptyFactorSet : Error {
    explicit EmptyFactorSet(const std::string& what) : Error("EmptyFactorSet", what) {}
};

// Requested graph exceeds the dense-matrix budget.
struct TooLargeForDenseOracle : Error {
    explicit TooLargeForDenseOracle(const std::string& what)
        : Error("TooLargeForDenseOracle", what) {}
};

// Eigensolver input / convergence failures.
struct NotSymmetric : Error {
    explicit NotSymmetric(const std::string& what) : Error("NotSymmetric", what) {}
};

struct ConvergenceFailure : Error {
    explicit ConvergenceFailure(const std::string& what) : Error("ConvergenceFailure", what) {}
};

// Power-sum eigenvalue recovery is implemented for character degrees 1 and 2
// only; these signal requests outside that range or inconsistent sums.
struct UnsupportedPowerIndex : Error {
    explicit UnsupportedPowerIndex(const std::string& what)
        : Error("UnsupportedPowerIndex", what) {}
};

struct InconsistentPowerSums : Error {
    explicit InconsistentPowerSums(const std::string& what)
        : Error("InconsistentPowerSums", what) {}
};

struct UnsupportedDegree : Error {
    explicit UnsupportedDegree(const std::string& what) : Error("UnsupportedDegree", what) {}
};

// A quantity that must vanish (e.g. the imaginary part of a sum over an
// inverse-closed set) failed to; indicates a defect, not bad input.
struct InternalInconsistency : Error {
    explicit InternalInconsistency(const std::string& what)
        : Error("InternalInconsistency", what) {}
};

}  // namespace cayspec
