#pragma once

#include <stdexcept>
#include <string>

namespace sqwalk {

// Error categories, doubling as CLI exit codes: 2 usage, 3 caps/limits,
// 4 internal consistency violation.
enum class ErrorKind : int {
    Usage = 2,
    Limits = 3,
    Consistency = 4,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// A permutation image list is not a bijection, or generators disagree on degree.
struct InvalidPermutation : Error {
    explicit InvalidPermutation(const std::string& msg) : Error(ErrorKind::Usage, msg) {}
};

// Group closure (or a table allocation) grew past the configured cap.
struct OrderCapExceeded : Error {
    explicit OrderCapExceeded(const std::string& msg) : Error(ErrorKind::Limits, msg) {}
};

// The class-algebra eigenbasis could not be separated within the retry budget.
struct EigensplitFailure : Error {
    explicit EigensplitFailure(const std::string& msg) : Error(ErrorKind::Consistency, msg) {}
};

// A Frobenius-Schur sum did not land near {-1, 0, +1}.
struct IndicatorOffLattice : Error {
    explicit IndicatorOffLattice(const std::string& msg) : Error(ErrorKind::Consistency, msg) {}
};

// A per-element function expected to be constant on conjugacy classes is not.
struct NotClassFunction : Error {
    NotClassFunction(int class_index, const std::string& msg)
        : Error(ErrorKind::Usage, msg), class_index(class_index) {}
    int class_index;
};

// A character expansion failed to reproduce the probability it came from.
struct ReconstructionFailure : Error {
    explicit ReconstructionFailure(const std::string& msg) : Error(ErrorKind::Consistency, msg) {}
};

// Predicates that are provably equivalent disagreed (implementation bug).
struct EquivalenceViolation : Error {
    explicit EquivalenceViolation(const std::string& msg) : Error(ErrorKind::Consistency, msg) {}
};

// A probability carries positive mass outside the subgroup it is restricted to.
struct SupportEscapesSubgroup : Error {
    explicit SupportEscapesSubgroup(const std::string& msg) : Error(ErrorKind::Usage, msg) {}
};

} // namespace sqwalk
