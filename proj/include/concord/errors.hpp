#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace concord {

// All library errors derive from Error. `kind()` is a stable machine-readable
// tag; `fault()` separates caller mistakes from internal self-check failures
// so the CLI can map them to distinct exit codes.
enum class Fault { User, Internal };

class Error : public std::runtime_error {
public:
    Error(std::string kind, Fault fault, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)), fault_(fault) {}
    const std::string& kind() const { return kind_; }
    Fault fault() const { return fault_; }

private:
    std::string kind_;
    Fault fault_;
};

struct SyntaxError : Error {
    SyntaxError(std::size_t pos, const std::string& what)
        : Error("syntax", Fault::User, what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

struct ParameterError : Error {
    explicit ParameterError(const std::string& what) : Error("parameter", Fault::User, what) {}
};

struct NotDivisible : Error {
    explicit NotDivisible(const std::string& what) : Error("not-divisible", Fault::Internal, what) {}
};

struct NotPalindromic : Error {
    explicit NotPalindromic(const std::string& what) : Error("not-palindromic", Fault::User, what) {}
};

struct OddSpan : Error {
    explicit OddSpan(const std::string& what) : Error("odd-span", Fault::User, what) {}
};

struct OutOfDomain : Error {
    explicit OutOfDomain(const std::string& what) : Error("out-of-domain", Fault::User, what) {}
};

struct NotStaircaseForm : Error {
    explicit NotStaircaseForm(const std::string& what)
        : Error("not-staircase-form", Fault::User, what) {}
};

struct BadParameters : Error {
    explicit BadParameters(const std::string& what) : Error("bad-parameters", Fault::User, what) {}
};

struct AtJumpPoint : Error {
    explicit AtJumpPoint(const std::string& what) : Error("at-jump-point", Fault::User, what) {}
};

struct SelfCheckFailed : Error {
    explicit SelfCheckFailed(const std::string& what)
        : Error("self-check-failed", Fault::Internal, what) {}
};

struct PrecisionExhausted : Error {
    explicit PrecisionExhausted(const std::string& what)
        : Error("precision-exhausted", Fault::Internal, what) {}
};

struct FamilyConstraintViolated : Error {
    explicit FamilyConstraintViolated(const std::string& what)
        : Error("family-constraint", Fault::User, what) {}
};

struct OrderViolation : Error {
    explicit OrderViolation(const std::string& what) : Error("order-violation", Fault::User, what) {}
};

// Thrown by obstruction engines when a required evaluator returns Unknown.
struct EvaluatorUnknown : Error {
    explicit EvaluatorUnknown(const std::string& what)
        : Error("evaluator-unknown", Fault::User, what) {}
};

}  // namespace concord
