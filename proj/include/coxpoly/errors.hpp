#pragma once

#include <stdexcept>
#include <string>

namespace coxpoly {

// Base class for all domain errors raised by the library. The code() token is
// stable and machine readable; what() carries a human readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct NonSquareError : Error {
    explicit NonSquareError(const std::string& d) : Error("non_square", d) {}
};

struct NotUnimodularError : Error {
    explicit NotUnimodularError(const std::string& d) : Error("not_unimodular", d) {}
};

struct DimensionMismatchError : Error {
    explicit DimensionMismatchError(const std::string& d) : Error("dimension_mismatch", d) {}
};

struct CyclicQuiverError : Error {
    explicit CyclicQuiverError(const std::string& d) : Error("cyclic_quiver", d) {}
};

struct InvalidQuiverError : Error {
    explicit InvalidQuiverError(const std::string& d) : Error("invalid_quiver", d) {}
};

struct NotATreeError : Error {
    explicit NotATreeError(const std::string& d) : Error("not_a_tree", d) {}
};

struct EmptyInputError : Error {
    explicit EmptyInputError(const std::string& d) : Error("empty_input", d) {}
};

struct InvalidWeightsError : Error {
    explicit InvalidWeightsError(const std::string& d) : Error("invalid_weights", d) {}
};

struct OutOfWindowError : Error {
    explicit OutOfWindowError(const std::string& d) : Error("out_of_window", d) {}
};

struct OutsideLemmaHypothesesError : Error {
    explicit OutsideLemmaHypothesesError(const std::string& d)
        : Error("outside_lemma_hypotheses", d) {}
};

struct TraceMismatchError : Error {
    explicit TraceMismatchError(const std::string& d) : Error("trace_mismatch", d) {}
};

struct NonIntegerResultError : Error {
    explicit NonIntegerResultError(const std::string& d) : Error("non_integer_result", d) {}
};

}  // namespace coxpoly
