#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>

namespace lndlab {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SyntaxError : Error {
    std::size_t position;
    std::string expected;
    SyntaxError(std::size_t pos, std::string what_expected)
        : Error("syntax error at position " + std::to_string(pos) + ": expected " +
                what_expected),
          position(pos),
          expected(std::move(what_expected)) {}
};

struct UnknownVariable : Error {
    explicit UnknownVariable(const std::string& name)
        : Error("unknown variable '" + name + "'") {}
};

struct InvertibleVariable : Error {
    explicit InvertibleVariable(const std::string& name)
        : Error("operation not defined for invertible variable '" + name + "'") {}
};

struct NegativePowerOfNonInvertible : Error {
    explicit NegativePowerOfNonInvertible(const std::string& what)
        : Error("negative exponent is only legal on invertible variables: " + what) {}
};

struct RingMismatch : Error {
    RingMismatch() : Error("operands belong to different rings") {}
    explicit RingMismatch(const std::string& detail)
        : Error("operands belong to different rings: " + detail) {}
};

struct ExponentOverflow : Error {
    ExponentOverflow() : Error("monomial exponent exceeds the overflow bound 2^31") {}
};

struct NonUnitImageForInvertible : Error {
    explicit NonUnitImageForInvertible(const std::string& var)
        : Error("invertible variable '" + var +
                "' may only be substituted by a unit (single term in invertible variables)") {}
};

struct NotUnivariate : Error {
    explicit NotUnivariate(const std::string& detail)
        : Error("polynomial is not univariate: " + detail) {}
};

struct ConstantInput : Error {
    ConstantInput() : Error("constant polynomial where degree >= 1 is required") {}
};

struct ZeroDivision : Error {
    ZeroDivision() : Error("division by zero") {}
};

struct LaurentUnsupported : Error {
    LaurentUnsupported()
        : Error("ideal computations are not supported over rings with invertible variables") {}
};

struct ZeroRelation : Error {
    ZeroRelation() : Error("zero polynomial is not a valid relation") {}
};

struct AlgebraMismatch : Error {
    AlgebraMismatch() : Error("operands belong to different algebras") {}
};

// Carries the diagnostic payload of a failed ideal-stability check: the
// relation that is not preserved and the nonzero normal form of its image.
struct WellDefinednessError : Error {
    std::string relation;
    std::string residue;
    WellDefinednessError(std::string rel, std::string res)
        : Error("derivation does not preserve the relation ideal: image of '" + rel +
                "' has nonzero normal form " + res),
          relation(std::move(rel)),
          residue(std::move(res)) {}
};

struct ZeroDerivation : Error {
    ZeroDerivation() : Error("derivation has no nonzero generator image") {}
};

struct DimensionMismatch : Error {
    DimensionMismatch() : Error("integer vectors have mismatched dimensions") {}
};

struct NotInS : Error {
    NotInS(long deg_p, long deg_p0)
        : Error("polynomial is outside the admissible class: deg_y p = " +
                std::to_string(deg_p) + " but deg_y p(0,y) = " + std::to_string(deg_p0)) {}
};

struct GcdViolation : Error {
    GcdViolation(unsigned u, unsigned v)
        : Error("exponents must be coprime: gcd(" + std::to_string(u) + ", " +
                std::to_string(v) + ") != 1") {}
};

struct ExponentTooSmall : Error {
    explicit ExponentTooSmall(const std::string& detail)
        : Error("exponent below the admissible minimum: " + detail) {}
};

struct ConstraintViolation : Error {
    std::string sum;
    std::string bound;
    ConstraintViolation(std::string sum_str, std::string bound_str)
        : Error("reciprocal-sum constraint violated: " + sum_str + " > " + bound_str),
          sum(std::move(sum_str)),
          bound(std::move(bound_str)) {}
};

struct MixedAlgebras : Error {
    MixedAlgebras() : Error("derivations live on different algebras") {}
};

struct UncertifiedDerivation : Error {
    explicit UncertifiedDerivation(const std::string& label)
        : Error("derivation '" + label + "' has no nilpotency certificate within the bound") {}
};

struct SearchSpaceTooLarge : Error {
    SearchSpaceTooLarge(double candidates, std::size_t guard)
        : Error([&] {
              std::ostringstream msg;
              msg << "search grid holds about " << candidates
                  << " candidate tables, above the guard of " << guard;
              return msg.str();
          }()) {}
};

struct SchemaError : Error {
    std::string path;
    std::size_t line;
    SchemaError(std::string file, std::size_t line_no, const std::string& detail)
        : Error(file + ":" + std::to_string(line_no) + ": " + detail),
          path(std::move(file)),
          line(line_no) {}
};

struct InvalidSpec : Error {
    explicit InvalidSpec(const std::string& detail) : Error("invalid spec: " + detail) {}
};

}  // namespace lndlab
