#pragma once

#include <stdexcept>
#include <string>

namespace qa3 {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct FieldMismatch : Error {
    FieldMismatch() : Error("scalar does not belong to the expected field") {}
    explicit FieldMismatch(const std::string& what) : Error(what) {}
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

struct ArityMismatch : Error {
    explicit ArityMismatch(const std::string& what) : Error(what) {}
};

struct InhomogeneousRelations : Error {
    explicit InhomogeneousRelations(const std::string& what) : Error(what) {}
};

struct DegreeBeyondTruncation : Error {
    explicit DegreeBeyondTruncation(const std::string& what) : Error(what) {}
};

struct ZeroConstantDenominator : Error {
    ZeroConstantDenominator() : Error("denominator has zero constant term") {}
};

/// Research-grade alarm: a computed Hilbert series escaped the known list.
struct ClassificationConflict : Error {
    explicit ClassificationConflict(const std::string& what) : Error(what) {}
};

struct InfiniteFieldUnsupported : Error {
    InfiniteFieldUnsupported() : Error("decision procedure requires a finite field") {}
};

struct WrongDimension : Error {
    explicit WrongDimension(const std::string& what) : Error(what) {}
};

struct FieldTooLarge : Error {
    explicit FieldTooLarge(const std::string& what) : Error(what) {}
};

struct SpecShapeMismatch : Error {
    explicit SpecShapeMismatch(const std::string& what) : Error(what) {}
};

struct UnknownName : Error {
    explicit UnknownName(const std::string& name) : Error("unknown catalog entry: " + name) {}
};

struct InvalidParameter : Error {
    explicit InvalidParameter(const std::string& what) : Error(what) {}
};

/// Parse failure with 1-based line/column position.
struct ParseError : Error {
    int line;
    int column;
    ParseError(int line_, int col_, const std::string& what)
        : Error("line " + std::to_string(line_) + ", column " + std::to_string(col_) + ": " + what),
          line(line_), column(col_) {}
};

struct InhomogeneousRelation : Error {
    int line;
    explicit InhomogeneousRelation(int line_)
        : Error("line " + std::to_string(line_) + ": relation is not homogeneous"), line(line_) {}
};

struct DuplicateGenerator : Error {
    explicit DuplicateGenerator(const std::string& name) : Error("duplicate generator: " + name) {}
};

}  // namespace qa3
