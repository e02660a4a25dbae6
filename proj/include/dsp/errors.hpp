#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dsp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// scalar field
struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
};
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

// type invariant violations (invalid Jnf, class spec, tuple, file model)
struct ValidationError : Error {
    using Error::Error;
};

// spectra
struct PsiUndefined : Error {
    using Error::Error;
};
struct InvalidChoice : Error {
    using Error::Error;
};

// relation / delta enumeration
struct SizeLimit : Error {
    using Error::Error;
};
struct EmptyClassList : Error {
    EmptyClassList() : Error("empty class list") {}
};

// linear algebra
struct ShapeMismatch : Error {
    using Error::Error;
};

// tuple analysis
struct PreconditionViolated : Error {
    using Error::Error;
};
struct NotDiagonalizable : Error {
    using Error::Error;
};
struct NotBlockTriangular : Error {
    using Error::Error;
};

// constructions
struct ZeroParameter : Error {
    using Error::Error;
};
struct SpectralConstraintViolated : Error {
    using Error::Error;
};
struct ScalarSum : Error {
    using Error::Error;
};
struct TraceMismatch : Error {
    using Error::Error;
};
struct EquivalentBlocks : Error {
    using Error::Error;
};
struct ExtDimensionMismatch : Error {
    using Error::Error;
};
struct InvalidInstance : Error {
    using Error::Error;
};
struct InfeasibleShape : Error {
    using Error::Error;
};

}  // namespace dsp
