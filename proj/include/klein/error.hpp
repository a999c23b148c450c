#pragma once

#include <stdexcept>
#include <string>

namespace klein {

enum class ErrorKind {
    ZeroNorm,
    NotAVector,
    NotABlade,
    NotABivector,
    DegenerateInput,
    UndefinedDistance,
    UndefinedAngle,
    NotIncident,
    NullAuxiliary,
    UnsupportedSpace,
    InvalidSpinor,
    WrongGeneratorClass,
    RepresentationMismatch,
    UndrawableBlade,
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::ZeroNorm: return "ZeroNorm";
    case ErrorKind::NotAVector: return "NotAVector";
    case ErrorKind::NotABlade: return "NotABlade";
    case ErrorKind::NotABivector: return "NotABivector";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::UndefinedDistance: return "UndefinedDistance";
    case ErrorKind::UndefinedAngle: return "UndefinedAngle";
    case ErrorKind::NotIncident: return "NotIncident";
    case ErrorKind::NullAuxiliary: return "NullAuxiliary";
    case ErrorKind::UnsupportedSpace: return "UnsupportedSpace";
    case ErrorKind::InvalidSpinor: return "InvalidSpinor";
    case ErrorKind::WrongGeneratorClass: return "WrongGeneratorClass";
    case ErrorKind::RepresentationMismatch: return "RepresentationMismatch";
    case ErrorKind::UndrawableBlade: return "UndrawableBlade";
    }
    return "Unknown";
}

/// Domain error raised by library operations (non-invertible input,
/// undefined metric quantity, and similar). Parse errors use SyntaxError.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

/// Expression parse failure; carries the byte offset of the offending token.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(std::size_t offset, const std::string& expected)
        : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": expected " + expected),
          offset_(offset), expected_(expected) {}

    std::size_t offset() const { return offset_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

} // namespace klein
