#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kloc {

// Base for all library errors. `code()` is a stable machine-readable tag;
// the CLI maps codes onto exit codes.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& message = "division by zero")
        : Error("division_by_zero", message) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error("parse", message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& message)
        : Error("dimension", message) {}
};

class NonSquare : public Error {
public:
    explicit NonSquare(const std::string& message = "matrix must be square")
        : Error("non_square", message) {}
};

class NotInvertible : public Error {
public:
    explicit NotInvertible(const std::string& message = "matrix is not invertible")
        : Error("singular", message) {}
};

class SingularCell : public Error {
public:
    explicit SingularCell(const std::string& message = "cell with eigenvalue 0 is singular")
        : Error("singular_cell", message) {}
};

class ExcludedValue : public Error {
public:
    explicit ExcludedValue(const std::string& message)
        : Error("excluded_value", message) {}
};

class NotIdempotent : public Error {
public:
    explicit NotIdempotent(const std::string& message = "matrix is not idempotent")
        : Error("not_idempotent", message) {}
};

class SpectrumError : public Error {
public:
    SpectrumError(std::string code, const std::string& message)
        : Error(std::move(code), message) {}
};

// Spectrum multiplicities do not account for the whole dimension.
// `deficit` = matrix dimension minus the total multiplicity found.
class IncompleteSpectrum : public SpectrumError {
public:
    IncompleteSpectrum(const std::string& message, long deficit)
        : SpectrumError("incomplete_spectrum", message), deficit_(deficit) {}

    long deficit() const noexcept { return deficit_; }

private:
    long deficit_;
};

}  // namespace kloc
