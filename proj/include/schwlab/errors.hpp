#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace schwlab {

using Complex = std::complex<double>;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Failure while evaluating a map or functional at a disk point. The point is
// attached by whoever knows it (grid drivers, CLI), not by the jet kernels.
class EvaluationError : public Error {
public:
    explicit EvaluationError(const std::string& msg) : Error(msg) {}

    const std::optional<Complex>& point() const noexcept { return point_; }
    void attach_point(Complex z) {
        if (!point_) point_ = z;
    }

private:
    std::optional<Complex> point_;
};

class DivisionNearZero : public EvaluationError {
public:
    explicit DivisionNearZero(const std::string& msg) : EvaluationError(msg) {}
};

class BranchCutViolation : public EvaluationError {
public:
    explicit BranchCutViolation(const std::string& msg) : EvaluationError(msg) {}
};

class PointOutsideDisk : public EvaluationError {
public:
    explicit PointOutsideDisk(const std::string& msg) : EvaluationError(msg) {}
};

// 1 - |omega|^2 fell below the boundary epsilon: the harmonic Schwarzian and
// the hyperbolic functionals degenerate there.
class DilatationOnBoundary : public EvaluationError {
public:
    explicit DilatationOnBoundary(const std::string& msg) : EvaluationError(msg) {}
};

class NonFiniteJet : public EvaluationError {
public:
    explicit NonFiniteJet(const std::string& msg) : EvaluationError(msg) {}
};

class DegenerateMobius : public Error {
public:
    explicit DegenerateMobius(const std::string& msg) : Error(msg) {}
};

class DegenerateAffine : public Error {
public:
    explicit DegenerateAffine(const std::string& msg) : Error(msg) {}
};

class InvalidAlpha : public Error {
public:
    explicit InvalidAlpha(const std::string& msg) : Error(msg) {}
};

class InvalidT : public Error {
public:
    explicit InvalidT(const std::string& msg) : Error(msg) {}
};

class InvalidDelta : public Error {
public:
    explicit InvalidDelta(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& msg)
        : Error(msg + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace schwlab
