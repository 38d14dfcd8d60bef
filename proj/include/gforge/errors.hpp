#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gforge {

// Root of every error thrown by the library.  The CLI catches CASError and
// keeps the session alive; anything else is a genuine bug.
class CASError : public std::runtime_error {
public:
    explicit CASError(const std::string& msg) : std::runtime_error(msg) {}
};

class DivisionByZero : public CASError {
public:
    DivisionByZero() : CASError("division by zero") {}
};

// Twin-float primary/shadow agreement was lost (or a heuristic zero test
// could not decide).  Callers such as WithIncreasingPrecision retry at a
// higher precision.
class InsufficientPrecision : public CASError {
public:
    explicit InsufficientPrecision(const std::string& what = "insufficient precision")
        : CASError(what) {}
};

class PrecisionCapExceeded : public CASError {
public:
    PrecisionCapExceeded() : CASError("precision escalation cap exceeded") {}
};

class RingMismatch : public CASError {
public:
    explicit RingMismatch(const std::string& what = "operands belong to different rings")
        : CASError(what) {}
};

class DimensionMismatch : public CASError {
public:
    explicit DimensionMismatch(const std::string& what = "dimension mismatch")
        : CASError(what) {}
};

class ZeroPolynomial : public CASError {
public:
    ZeroPolynomial() : CASError("zero polynomial has no leading term") {}
};

class ArityMismatch : public CASError {
public:
    explicit ArityMismatch(const std::string& what) : CASError(what) {}
};

class InvalidIndex : public CASError {
public:
    explicit InvalidIndex(const std::string& what) : CASError(what) {}
};

class ExponentOverflow : public CASError {
public:
    ExponentOverflow() : CASError("exponent overflow") {}
};

// Cooperative interruption; the computation unwinds without touching caches.
class Cancelled : public CASError {
public:
    Cancelled() : CASError("computation cancelled") {}
};

class NotHomogeneous : public CASError {
public:
    NotHomogeneous() : CASError("ideal is not homogeneous for the ring weights") {}
};

class NotZeroDimensional : public CASError {
public:
    NotZeroDimensional() : CASError("ideal is not zero-dimensional") {}
};

class FieldNotSupported : public CASError {
public:
    explicit FieldNotSupported(const std::string& what) : CASError(what) {}
};

class ModuliNotCoprime : public CASError {
public:
    ModuliNotCoprime() : CASError("moduli are not coprime") {}
};

class ShapeMismatch : public CASError {
public:
    explicit ShapeMismatch(const std::string& what = "residue shapes differ") : CASError(what) {}
};

class NoReconstruction : public CASError {
public:
    NoReconstruction() : CASError("no rational reconstruction within the bound") {}
};

class NoReliableAnswer : public CASError {
public:
    NoReliableAnswer() : CASError("fault-tolerant reconstruction: no candidate meets the margin") {}
};

class NotAHypersurface : public CASError {
public:
    explicit NotAHypersurface(const std::string& what) : CASError(what) {}
};

class VerificationFailed : public CASError {
public:
    explicit VerificationFailed(const std::string& what) : CASError(what) {}
};

class InvalidMatrix : public CASError {
public:
    explicit InvalidMatrix(const std::string& what) : CASError(what) {}
};

// Parse error with a 0-based byte offset into the source text.
class SyntaxError : public CASError {
public:
    SyntaxError(const std::string& msg, std::size_t pos)
        : CASError(msg + " (at position " + std::to_string(pos) + ")"), position_(pos) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class UnknownIndeterminate : public SyntaxError {
public:
    UnknownIndeterminate(const std::string& name, std::size_t pos)
        : SyntaxError("unknown indeterminate '" + name + "'", pos) {}
};

class DivisionByNonConstant : public SyntaxError {
public:
    explicit DivisionByNonConstant(std::size_t pos)
        : SyntaxError("division is only allowed by nonzero constants", pos) {}
};

class NameError : public CASError {
public:
    explicit NameError(const std::string& name) : CASError("unknown name '" + name + "'") {}
};

} // namespace gforge
