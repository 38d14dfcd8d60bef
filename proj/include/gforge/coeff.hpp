#pragma once

#include "gforge/errors.hpp"
#include "gforge/twinfloat.hpp"

#include <gmpxx.h>

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>

namespace gforge {

enum class FieldKind { QQ, Fp, TwinFloat };

// One element of whichever field it was made by:
//   QQ        -> mpq_class, always canonical
//   Fp        -> mpz_class in [0, p)
//   TwinFloat -> TwinValue
using FieldElem = std::variant<mpq_class, mpz_class, TwinValue>;

enum class FieldOp { Add, Sub, Mul, Div };

class CoeffField;
using CoeffFieldPtr = std::shared_ptr<const CoeffField>;

// A coefficient field with uniform element operations.  Descriptors are
// immutable and freely shareable; elements are values.
class CoeffField {
public:
    virtual ~CoeffField() = default;

    virtual FieldKind kind() const = 0;
    virtual std::string name() const = 0;
    virtual bool sameField(const CoeffField& other) const = 0;

    virtual FieldElem zero() const = 0;
    virtual FieldElem one() const = 0;
    virtual FieldElem fromInteger(const mpz_class& n) const = 0;
    virtual FieldElem fromRational(const mpq_class& q) const = 0;

    virtual FieldElem add(const FieldElem& a, const FieldElem& b) const = 0;
    virtual FieldElem sub(const FieldElem& a, const FieldElem& b) const = 0;
    virtual FieldElem mul(const FieldElem& a, const FieldElem& b) const = 0;
    virtual FieldElem div(const FieldElem& a, const FieldElem& b) const = 0;
    virtual FieldElem neg(const FieldElem& a) const = 0;

    // Exact for QQ/Fp; the heuristically verified test for twin-floats
    // (which may throw InsufficientPrecision).
    virtual bool isZero(const FieldElem& a) const = 0;

    bool equal(const FieldElem& a, const FieldElem& b) const { return isZero(sub(a, b)); }
    bool isOne(const FieldElem& a) const { return equal(a, one()); }

    // Rational presentation for display: the value itself over QQ, the
    // symmetric residue over Fp, the verified reconstruction over TwinFloat
    // (or nullopt when that fails).
    virtual std::optional<mpq_class> displayRational(const FieldElem& a) const = 0;

    // Canonical scalar text (what a constant polynomial prints as).
    virtual std::string format(const FieldElem& a) const;

    FieldElem power(const FieldElem& base, unsigned long e) const;
};

// FieldArith(K, op, a, b) — uniform arithmetic entry point.
FieldElem FieldArith(const CoeffField& K, FieldOp op, const FieldElem& a, const FieldElem& b);

class QQField final : public CoeffField {
public:
    FieldKind kind() const override { return FieldKind::QQ; }
    std::string name() const override { return "QQ"; }
    bool sameField(const CoeffField& other) const override {
        return other.kind() == FieldKind::QQ;
    }

    FieldElem zero() const override { return mpq_class(0); }
    FieldElem one() const override { return mpq_class(1); }
    FieldElem fromInteger(const mpz_class& n) const override { return mpq_class(n); }
    FieldElem fromRational(const mpq_class& q) const override { return q; }

    FieldElem add(const FieldElem& a, const FieldElem& b) const override;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const override;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const override;
    FieldElem div(const FieldElem& a, const FieldElem& b) const override;
    FieldElem neg(const FieldElem& a) const override;
    bool isZero(const FieldElem& a) const override;
    std::optional<mpq_class> displayRational(const FieldElem& a) const override;
};

// Z/(p): p must pass a probabilistic primality test (64 Miller-Rabin rounds).
class FpField final : public CoeffField {
public:
    explicit FpField(mpz_class p);

    FieldKind kind() const override { return FieldKind::Fp; }
    std::string name() const override { return "ZZ/(" + p_.get_str() + ")"; }
    bool sameField(const CoeffField& other) const override;

    const mpz_class& modulus() const { return p_; }

    FieldElem zero() const override { return mpz_class(0); }
    FieldElem one() const override { return mpz_class(1); }
    FieldElem fromInteger(const mpz_class& n) const override;
    FieldElem fromRational(const mpq_class& q) const override;

    FieldElem add(const FieldElem& a, const FieldElem& b) const override;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const override;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const override;
    FieldElem div(const FieldElem& a, const FieldElem& b) const override;
    FieldElem neg(const FieldElem& a) const override;
    bool isZero(const FieldElem& a) const override;

    // Representative in (-p/2, p/2].
    mpz_class symmetricLift(const FieldElem& a) const;
    std::optional<mpq_class> displayRational(const FieldElem& a) const override;

private:
    mpz_class p_;
};

// Floating arithmetic at requested precision b with heuristic verification:
// each value is carried at b+G and b+2*G bits and the two copies must keep
// agreeing to b significant bits.
class TwinFloatField final : public CoeffField {
public:
    static constexpr long kGuardBits = 32;

    explicit TwinFloatField(long bits);

    FieldKind kind() const override { return FieldKind::TwinFloat; }
    std::string name() const override { return "RR(" + std::to_string(bits_) + ")"; }
    bool sameField(const CoeffField& other) const override;

    long precisionBits() const { return bits_; }

    FieldElem zero() const override { return fromRational(mpq_class(0)); }
    FieldElem one() const override { return fromRational(mpq_class(1)); }
    FieldElem fromInteger(const mpz_class& n) const override { return fromRational(mpq_class(n)); }
    FieldElem fromRational(const mpq_class& q) const override;

    FieldElem add(const FieldElem& a, const FieldElem& b) const override;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const override;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const override;
    FieldElem div(const FieldElem& a, const FieldElem& b) const override;
    FieldElem neg(const FieldElem& a) const override;
    bool isZero(const FieldElem& a) const override;

    std::optional<mpq_class> displayRational(const FieldElem& a) const override;

    // Decimal text "0.<digits>" or "0.<digits>*10^k" used when the rational
    // reconstruction fails.
    std::string formatFloat(const TwinValue& a) const;
    std::string format(const FieldElem& a) const override;

private:
    long bits_;
    mpfr_prec_t primaryPrec() const { return static_cast<mpfr_prec_t>(bits_ + kGuardBits); }
    mpfr_prec_t shadowPrec() const { return static_cast<mpfr_prec_t>(bits_ + 2 * kGuardBits); }
    TwinValue apply(int op, const TwinValue& a, const TwinValue& b) const;
    void validate(const TwinValue& v) const;
    bool zeroish(const MpfrFloat& x, double scaleLog) const;
};

bool IsZeroHeuristic(const TwinFloatField& K, const FieldElem& a);

// Verified conversion to an exact rational via continued fractions on the
// primary copy, cross-checked against the shadow, accepted only when
// |num|*den < 2^(2b).  Throws InsufficientPrecision on failure.
mpq_class TwinFloatToRational(const TwinFloatField& K, const FieldElem& a);

// Shared factories; QQ is a singleton, Fp fields are cached per modulus value
// only by the callers that care.
CoeffFieldPtr MakeQQ();
CoeffFieldPtr MakeFp(const mpz_class& p);
CoeffFieldPtr MakeTwinFloat(long bits);

// Runs task(bits) starting at startBits, doubling on InsufficientPrecision,
// giving up after maxEscalations doublings.
template <typename T>
T WithIncreasingPrecision(long startBits, const std::function<T(long)>& task,
                          int maxEscalations = 8) {
    if (startBits < 8) throw CASError("WithIncreasingPrecision: startBits must be >= 8");
    long bits = startBits;
    for (int attempt = 0;; ++attempt) {
        try {
            return task(bits);
        } catch (const InsufficientPrecision&) {
            if (attempt >= maxEscalations) throw PrecisionCapExceeded();
            bits *= 2;
        }
    }
}

// 64 Miller-Rabin rounds with deterministically seeded bases.
bool IsProbablePrime(const mpz_class& n);

} // namespace gforge
