#include "gforge/coeff.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>

namespace gforge {

namespace {

const mpq_class& asQ(const FieldElem& e) {
    if (!std::holds_alternative<mpq_class>(e))
        throw CASError("element does not belong to this field");
    return std::get<mpq_class>(e);
}

const mpz_class& asZ(const FieldElem& e) {
    if (!std::holds_alternative<mpz_class>(e))
        throw CASError("element does not belong to this field");
    return std::get<mpz_class>(e);
}

const TwinValue& asT(const FieldElem& e) {
    if (!std::holds_alternative<TwinValue>(e))
        throw CASError("element does not belong to this field");
    return std::get<TwinValue>(e);
}

std::string rationalText(const mpq_class& q) { return q.get_str(); }

} // namespace

std::string CoeffField::format(const FieldElem& a) const {
    auto q = displayRational(a);
    if (!q) throw CASError("no rational presentation");
    return rationalText(*q);
}

FieldElem CoeffField::power(const FieldElem& base, unsigned long e) const {
    FieldElem result = one();
    FieldElem sq = base;
    while (e > 0) {
        if (e & 1UL) result = mul(result, sq);
        e >>= 1UL;
        if (e > 0) sq = mul(sq, sq);
    }
    return result;
}

FieldElem FieldArith(const CoeffField& K, FieldOp op, const FieldElem& a, const FieldElem& b) {
    switch (op) {
    case FieldOp::Add: return K.add(a, b);
    case FieldOp::Sub: return K.sub(a, b);
    case FieldOp::Mul: return K.mul(a, b);
    case FieldOp::Div: return K.div(a, b);
    }
    throw CASError("unknown field operation");
}

// ---------------------------------------------------------------- QQField

FieldElem QQField::add(const FieldElem& a, const FieldElem& b) const { return mpq_class(asQ(a) + asQ(b)); }
FieldElem QQField::sub(const FieldElem& a, const FieldElem& b) const { return mpq_class(asQ(a) - asQ(b)); }
FieldElem QQField::mul(const FieldElem& a, const FieldElem& b) const { return mpq_class(asQ(a) * asQ(b)); }

FieldElem QQField::div(const FieldElem& a, const FieldElem& b) const {
    if (asQ(b) == 0) throw DivisionByZero();
    return mpq_class(asQ(a) / asQ(b));
}

FieldElem QQField::neg(const FieldElem& a) const { return mpq_class(-asQ(a)); }
bool QQField::isZero(const FieldElem& a) const { return asQ(a) == 0; }

std::optional<mpq_class> QQField::displayRational(const FieldElem& a) const { return asQ(a); }

// ---------------------------------------------------------------- FpField

FpField::FpField(mpz_class p) : p_(std::move(p)) {
    if (p_ < 2) throw CASError("prime field modulus must be >= 2");
    if (!IsProbablePrime(p_)) throw CASError("prime field modulus " + p_.get_str() + " is not prime");
}

bool FpField::sameField(const CoeffField& other) const {
    if (other.kind() != FieldKind::Fp) return false;
    return static_cast<const FpField&>(other).p_ == p_;
}

FieldElem FpField::fromInteger(const mpz_class& n) const {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), n.get_mpz_t(), p_.get_mpz_t());
    return r;
}

FieldElem FpField::fromRational(const mpq_class& q) const {
    FieldElem num = fromInteger(mpz_class(q.get_num()));
    FieldElem den = fromInteger(mpz_class(q.get_den()));
    return div(num, den);
}

FieldElem FpField::add(const FieldElem& a, const FieldElem& b) const {
    mpz_class r = asZ(a) + asZ(b);
    if (r >= p_) r -= p_;
    return r;
}

FieldElem FpField::sub(const FieldElem& a, const FieldElem& b) const {
    mpz_class r = asZ(a) - asZ(b);
    if (r < 0) r += p_;
    return r;
}

FieldElem FpField::mul(const FieldElem& a, const FieldElem& b) const {
    mpz_class r = asZ(a) * asZ(b);
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), p_.get_mpz_t());
    return r;
}

FieldElem FpField::div(const FieldElem& a, const FieldElem& b) const {
    if (asZ(b) == 0) throw DivisionByZero();
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), asZ(b).get_mpz_t(), p_.get_mpz_t()) == 0)
        throw DivisionByZero();
    return mul(a, FieldElem(inv));
}

FieldElem FpField::neg(const FieldElem& a) const {
    if (asZ(a) == 0) return mpz_class(0);
    return mpz_class(p_ - asZ(a));
}

bool FpField::isZero(const FieldElem& a) const { return asZ(a) == 0; }

mpz_class FpField::symmetricLift(const FieldElem& a) const {
    const mpz_class& v = asZ(a);
    if (2 * v > p_) return mpz_class(v - p_);
    return v;
}

std::optional<mpq_class> FpField::displayRational(const FieldElem& a) const {
    return mpq_class(symmetricLift(a));
}

// --------------------------------------------------------- TwinFloatField

TwinFloatField::TwinFloatField(long bits) : bits_(bits) {
    if (bits < 8) throw CASError("twin-float precision must be >= 8 bits");
}

bool TwinFloatField::sameField(const CoeffField& other) const {
    if (other.kind() != FieldKind::TwinFloat) return false;
    return static_cast<const TwinFloatField&>(other).bits_ == bits_;
}

FieldElem TwinFloatField::fromRational(const mpq_class& q) const {
    TwinValue v{MpfrFloat::fromRational(q, primaryPrec()), MpfrFloat::fromRational(q, shadowPrec()),
                -std::numeric_limits<double>::infinity()};
    if (!v.primary.isZero()) v.scaleLog = static_cast<double>(v.primary.exponent());
    return v;
}

bool TwinFloatField::zeroish(const MpfrFloat& x, double scaleLog) const {
    if (x.isZero()) return true;
    return static_cast<double>(x.exponent()) <= scaleLog - static_cast<double>(bits_) / 2.0;
}

void TwinFloatField::validate(const TwinValue& v) const {
    const bool zp = zeroish(v.primary, v.scaleLog);
    const bool zs = zeroish(v.shadow, v.scaleLog);
    if (zp && zs) return;
    if (zp != zs)
        throw InsufficientPrecision("twin-float copies disagree about zeroness");
    if (v.primary.sign() != v.shadow.sign())
        throw InsufficientPrecision("twin-float copies disagree in sign");
    MpfrFloat d(shadowPrec());
    mpfr_sub(d.raw(), v.primary.raw(), v.shadow.raw(), MPFR_RNDN);
    if (d.isZero()) return;
    long top = std::max(v.primary.exponent(), v.shadow.exponent());
    if (d.exponent() > top - bits_)
        throw InsufficientPrecision("twin-float copies agree to fewer than the requested bits");
}

TwinValue TwinFloatField::apply(int op, const TwinValue& a, const TwinValue& b) const {
    TwinValue r{MpfrFloat(primaryPrec()), MpfrFloat(shadowPrec()), 0.0};
    switch (op) {
    case 0:
        mpfr_add(r.primary.raw(), a.primary.raw(), b.primary.raw(), MPFR_RNDN);
        mpfr_add(r.shadow.raw(), a.shadow.raw(), b.shadow.raw(), MPFR_RNDN);
        r.scaleLog = std::max(a.scaleLog, b.scaleLog);
        break;
    case 1:
        mpfr_sub(r.primary.raw(), a.primary.raw(), b.primary.raw(), MPFR_RNDN);
        mpfr_sub(r.shadow.raw(), a.shadow.raw(), b.shadow.raw(), MPFR_RNDN);
        r.scaleLog = std::max(a.scaleLog, b.scaleLog);
        break;
    case 2:
        mpfr_mul(r.primary.raw(), a.primary.raw(), b.primary.raw(), MPFR_RNDN);
        mpfr_mul(r.shadow.raw(), a.shadow.raw(), b.shadow.raw(), MPFR_RNDN);
        r.scaleLog = a.scaleLog + b.scaleLog;
        break;
    case 3:
        mpfr_div(r.primary.raw(), a.primary.raw(), b.primary.raw(), MPFR_RNDN);
        mpfr_div(r.shadow.raw(), a.shadow.raw(), b.shadow.raw(), MPFR_RNDN);
        r.scaleLog = a.scaleLog - b.scaleLog;
        break;
    }
    if (!r.primary.isZero())
        r.scaleLog = std::max(r.scaleLog, static_cast<double>(r.primary.exponent()));
    validate(r);
    return r;
}

FieldElem TwinFloatField::add(const FieldElem& a, const FieldElem& b) const { return apply(0, asT(a), asT(b)); }
FieldElem TwinFloatField::sub(const FieldElem& a, const FieldElem& b) const { return apply(1, asT(a), asT(b)); }
FieldElem TwinFloatField::mul(const FieldElem& a, const FieldElem& b) const { return apply(2, asT(a), asT(b)); }

FieldElem TwinFloatField::div(const FieldElem& a, const FieldElem& b) const {
    if (isZero(b)) throw DivisionByZero();
    return apply(3, asT(a), asT(b));
}

FieldElem TwinFloatField::neg(const FieldElem& a) const {
    TwinValue r = asT(a);
    mpfr_neg(r.primary.raw(), r.primary.raw(), MPFR_RNDN);
    mpfr_neg(r.shadow.raw(), r.shadow.raw(), MPFR_RNDN);
    return r;
}

bool TwinFloatField::isZero(const FieldElem& a) const {
    const TwinValue& v = asT(a);
    const bool zp = zeroish(v.primary, v.scaleLog);
    const bool zs = zeroish(v.shadow, v.scaleLog);
    if (zp && zs) return true;
    if (!zp && !zs) return false;
    throw InsufficientPrecision("twin-float zero test is undecided");
}

bool IsZeroHeuristic(const TwinFloatField& K, const FieldElem& a) { return K.isZero(a); }

namespace {

// Exact value of a binary float as a rational.
mpq_class dyadicValue(const MpfrFloat& x) {
    mpz_class m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x.raw());
    mpq_class v(m);
    if (e >= 0) {
        mpz_class two = 1;
        two <<= static_cast<unsigned long>(e);
        v *= two;
    } else {
        mpz_class two = 1;
        two <<= static_cast<unsigned long>(-e);
        v /= two;
    }
    return v;
}

mpq_class pow2q(long e) {
    mpz_class two = 1;
    two <<= static_cast<unsigned long>(e >= 0 ? e : -e);
    return e >= 0 ? mpq_class(two) : mpq_class(1, two);
}

// First continued-fraction convergent of x approximating it to within
// 2^(exp(x) - prec + 4); nullopt if none shows up.
std::optional<mpq_class> recoverRational(const MpfrFloat& x, mpfr_prec_t prec) {
    if (x.isZero()) return mpq_class(0);
    const mpq_class X = dyadicValue(x);
    const mpq_class tol = pow2q(x.exponent() - static_cast<long>(prec) + 4);

    mpz_class p0 = 1, q0 = 0;
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), X.get_num_mpz_t(), X.get_den_mpz_t());
    mpz_class p1 = a, q1 = 1;
    mpq_class frac = X - mpq_class(a);
    for (int iter = 0; iter < 4 * static_cast<int>(prec); ++iter) {
        mpq_class conv(p1, q1);
        conv.canonicalize();
        if (abs(X - conv) <= tol) return conv;
        if (frac == 0) return std::nullopt;
        mpq_class r = 1 / frac;
        mpz_fdiv_q(a.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
        frac = r - mpq_class(a);
        mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    }
    return std::nullopt;
}

} // namespace

mpq_class TwinFloatToRational(const TwinFloatField& K, const FieldElem& a) {
    const TwinValue& v = std::get<TwinValue>(a);
    const long b = K.precisionBits();
    auto rp = recoverRational(v.primary, static_cast<mpfr_prec_t>(b + TwinFloatField::kGuardBits));
    auto rs = recoverRational(v.shadow, static_cast<mpfr_prec_t>(b + 2 * TwinFloatField::kGuardBits));
    if (!rp || !rs || *rp != *rs)
        throw InsufficientPrecision("twin-float value is not recognizably rational");
    mpz_class height = abs(rp->get_num()) * rp->get_den();
    mpz_class bound = 1;
    bound <<= static_cast<unsigned long>(2 * b);
    if (height >= bound)
        throw InsufficientPrecision("recovered rational exceeds the precision bound");
    return *rp;
}

std::optional<mpq_class> TwinFloatField::displayRational(const FieldElem& a) const {
    try {
        return TwinFloatToRational(*this, a);
    } catch (const InsufficientPrecision&) {
        return std::nullopt;
    }
}

std::string TwinFloatField::formatFloat(const TwinValue& a) const {
    if (a.primary.isZero()) return "0";
    const int digits = static_cast<int>(std::ceil(2.0 * static_cast<double>(bits_) * 0.30102999566398
                                                  ));
    mpfr_exp_t e = 0;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), a.primary.raw(), MPFR_RNDN);
    std::string text(s);
    mpfr_free_str(s);
    std::string sign;
    if (!text.empty() && text[0] == '-') {
        sign = "-";
        text.erase(0, 1);
    }
    while (text.size() > 1 && text.back() == '0') text.pop_back();
    std::string out = sign + "0." + text;
    if (e != 0) out += "*10^" + std::to_string(static_cast<long>(e));
    return out;
}

std::string TwinFloatField::format(const FieldElem& a) const {
    auto q = displayRational(a);
    if (q) return rationalText(*q);
    return formatFloat(std::get<TwinValue>(a));
}

// ------------------------------------------------------------- factories

CoeffFieldPtr MakeQQ() {
    static CoeffFieldPtr qq = std::make_shared<QQField>();
    return qq;
}

CoeffFieldPtr MakeFp(const mpz_class& p) { return std::make_shared<FpField>(p); }

CoeffFieldPtr MakeTwinFloat(long bits) { return std::make_shared<TwinFloatField>(bits); }

// ------------------------------------------------------------ primality

bool IsProbablePrime(const mpz_class& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) return false;
    }
    // n-1 = d * 2^s
    mpz_class d = n - 1;
    unsigned long s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(0x5eedULL);
    const mpz_class nm3 = n - 3;
    for (int round = 0; round < 64; ++round) {
        mpz_class base = rng.get_z_range(nm3) + 2; // in [2, n-2]
        mpz_class x;
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned long i = 0; i + 1 < s; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

} // namespace gforge
