#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <string>
#include <utility>

namespace gforge {

// Thin RAII wrapper around mpfr_t with a fixed precision per value.
class MpfrFloat {
public:
    explicit MpfrFloat(mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    MpfrFloat(const MpfrFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    MpfrFloat(MpfrFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    MpfrFloat& operator=(const MpfrFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    MpfrFloat& operator=(MpfrFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~MpfrFloat() { mpfr_clear(v_); }

    static MpfrFloat fromRational(const mpq_class& q, mpfr_prec_t prec) {
        MpfrFloat r(prec);
        mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
        return r;
    }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    bool isZero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    // MPFR convention: |x| in [2^(e-1), 2^e).  Only meaningful for nonzero x.
    long exponent() const { return static_cast<long>(mpfr_get_exp(v_)); }

private:
    mpfr_t v_;
};

// A value carried at two precisions.  `requested` is the user-visible
// precision b; the components hold extra guard bits (see TwinFloatField) so
// that rational recovery at the 2^(2b) acceptance bound is possible.
// `scaleLog` tracks (in log2) the largest magnitude seen among the operands
// that produced this value; the heuristic zero threshold is relative to it.
struct TwinValue {
    MpfrFloat primary;
    MpfrFloat shadow;
    double scaleLog;
};

} // namespace gforge
