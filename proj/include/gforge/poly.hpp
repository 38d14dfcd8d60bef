#pragma once

#include "gforge/coeff.hpp"
#include "gforge/order.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gforge {

class PolyRing;
using PolyRingPtr = std::shared_ptr<const PolyRing>;

struct Term {
    FieldElem coeff;
    PowerProduct pp;
};

// Sparse polynomial: terms strictly descending in the ring's ordering, no
// zero coefficients.  The zero polynomial has no terms.
class Polynomial {
public:
    Polynomial() = default;

    const PolyRingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    std::size_t termCount() const { return terms_.size(); }

    const Term& leadingTerm() const;
    const PowerProduct& leadingPP() const;
    const FieldElem& leadingCoeff() const;

private:
    friend class PolyRing;
    Polynomial(PolyRingPtr ring, std::vector<Term> terms)
        : ring_(std::move(ring)), terms_(std::move(terms)) {}

    PolyRingPtr ring_;
    std::vector<Term> terms_;
};

// The term-ordering (and grading) is an intrinsic property of the ring: two
// rings differing only in their ordering are distinct objects, and mixing
// elements across rings throws RingMismatch.
class PolyRing : public std::enable_shared_from_this<PolyRing> {
public:
    static PolyRingPtr create(CoeffFieldPtr field, std::vector<std::string> names,
                              OrderMatrix order, std::vector<Exponent> weights = {});

    const CoeffField& field() const { return *field_; }
    const CoeffFieldPtr& fieldPtr() const { return field_; }
    std::size_t indetCount() const { return names_.size(); }
    const std::vector<std::string>& indetNames() const { return names_; }
    std::optional<std::size_t> indexOfIndet(const std::string& name) const;
    const OrderMatrix& order() const { return order_; }
    const std::vector<Exponent>& weights() const { return weights_; }
    bool standardGrading() const;

    std::string description() const;

    Polynomial zero() const;
    Polynomial one() const;
    Polynomial constant(FieldElem c) const;
    Polynomial constant(const mpq_class& q) const;
    Polynomial indeterminate(std::size_t i) const;
    Polynomial monomial(FieldElem c, PowerProduct pp) const;
    // Normalizes: sorts descending, merges duplicates, drops zeros.
    Polynomial fromTerms(std::vector<Term> terms) const;

private:
    PolyRing(CoeffFieldPtr field, std::vector<std::string> names, OrderMatrix order,
             std::vector<Exponent> weights);

    CoeffFieldPtr field_;
    std::vector<std::string> names_;
    OrderMatrix order_;
    std::vector<Exponent> weights_;
};

void RequireSameRing(const Polynomial& a, const Polynomial& b);

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a);
Polynomial operator*(const Polynomial& a, const Polynomial& b);

Polynomial ScalarMul(const FieldElem& c, const Polynomial& f);
// f + c * t * g  (single merge; the reduction workhorse)
Polynomial AddScaledShifted(const Polynomial& f, const FieldElem& c, const PowerProduct& t,
                            const Polynomial& g);
Polynomial Power(const Polynomial& f, unsigned long k);

bool IsEqual(const Polynomial& a, const Polynomial& b);

Term LT(const Polynomial& f);
const PowerProduct& LPP(const Polynomial& f);
const FieldElem& LC(const Polynomial& f);

Exponent WeightedDeg(const Polynomial& f);
bool IsHomogeneous(const Polynomial& f);

// Multiplies each term by h^(D - wdeg(term)); h must have weight 1 and f be
// free of h.
Polynomial Homogenize(const Polynomial& f, std::size_t hIndex);
Polynomial Dehomogenize(const Polynomial& f, std::size_t hIndex);

// Substitution homomorphism fixing coefficients.
class RingHom {
public:
    RingHom(PolyRingPtr src, PolyRingPtr dst, std::vector<Polynomial> images);

    const PolyRingPtr& src() const { return src_; }
    const PolyRingPtr& dst() const { return dst_; }
    const std::vector<Polynomial>& images() const { return images_; }

    Polynomial apply(const Polynomial& f) const;

private:
    PolyRingPtr src_;
    PolyRingPtr dst_;
    std::vector<Polynomial> images_;
};

RingHom PolyAlgebraHom(PolyRingPtr src, PolyRingPtr dst, std::vector<Polynomial> images);

// Exact rational presentation of a coefficient (QQ value, Fp symmetric lift);
// throws for twin-float coefficients.
mpq_class ExactRational(const CoeffField& field, const FieldElem& c);

// Re-interpret f in `dst` (same indeterminate count): coefficients are
// converted exactly through their rational presentation.  Conversion into Fp
// throws DivisionByZero when a denominator vanishes mod p (a bad prime).
Polynomial ConvertToRing(const Polynomial& f, const PolyRingPtr& dst);

// Move f between rings along an indeterminate map: varMap[i] = index in dst
// of the i-th indeterminate of f's ring (or npos if that indeterminate must
// not occur in f).
Polynomial MapVars(const Polynomial& f, const PolyRingPtr& dst,
                   const std::vector<std::size_t>& varMap);

// --- normal forms of coefficients used by the Buchberger engine ---

// QQ: primitive integer coefficients with positive leading coefficient.
// Fp / TwinFloat: monic.
Polynomial NormalizeForBasis(const Polynomial& f);
Polynomial MakeMonic(const Polynomial& f);

} // namespace gforge
