#pragma once

#include "gforge/errors.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace gforge {

using Exponent = std::int64_t;

// Exponents stay well below this so matrix comparisons fit in 128-bit
// accumulators.
constexpr Exponent kMaxExponent = Exponent(1) << 40;

// Exponent vector of fixed length (the ring's indeterminate count).
class PowerProduct {
public:
    PowerProduct() = default;
    explicit PowerProduct(std::size_t n) : e_(n, 0) {}
    explicit PowerProduct(std::vector<Exponent> exps);

    std::size_t size() const { return e_.size(); }
    Exponent operator[](std::size_t i) const { return e_[i]; }
    const std::vector<Exponent>& exponents() const { return e_; }

    bool isOne() const;
    Exponent totalDegree() const;
    Exponent weightedDegree(const std::vector<Exponent>& weights) const;

    PowerProduct mul(const PowerProduct& o) const;
    bool divides(const PowerProduct& o) const; // this | o
    PowerProduct quotientBy(const PowerProduct& o) const; // this / o, requires o | this
    PowerProduct lcm(const PowerProduct& o) const;
    PowerProduct gcd(const PowerProduct& o) const;
    bool coprimeWith(const PowerProduct& o) const;
    PowerProduct power(Exponent k) const;

    PowerProduct withExponent(std::size_t i, Exponent v) const;

    bool operator==(const PowerProduct& o) const { return e_ == o.e_; }
    bool operator!=(const PowerProduct& o) const { return e_ != o.e_; }

    // Descending lexicographic comparison on the raw exponent vector (used
    // only for canonical output ordering, never as a term-ordering).
    static int lexCompare(const PowerProduct& a, const PowerProduct& b);

private:
    std::vector<Exponent> e_;
};

enum class Cmp { Less = -1, Equal = 0, Greater = 1 };

// n x n integer matrix defining a term-ordering: full rank over QQ and every
// column's first nonzero entry (top-down) positive.
class OrderMatrix {
public:
    OrderMatrix(std::vector<std::vector<long long>> rows, std::string label = "");

    std::size_t size() const { return rows_.size(); }
    const std::vector<std::vector<long long>>& rows() const { return rows_; }
    const std::string& label() const { return label_; }

    Cmp compare(const PowerProduct& a, const PowerProduct& b) const;

    bool operator==(const OrderMatrix& o) const { return rows_ == o.rows_; }

private:
    std::vector<std::vector<long long>> rows_;
    std::string label_; // "lex", "StdDegRevLex", or empty for ad-hoc matrices
};

OrderMatrix MakeLex(std::size_t n);
OrderMatrix MakeStdDegRevLex(std::size_t n);

// Elimination ordering: row 1 is the indicator of `elim` (1-based indices),
// then the total-degree row and reverse-lex rows completing to full rank.
// Power-products meeting `elim` beat every power-product disjoint from it.
OrderMatrix ElimMat(const std::set<std::size_t>& elim, std::size_t n);

bool IsTermOrdering(const std::vector<std::vector<long long>>& m);

Cmp ComparePP(const OrderMatrix& m, const PowerProduct& a, const PowerProduct& b);

} // namespace gforge
