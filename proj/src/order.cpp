#include "gforge/order.hpp"

#include <algorithm>

namespace gforge {

PowerProduct::PowerProduct(std::vector<Exponent> exps) : e_(std::move(exps)) {
    for (Exponent v : e_)
        if (v < 0 || v > kMaxExponent) throw ExponentOverflow();
}

bool PowerProduct::isOne() const {
    return std::all_of(e_.begin(), e_.end(), [](Exponent v) { return v == 0; });
}

Exponent PowerProduct::totalDegree() const {
    Exponent d = 0;
    for (Exponent v : e_) d += v;
    return d;
}

Exponent PowerProduct::weightedDegree(const std::vector<Exponent>& weights) const {
    if (weights.size() != e_.size()) throw DimensionMismatch();
    Exponent d = 0;
    for (std::size_t i = 0; i < e_.size(); ++i) d += weights[i] * e_[i];
    return d;
}

PowerProduct PowerProduct::mul(const PowerProduct& o) const {
    if (o.size() != size()) throw DimensionMismatch();
    std::vector<Exponent> r(e_);
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] += o.e_[i];
        if (r[i] > kMaxExponent) throw ExponentOverflow();
    }
    PowerProduct p;
    p.e_ = std::move(r);
    return p;
}

bool PowerProduct::divides(const PowerProduct& o) const {
    if (o.size() != size()) throw DimensionMismatch();
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

PowerProduct PowerProduct::quotientBy(const PowerProduct& o) const {
    if (o.size() != size()) throw DimensionMismatch();
    std::vector<Exponent> r(e_);
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] -= o.e_[i];
        if (r[i] < 0) throw CASError("power-product quotient is not exact");
    }
    PowerProduct p;
    p.e_ = std::move(r);
    return p;
}

PowerProduct PowerProduct::lcm(const PowerProduct& o) const {
    if (o.size() != size()) throw DimensionMismatch();
    std::vector<Exponent> r(e_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(r[i], o.e_[i]);
    PowerProduct p;
    p.e_ = std::move(r);
    return p;
}

PowerProduct PowerProduct::gcd(const PowerProduct& o) const {
    if (o.size() != size()) throw DimensionMismatch();
    std::vector<Exponent> r(e_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::min(r[i], o.e_[i]);
    PowerProduct p;
    p.e_ = std::move(r);
    return p;
}

bool PowerProduct::coprimeWith(const PowerProduct& o) const {
    if (o.size() != size()) throw DimensionMismatch();
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > 0 && o.e_[i] > 0) return false;
    return true;
}

PowerProduct PowerProduct::power(Exponent k) const {
    if (k < 0) throw CASError("negative power of a power-product");
    std::vector<Exponent> r(e_);
    for (auto& v : r) {
        v *= k;
        if (v > kMaxExponent) throw ExponentOverflow();
    }
    PowerProduct p;
    p.e_ = std::move(r);
    return p;
}

PowerProduct PowerProduct::withExponent(std::size_t i, Exponent v) const {
    std::vector<Exponent> r(e_);
    r.at(i) = v;
    return PowerProduct(std::move(r));
}

int PowerProduct::lexCompare(const PowerProduct& a, const PowerProduct& b) {
    if (a.size() != b.size()) throw DimensionMismatch();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i] ? -1 : 1;
    }
    return 0;
}

OrderMatrix::OrderMatrix(std::vector<std::vector<long long>> rows, std::string label)
    : rows_(std::move(rows)), label_(std::move(label)) {
    if (!IsTermOrdering(rows_))
        throw InvalidMatrix("matrix does not define a term-ordering");
    for (const auto& row : rows_)
        for (long long v : row)
            if (v > kMaxExponent || v < -kMaxExponent)
                throw InvalidMatrix("order matrix entry too large");
}

Cmp OrderMatrix::compare(const PowerProduct& a, const PowerProduct& b) const {
    if (a.size() != size() || b.size() != size()) throw DimensionMismatch();
    for (const auto& row : rows_) {
        __int128 s = 0;
        for (std::size_t i = 0; i < row.size(); ++i)
            s += static_cast<__int128>(row[i]) * (a[i] - b[i]);
        if (s < 0) return Cmp::Less;
        if (s > 0) return Cmp::Greater;
    }
    return Cmp::Equal;
}

Cmp ComparePP(const OrderMatrix& m, const PowerProduct& a, const PowerProduct& b) {
    return m.compare(a, b);
}

OrderMatrix MakeLex(std::size_t n) {
    std::vector<std::vector<long long>> rows(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
    return OrderMatrix(std::move(rows), "lex");
}

OrderMatrix MakeStdDegRevLex(std::size_t n) {
    std::vector<std::vector<long long>> rows;
    rows.emplace_back(n, 1);
    for (std::size_t k = 1; k < n; ++k) {
        std::vector<long long> row(n, 0);
        row[n - k] = -1;
        rows.push_back(std::move(row));
    }
    return OrderMatrix(std::move(rows), "StdDegRevLex");
}

namespace {

// Rank over QQ of integer rows via exact elimination.
std::size_t rationalRank(std::vector<std::vector<mpq_class>> m) {
    std::size_t rank = 0;
    const std::size_t nrows = m.size();
    const std::size_t ncols = nrows == 0 ? 0 : m[0].size();
    for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
        std::size_t pivot = rank;
        while (pivot < nrows && m[pivot][col] == 0) ++pivot;
        if (pivot == nrows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = rank + 1; r < nrows; ++r) {
            if (m[r][col] == 0) continue;
            mpq_class f = m[r][col] / m[rank][col];
            for (std::size_t c = col; c < ncols; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<mpq_class>> toRational(const std::vector<std::vector<long long>>& m) {
    std::vector<std::vector<mpq_class>> r;
    r.reserve(m.size());
    for (const auto& row : m) {
        std::vector<mpq_class> qr;
        qr.reserve(row.size());
        for (long long v : row) qr.emplace_back(static_cast<long>(v));
        r.push_back(std::move(qr));
    }
    return r;
}

} // namespace

bool IsTermOrdering(const std::vector<std::vector<long long>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return false;
    for (const auto& row : m)
        if (row.size() != n) return false;
    for (std::size_t col = 0; col < n; ++col) {
        long long first = 0;
        for (std::size_t row = 0; row < n; ++row) {
            if (m[row][col] != 0) {
                first = m[row][col];
                break;
            }
        }
        if (first <= 0) return false;
    }
    return rationalRank(toRational(m)) == n;
}

OrderMatrix ElimMat(const std::set<std::size_t>& elim, std::size_t n) {
    if (elim.empty()) throw InvalidIndex("ElimMat: empty index set");
    for (std::size_t i : elim)
        if (i < 1 || i > n) throw InvalidIndex("ElimMat: index out of range");

    std::vector<std::vector<long long>> candidates;
    std::vector<long long> indicator(n, 0);
    for (std::size_t i : elim) indicator[i - 1] = 1;
    candidates.push_back(indicator);
    candidates.emplace_back(n, 1);
    for (std::size_t k = n; k >= 1; --k) {
        std::vector<long long> row(n, 0);
        row[k - 1] = -1;
        candidates.push_back(std::move(row));
    }

    // Greedily keep candidate rows that raise the rank until it reaches n.
    std::vector<std::vector<long long>> rows;
    for (const auto& cand : candidates) {
        if (rows.size() == n) break;
        auto probe = rows;
        probe.push_back(cand);
        if (rationalRank(toRational(probe)) == probe.size()) rows.push_back(cand);
    }
    return OrderMatrix(std::move(rows));
}

} // namespace gforge
