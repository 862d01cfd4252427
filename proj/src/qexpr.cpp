#include "sievekit/qexpr.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sievekit/errors.hpp"

namespace sievekit {

QExpr::QExpr(Int scalar, long qpower, std::vector<long> num, std::vector<long> den)
    : scalar_(std::move(scalar)), qpower_(qpower), num_(std::move(num)), den_(std::move(den)) {
    if (qpower_ < 0) throw InvalidInputError("QExpr: qpower must be nonnegative");
    canonicalize();
}

void QExpr::canonicalize() {
    for (long j : num_)
        if (j < 1) throw InvalidInputError("QExpr: num entries must be >= 1");
    for (long j : den_)
        if (j < 1) throw InvalidInputError("QExpr: den entries must be >= 1");
    std::sort(num_.begin(), num_.end());
    std::sort(den_.begin(), den_.end());
    // cancel common entries (multiset difference)
    std::vector<long> n2, d2;
    size_t i = 0, j = 0;
    while (i < num_.size() && j < den_.size()) {
        if (num_[i] == den_[j]) { ++i; ++j; }
        else if (num_[i] < den_[j]) n2.push_back(num_[i++]);
        else d2.push_back(den_[j++]);
    }
    n2.insert(n2.end(), num_.begin() + i, num_.end());
    d2.insert(d2.end(), den_.begin() + j, den_.end());
    num_ = std::move(n2);
    den_ = std::move(d2);
    // [1]_q = 1 carries no information
    std::erase(num_, 1);
    std::erase(den_, 1);
}

QExpr QExpr::from_q_int(long n) {
    if (n < 1) throw InvalidInputError("from_q_int: n must be >= 1");
    return QExpr(1, 0, {n}, {});
}

QExpr QExpr::from_q_binom(long n, long k) {
    if (k < 0 || k > n) throw InvalidInputError("from_q_binom: need 0 <= k <= n");
    std::vector<long> num, den;
    for (long j = n - k + 1; j <= n; ++j) num.push_back(j);
    for (long j = 1; j <= k; ++j) den.push_back(j);
    return QExpr(1, 0, std::move(num), std::move(den));
}

QExpr QExpr::q_multinomial(long k, std::span<const long> parts) {
    long sum = 0;
    for (long p : parts) {
        if (p < 0) throw InvalidInputError("q_multinomial: parts must be nonnegative");
        sum += p;
    }
    if (sum != k) throw InvalidInputError("q_multinomial: parts must sum to k");
    std::vector<long> num, den;
    for (long j = 1; j <= k; ++j) num.push_back(j);
    for (long p : parts)
        for (long j = 1; j <= p; ++j) den.push_back(j);
    return QExpr(1, 0, std::move(num), std::move(den));
}

QExpr QExpr::operator*(const QExpr& o) const {
    std::vector<long> n = num_, d = den_;
    n.insert(n.end(), o.num_.begin(), o.num_.end());
    d.insert(d.end(), o.den_.begin(), o.den_.end());
    return QExpr(scalar_ * o.scalar_, qpower_ + o.qpower_, std::move(n), std::move(d));
}

QExpr QExpr::times_scalar(const Int& s) const {
    return QExpr(scalar_ * s, qpower_, num_, den_);
}

QExpr QExpr::times_q_power(long e) const {
    return QExpr(scalar_, qpower_ + e, num_, den_);
}

QExpr QExpr::over_q_int(long j) const {
    std::vector<long> d = den_;
    d.push_back(j);
    return QExpr(scalar_, qpower_, num_, d);
}

IntPoly QExpr::expand() const {
    IntPoly p = IntPoly::constant(scalar_);
    for (long j : num_) p *= IntPoly::q_int(j);
    for (long j : den_) {
        auto q = p.divide_exact(IntPoly::q_int(j));
        if (!q) throw NonPolynomialError("QExpr::expand: division by [" + std::to_string(j) +
                                         "]_q leaves a remainder");
        p = std::move(*q);
    }
    return p * IntPoly::q_power(qpower_);
}

Int QExpr::value_at_one() const {
    Int n = scalar_, d = 1;
    for (long j : num_) n *= j;
    for (long j : den_) d *= j;
    if (d == 0 || n % d != 0)
        throw NonIntegralError("QExpr::value_at_one: value is not an integer");
    return n / d;
}

std::string QExpr::to_string() const {
    std::ostringstream os;
    os << scalar_.str();
    if (qpower_ > 0) os << "*q^" << qpower_;
    for (long j : num_) os << "*[" << j << "]";
    for (long j : den_) os << "/[" << j << "]";
    return os.str();
}

IntPoly expand(const QExprSum& terms) {
    IntPoly p;
    for (const QExpr& t : terms) p += t.expand();
    return p;
}

Int value_at_one(const QExprSum& terms) {
    Int v = 0;
    for (const QExpr& t : terms) v += t.value_at_one();
    return v;
}

} // namespace sievekit
