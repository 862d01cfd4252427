#include "sievekit/intpoly.hpp"

#include <sstream>
#include <stdexcept>

#include "sievekit/errors.hpp"

namespace sievekit {

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(Int v) {
    IntPoly p;
    if (v != 0) p.c_.push_back(std::move(v));
    return p;
}

IntPoly IntPoly::q_power(long e) {
    if (e < 0) throw InvalidInputError("q_power: negative exponent");
    IntPoly p;
    p.c_.assign(static_cast<size_t>(e) + 1, 0);
    p.c_.back() = 1;
    return p;
}

IntPoly IntPoly::q_int(long n) {
    if (n < 1) throw InvalidInputError("q_int: n must be >= 1");
    IntPoly p;
    p.c_.assign(static_cast<size_t>(n), 1);
    return p;
}

IntPoly IntPoly::q_binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) throw InvalidInputError("q_binom: need 0 <= k <= n");
    if (k > n - k) k = n - k;
    // row-by-row q-Pascal: [i choose j] = [i-1 choose j] + q^{i-j} [i-1 choose j-1]
    std::vector<IntPoly> row(static_cast<size_t>(k) + 1);
    row[0] = constant(1);
    for (long i = 1; i <= n; ++i) {
        for (long j = std::min(i, k); j >= 1; --j) {
            IntPoly shifted = row[j - 1] * q_power(i - j);
            row[j] = (j == i) ? constant(1) : row[j] + shifted;
        }
    }
    return row[k];
}

const Int& IntPoly::coeff(long i) const {
    static const Int kZero = 0;
    if (i < 0 || i >= static_cast<long>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.trim();
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    IntPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] -= o.c_[i];
    r.trim();
    return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    IntPoly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& d) const {
    if (d.is_zero()) throw InvalidInputError("divide_exact: division by zero polynomial");
    if (is_zero()) return IntPoly{};
    if (degree() < d.degree()) return std::nullopt;
    std::vector<Int> rem = c_;
    std::vector<Int> quo(static_cast<size_t>(degree() - d.degree()) + 1, 0);
    const Int& lead = d.c_.back();
    for (size_t i = quo.size(); i-- > 0;) {
        Int top = rem[i + d.c_.size() - 1];
        if (top == 0) continue;
        if (top % lead != 0) return std::nullopt;
        Int c = top / lead;
        quo[i] = c;
        for (size_t j = 0; j < d.c_.size(); ++j) rem[i + j] -= c * d.c_[j];
    }
    for (const Int& v : rem)
        if (v != 0) return std::nullopt;
    return IntPoly(std::move(quo));
}

IntPoly IntPoly::reduce_mod_qn_minus_1(long n) const {
    if (n < 1) throw InvalidInputError("reduce_mod_qn_minus_1: n must be >= 1");
    std::vector<Int> out(static_cast<size_t>(n), 0);
    for (size_t i = 0; i < c_.size(); ++i) out[i % static_cast<size_t>(n)] += c_[i];
    return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << (c_[i] > 0 ? " + " : " - ");
        else if (c_[i] < 0) os << "-";
        Int a = abs(c_[i]);
        if (a != 1 || i == 0) os << a.str();
        if (i >= 1) {
            os << "q";
            if (i >= 2) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

} // namespace sievekit
