#include "sievekit/cycint.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "sievekit/errors.hpp"

namespace sievekit {

namespace {
std::mutex g_phi_mutex;
std::map<long, IntPoly> g_phi_cache;

IntPoly cyclotomic_uncached(long M) {
    // q^M - 1 divided by Phi_d for all proper divisors d of M
    std::vector<Int> c(static_cast<size_t>(M) + 1, 0);
    c[0] = -1;
    c.back() = 1;
    IntPoly p{std::move(c)};
    for (long d = 1; d < M; ++d) {
        if (M % d != 0) continue;
        auto q = p.divide_exact(CycInt::cyclotomic(d));
        if (!q) throw std::logic_error("cyclotomic: inexact division");
        p = std::move(*q);
    }
    return p;
}
} // namespace

const IntPoly& CycInt::cyclotomic(long M) {
    if (M < 1) throw InvalidInputError("cyclotomic: order must be >= 1");
    {
        std::lock_guard<std::mutex> lk(g_phi_mutex);
        auto it = g_phi_cache.find(M);
        if (it != g_phi_cache.end()) return it->second;
    }
    IntPoly p = cyclotomic_uncached(M);
    std::lock_guard<std::mutex> lk(g_phi_mutex);
    return g_phi_cache.emplace(M, std::move(p)).first->second;
}

long CycInt::phi(long M) { return cyclotomic(M).degree(); }

CycInt::CycInt(long order, std::vector<Int> coeffs) : order_(order), c_(std::move(coeffs)) {
    if (order_ < 1) throw InvalidInputError("CycInt: order must be >= 1");
    c_.resize(static_cast<size_t>(phi(order_)), 0);
}

CycInt CycInt::reduce(long M, const IntPoly& p) {
    const IntPoly& phiM = cyclotomic(M);
    long deg = phiM.degree();
    std::vector<Int> rem(p.coeffs());
    for (long i = static_cast<long>(rem.size()) - 1; i >= deg; --i) {
        Int c = rem[static_cast<size_t>(i)];
        if (c == 0) continue;
        rem[static_cast<size_t>(i)] = 0;
        // subtract c * q^{i-deg} * Phi_M (monic)
        for (long j = 0; j < deg; ++j)
            rem[static_cast<size_t>(i - deg + j)] -= c * phiM.coeff(j);
    }
    rem.resize(static_cast<size_t>(deg), 0);
    return CycInt(M, std::move(rem));
}

CycInt CycInt::zero(long M) { return CycInt(M, {}); }

CycInt CycInt::integer(long M, Int v) {
    std::vector<Int> c(static_cast<size_t>(phi(M)), 0);
    if (!c.empty()) c[0] = std::move(v);
    else if (v != 0) throw std::logic_error("CycInt::integer: phi(M) == 0");
    return CycInt(M, std::move(c));
}

CycInt CycInt::zeta_power(long M, long e) {
    e %= M;
    if (e < 0) e += M;
    return reduce(M, IntPoly::q_power(e));
}

CycInt CycInt::from_poly(long M, const IntPoly& p) { return reduce(M, p); }

CycInt CycInt::lambda(long p, long M) {
    if (p < 1) throw InvalidInputError("lambda: p must be >= 1");
    // 2cos(pi/p) is rational for p <= 3
    if (p == 1) return integer(M, -2);
    if (p == 2) return zero(M);
    if (p == 3) return one(M);
    if (M % (2 * p) != 0) throw InvalidInputError("lambda: 2p must divide the ring order");
    long step = M / (2 * p);
    return zeta_power(M, step) + zeta_power(M, M - step);
}

CycInt CycInt::promote(long M2) const {
    if (M2 == order_) return *this;
    if (M2 % order_ != 0) throw InvalidInputError("promote: old order must divide new order");
    long step = M2 / order_;
    std::vector<Int> big(static_cast<size_t>(order_) * static_cast<size_t>(step), 0);
    for (size_t i = 0; i < c_.size(); ++i) big[i * static_cast<size_t>(step)] = c_[i];
    return reduce(M2, IntPoly(std::move(big)));
}

CycInt CycInt::operator+(const CycInt& o) const {
    if (order_ != o.order_) {
        long M = std::lcm(order_, o.order_);
        return promote(M) + o.promote(M);
    }
    std::vector<Int> c = c_;
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
    return CycInt(order_, std::move(c));
}

CycInt CycInt::operator-(const CycInt& o) const { return *this + (-o); }

CycInt CycInt::operator-() const {
    std::vector<Int> c = c_;
    for (Int& v : c) v = -v;
    return CycInt(order_, std::move(c));
}

CycInt CycInt::operator*(const CycInt& o) const {
    if (order_ != o.order_) {
        long M = std::lcm(order_, o.order_);
        return promote(M) * o.promote(M);
    }
    return reduce(order_, IntPoly(c_) * IntPoly(o.c_));
}

bool CycInt::operator==(const CycInt& o) const {
    if (order_ == o.order_) return c_ == o.c_;
    long M = std::lcm(order_, o.order_);
    return promote(M).c_ == o.promote(M).c_;
}

bool CycInt::is_zero() const {
    for (const Int& v : c_)
        if (v != 0) return false;
    return true;
}

bool CycInt::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Int CycInt::embed_rational() const {
    if (!is_rational())
        throw NotRationalError("embed_rational: element is not a rational integer");
    return c_.empty() ? Int(0) : c_[0];
}

CycInt CycInt::conjugate(long k) const {
    k %= order_;
    if (k < 0) k += order_;
    if (std::gcd(k, order_) != 1)
        throw InvalidInputError("conjugate: exponent not coprime to the order");
    std::vector<Int> big(static_cast<size_t>(order_), 0);
    for (size_t i = 0; i < c_.size(); ++i)
        big[(i * static_cast<size_t>(k)) % static_cast<size_t>(order_)] += c_[i];
    return reduce(order_, IntPoly(std::move(big)));
}

std::optional<CycInt> CycInt::divide_exact(const CycInt& d) const {
    if (order_ != d.order_) {
        long M = std::lcm(order_, d.order_);
        return promote(M).divide_exact(d.promote(M));
    }
    if (d.is_zero()) throw InvalidInputError("divide_exact: division by zero");
    if (is_zero()) return zero(order_);
    // multiply by the product of the other Galois conjugates of d, then divide
    // by the rational norm
    CycInt adj = one(order_);
    for (long k = 2; k <= order_; ++k) {
        if (std::gcd(k, order_) != 1) continue;
        adj *= d.conjugate(k);
    }
    CycInt norm_el = d * adj;
    if (!norm_el.is_rational()) throw std::logic_error("divide_exact: norm is not rational");
    Int norm = norm_el.embed_rational();
    if (norm == 0) throw InvalidInputError("divide_exact: division by zero divisor");
    CycInt num = *this * adj;
    std::vector<Int> c = num.c_;
    for (Int& v : c) {
        if (v % norm != 0) return std::nullopt;
        v /= norm;
    }
    return CycInt(order_, std::move(c));
}

RealApprox CycInt::to_real_approx() const {
    const long double pi = 3.14159265358979323846264338327950288L;
    std::complex<long double> zeta(std::cos(2 * pi / order_), std::sin(2 * pi / order_));
    std::complex<long double> acc(0, 0);
    long double magsum = 0;
    for (size_t i = c_.size(); i-- > 0;) {
        acc *= zeta;
        long double cv = static_cast<long double>(c_[i].convert_to<double>());
        acc += cv;
        magsum += std::fabs(cv);
    }
    double err = static_cast<double>(magsum) * 1e-14 * (static_cast<double>(c_.size()) + 2) +
                 std::abs(static_cast<double>(acc.imag()));
    return RealApprox{static_cast<double>(acc.real()), err};
}

int CycInt::sign(double margin) const {
    if (is_zero()) return 0;
    RealApprox a = to_real_approx();
    if (a.value - a.error > margin) return 1;
    if (a.value + a.error < -margin) return -1;
    throw IndeterminateSignError("sign: value inside the numeric margin");
}

std::string CycInt::to_string() const {
    if (is_rational()) return embed_rational().str();
    // try a + b*sqrt(2) when 8 | order
    if (order_ % 8 == 0) {
        CycInt s = zeta_power(order_, order_ / 8) + zeta_power(order_, order_ - order_ / 8);
        // find b from the first nonzero non-constant coordinate of s
        for (size_t i = 1; i < s.c_.size(); ++i) {
            if (s.c_[i] == 0) continue;
            if (c_[i] % s.c_[i] != 0) break;
            Int b = c_[i] / s.c_[i];
            Int a = c_[0] - b * s.c_[0];
            if (*this == integer(order_, a) + s * integer(order_, b)) {
                std::ostringstream os;
                if (a != 0) os << a.str();
                if (b != 0) {
                    if (a != 0) os << (b > 0 ? "+" : "-");
                    else if (b < 0) os << "-";
                    Int ab = abs(b);
                    if (ab != 1) os << ab.str() << "*";
                    os << "sqrt(2)";
                }
                return os.str();
            }
            break;
        }
    }
    std::ostringstream os;
    os << "zeta" << order_ << "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i].str();
    }
    os << "]";
    return os.str();
}

CycInt eval_at_root(const QExpr& e, long d) {
    if (d < 1) throw InvalidInputError("eval_at_root: d must be >= 1");
    if (d == 1) return CycInt::integer(1, e.value_at_one());
    long zeros_num = 0, zeros_den = 0;
    for (long j : e.num())
        if (j % d == 0) ++zeros_num;
    for (long j : e.den())
        if (j % d == 0) ++zeros_den;
    if (zeros_num > zeros_den) return CycInt::zero(d);
    if (zeros_num < zeros_den)
        throw PoleError("eval_at_root: expression diverges at a primitive root of order " +
                        std::to_string(d));
    // [j]_q with d | j tends to [d]_q * (j/d); the [d]'s cancel, the j/d survive.
    Int int_num = e.scalar(), int_den = 1;
    CycInt num = CycInt::zeta_power(d, e.qpower());
    CycInt den = CycInt::one(d);
    for (long j : e.num()) {
        if (j % d == 0) int_num *= j / d;
        else num *= CycInt::from_poly(d, IntPoly::q_int(j)); // [j]_{zeta_d}, nonzero
    }
    for (long j : e.den()) {
        if (j % d == 0) int_den *= j / d;
        else den *= CycInt::from_poly(d, IntPoly::q_int(j));
    }
    num = num * CycInt::integer(d, int_num);
    den = den * CycInt::integer(d, int_den);
    auto q = num.divide_exact(den);
    if (!q)
        throw NonIntegralError("eval_at_root: value is not an algebraic integer in Z[zeta_d]");
    return *q;
}

CycInt eval_at_root(const QExprSum& terms, long d) {
    CycInt acc = CycInt::zero(d);
    for (const QExpr& t : terms) acc += eval_at_root(t, d);
    return acc;
}

} // namespace sievekit
