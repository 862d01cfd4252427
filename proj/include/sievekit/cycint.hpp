#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sievekit/bigint.hpp"
#include "sievekit/intpoly.hpp"
#include "sievekit/qexpr.hpp"

namespace sievekit {

struct RealApprox {
    double value;
    double error;
};

// Element of Z[zeta_M], stored as a residue mod the M-th cyclotomic polynomial:
// coefficient vector of length phi(M) over the power basis 1, zeta, ..., zeta^{phi(M)-1}.
class CycInt {
  public:
    CycInt() : order_(1), c_(1, 0) {}
    CycInt(long order, std::vector<Int> coeffs);

    static const IntPoly& cyclotomic(long M); // cached, thread-safe
    static long phi(long M);

    static CycInt zero(long M);
    static CycInt one(long M) { return integer(M, 1); }
    static CycInt integer(long M, Int v);
    static CycInt zeta_power(long M, long e);
    // p(zeta_M), i.e. p reduced mod Phi_M
    static CycInt from_poly(long M, const IntPoly& p);
    // lambda_p = 2 cos(pi/p) = zeta_{2p} + zeta_{2p}^{-1}, embedded in Z[zeta_M]; needs 2p | M
    static CycInt lambda(long p, long M);

    long order() const { return order_; }
    const std::vector<Int>& coeffs() const { return c_; }

    // Lift into Z[zeta_M2] for order_ | M2.
    CycInt promote(long M2) const;

    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator*(const CycInt& o) const;
    CycInt operator-() const;
    CycInt& operator+=(const CycInt& o) { return *this = *this + o; }
    CycInt& operator-=(const CycInt& o) { return *this = *this - o; }
    CycInt& operator*=(const CycInt& o) { return *this = *this * o; }
    bool operator==(const CycInt& o) const;
    bool is_zero() const;

    bool is_rational() const;
    Int embed_rational() const; // throws NotRationalError

    // Galois map zeta -> zeta^k, gcd(k, order) = 1.
    CycInt conjugate(long k) const;

    // Exact division in Z[zeta_M]; nullopt when the quotient is not integral.
    std::optional<CycInt> divide_exact(const CycInt& d) const;

    // Numerical value under zeta_M -> exp(2*pi*i/M); `value` is the real part,
    // `error` bounds rounding plus any imaginary residue.
    RealApprox to_real_approx() const;
    // +1 / -1 / 0, using the real embedding with margin; throws
    // IndeterminateSignError inside the margin.
    int sign(double margin = 1e-9) const;

    std::string to_string() const; // integer, a+b*sqrt(2), or coefficient form

  private:
    static CycInt reduce(long M, const IntPoly& p);
    long order_;
    std::vector<Int> c_;
};

// Limit of a QExpr as q -> zeta_d, per the [g]/[h] splitting rule: factors [j]
// with d | j contribute [d] * (j/d), the [d]'s must cancel between num and den
// (more in num: value 0; more in den: PoleError). Result lives in Z[zeta_d].
CycInt eval_at_root(const QExpr& e, long d);
CycInt eval_at_root(const QExprSum& terms, long d);

} // namespace sievekit
