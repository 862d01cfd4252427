#pragma once

#include <string>
#include <vector>

#include "sievekit/bigint.hpp"
#include "sievekit/intpoly.hpp"

namespace sievekit {

// A product expression  scalar * q^qpower * prod [j]_q (j in num) / prod [j]_q (j in den).
// num/den are multisets kept as sorted vectors with common entries cancelled.
// Nothing here assumes the quotient is a polynomial; expand() finds out.
class QExpr {
  public:
    QExpr() : scalar_(1), qpower_(0) {}
    QExpr(Int scalar, long qpower, std::vector<long> num, std::vector<long> den);

    static QExpr one() { return QExpr{}; }
    static QExpr from_q_int(long n);
    static QExpr from_q_binom(long n, long k);
    // [k choose parts]_q, sum(parts) must equal k
    static QExpr q_multinomial(long k, std::span<const long> parts);

    QExpr operator*(const QExpr& o) const;
    QExpr times_scalar(const Int& s) const;
    QExpr times_q_power(long e) const;
    // divide by [j]_q (pushes j into den, then cancels)
    QExpr over_q_int(long j) const;

    const Int& scalar() const { return scalar_; }
    long qpower() const { return qpower_; }
    const std::vector<long>& num() const { return num_; }
    const std::vector<long>& den() const { return den_; }

    // Exact expansion to a polynomial; throws NonPolynomialError when any
    // division step leaves a remainder.
    IntPoly expand() const;

    // Value at q = 1 (always defined for cancelled integer quotients; throws
    // NonIntegralError otherwise).
    Int value_at_one() const;

    bool operator==(const QExpr& o) const = default;
    std::string to_string() const;

  private:
    void canonicalize();
    Int scalar_;
    long qpower_;
    std::vector<long> num_, den_;
};

// A formal sum of QExpr terms, for polynomials like t_n(q) that are not a
// single product.
using QExprSum = std::vector<QExpr>;

IntPoly expand(const QExprSum& terms);
Int value_at_one(const QExprSum& terms);

} // namespace sievekit
