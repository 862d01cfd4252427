#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sievekit/bigint.hpp"

namespace sievekit {

// Dense integer polynomial in q, canonical form: highest coefficient nonzero
// (the zero polynomial has an empty coefficient vector).
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPoly zero() { return IntPoly{}; }
    static IntPoly constant(Int v);
    static IntPoly q_power(long e);

    // [n]_q = 1 + q + ... + q^{n-1}, n >= 1
    static IntPoly q_int(long n);

    // Gaussian binomial [n choose k]_q via the q-Pascal recursion
    static IntPoly q_binom(long n, long k);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Int& coeff(long i) const;
    const std::vector<Int>& coeffs() const { return c_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    Int eval(const Int& x) const;
    Int coeff_sum() const { return eval(1); }

    // Exact division; nullopt when a nonzero remainder is left.
    std::optional<IntPoly> divide_exact(const IntPoly& d) const;

    // Fold exponents mod n: coefficient i of the result is the sum of input
    // coefficients over exponents congruent to i mod n.
    IntPoly reduce_mod_qn_minus_1(long n) const;

    std::string to_string() const;

  private:
    void trim();
    std::vector<Int> c_;
};

} // namespace sievekit
