#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sievekit/bigint.hpp"
#include "sievekit/qexpr.hpp"

namespace sievekit {

using Diagonal = std::pair<int, int>;

// Noncrossing diagonal set on the convex polygon P_n, vertices v_0..v_{n-1}
// clockwise. Diagonals stored canonically as (i, j), i < j, j - i >= 2,
// (i, j) != (0, n-1), sorted.
struct Dissection {
    int n = 0;
    std::vector<Diagonal> diagonals;

    Dissection() = default;
    Dissection(int n_, std::vector<Diagonal> diags);

    // v_i -> v_{i-1}
    Dissection rotate() const;
    Dissection rotate(int steps) const;

    // Faces as sorted vertex lists; #faces = #diagonals + 1.
    std::vector<std::vector<int>> faces() const;

    // mu[i-1] = number of (i+2)-gon faces
    std::vector<long> type_vector() const;

    // largest d such that the dissection is invariant under rotation by n/d
    // steps (d runs over divisors of n)
    int symmetry_order() const;

    bool is_triangulation() const;
    std::string key() const;
    bool operator==(const Dissection& o) const = default;
    bool operator<(const Dissection& o) const;
};

struct TypeVector {
    std::vector<long> mu; // mu[i-1] = count of (i+2)-gons
    long k() const;       // total subgon count
    long n() const;       // sum i*mu_i; polygon has n+2 vertices
};

// All dissections of P_{n+2} with the given type, by recursive face peeling.
std::vector<Dissection> enumerate_by_type(const TypeVector& mu);

Int a_mu_count(const TypeVector& mu);
QExpr a_mu_poly(const TypeVector& mu);

// Dissections in A_mu invariant under rotation by (n+2)/d steps; d | (n+2).
std::vector<Dissection> fixed_points(const TypeVector& mu, int d);

// Closed-form fixed-point count from the two-binomial formulas (0 when the
// congruence conditions fail).
Int fixed_point_count_formula(const TypeVector& mu, int d);

// Encoding of d-fold symmetric dissections as weakly increasing start/size
// lists, in the one-residue-class case.
struct SymmetricCode {
    int d = 1;
    std::vector<std::pair<int, int>> pairs; // (a_i, e_i), a_i weakly increasing
    bool operator==(const SymmetricCode& o) const = default;
};

SymmetricCode encode_symmetric(const Dissection& T, int d);
Dissection decode_symmetric(const SymmetricCode& code, const TypeVector& mu, int d);

// All valid codes for (mu, d); their count is
// binom((n+2)/d + g - 1, g) * multinomial(g; floor(mu_i/d)).
std::vector<SymmetricCode> enumerate_codes(const TypeVector& mu, int d);

// All type vectors with sum i*mu_i == n (partitions of n).
std::vector<TypeVector> all_type_vectors(long n);

std::vector<int> divisors(int n);

} // namespace sievekit
