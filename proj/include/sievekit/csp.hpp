#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sievekit/bigint.hpp"
#include "sievekit/cycint.hpp"
#include "sievekit/errors.hpp"
#include "sievekit/qexpr.hpp"

namespace sievekit {

// Finite set with a cyclic action, as canonical keys plus the action as an
// index permutation.
struct CyclicFamily {
    long order = 1;              // n, the order of the acting group
    std::vector<std::string> keys;
    std::vector<long> act;       // act[i] = index of the rotated element

    long fixed_count(long power) const; // fixed points of act^power
    std::vector<std::vector<long>> orbits() const;
    // orbit census: stabilizer order -> number of orbits
    std::map<long, long> census() const;
};

template <typename T, typename Rot, typename Key>
CyclicFamily make_family(const std::vector<T>& elements, long order, Rot rotate, Key key) {
    CyclicFamily fam;
    fam.order = order;
    std::map<std::string, long> index;
    for (const T& e : elements) {
        std::string k = key(e);
        if (!index.emplace(k, static_cast<long>(fam.keys.size())).second)
            throw InvalidInputError("make_family: duplicate element key");
        fam.keys.push_back(std::move(k));
    }
    fam.act.resize(elements.size());
    for (size_t i = 0; i < elements.size(); ++i) {
        auto it = index.find(key(rotate(elements[i])));
        if (it == index.end())
            throw InvalidInputError("make_family: action leaves the element set");
        fam.act[i] = it->second;
    }
    return fam;
}

struct CspDivisorRecord {
    long d;      // root order n / gcd(n, k)
    Int eval;    // X(zeta_d)
    Int fixed;   // fixed points of the corresponding power
    bool match;
};

struct CspReport {
    bool size_match = false; // X(1) == |X|
    std::vector<CspDivisorRecord> divisors;
    std::map<long, long> orbit_census;
    bool coefficients_checked = false; // mod q^n - 1 coefficients vs census
    bool coefficients_match = false;
    std::vector<Int> reduced_coefficients;
    bool all_match() const;
};

// Checks X(zeta_d) = #fixed points for every divisor, and (when the sum
// expands to a polynomial) the reduced coefficients against the orbit census.
CspReport verify_csp(const CyclicFamily& fam, const QExprSum& poly);

Int class_count(const CyclicFamily& fam); // number of orbits (Burnside-checked)
Int class_count_from_poly(const QExprSum& poly, long n, long i);

// ---- Stanton's conjecture ----------------------------------------------

// exponent statistic on the decreasing partition lambda(mu)
using StantonExponent = std::function<long(const std::vector<long>&)>;

// calibrated default: b(mu) = 2 * sum_t t * lambda_t, lambda decreasing
long stanton_b_default(const std::vector<long>& lambda_desc);

struct StantonResult {
    bool ok = true;
    bool q1_identity = true;
    std::optional<long> first_diff_exponent;
    Int lhs_coeff = 0, rhs_coeff = 0;
};

// q^{2n+k(k-1)} [n-1 choose k-1]_q  ==  sum over partitions lambda of n into
// k parts of q^{b(lambda)} [k choose mu(lambda)]_q
StantonResult stanton_check(long n, long k, const StantonExponent& b);

std::vector<std::vector<long>> partitions_into(long n, long k); // decreasing parts

// named candidate readings of the exponent statistic, for the checker report
std::vector<std::pair<std::string, StantonExponent>> stanton_candidates();

// Reiner-Stanton-White and Eu-Fu sieving polynomials
QExpr rsw_poly(long n, long k);
QExpr eufu_poly(long s, long n, long k);

} // namespace sievekit
