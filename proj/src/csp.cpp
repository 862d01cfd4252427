#include "sievekit/csp.hpp"

#include <algorithm>
#include <numeric>

#include "sievekit/dissect.hpp"
#include "sievekit/errors.hpp"

namespace sievekit {

long CyclicFamily::fixed_count(long power) const {
    power %= order;
    if (power < 0) power += order;
    long cnt = 0;
    for (size_t i = 0; i < act.size(); ++i) {
        long v = static_cast<long>(i);
        for (long t = 0; t < power; ++t) v = act[static_cast<size_t>(v)];
        if (v == static_cast<long>(i)) ++cnt;
    }
    return cnt;
}

std::vector<std::vector<long>> CyclicFamily::orbits() const {
    std::vector<bool> seen(act.size(), false);
    std::vector<std::vector<long>> out;
    for (size_t i = 0; i < act.size(); ++i) {
        if (seen[i]) continue;
        std::vector<long> orb;
        long v = static_cast<long>(i);
        while (!seen[static_cast<size_t>(v)]) {
            seen[static_cast<size_t>(v)] = true;
            orb.push_back(v);
            v = act[static_cast<size_t>(v)];
        }
        out.push_back(std::move(orb));
    }
    return out;
}

std::map<long, long> CyclicFamily::census() const {
    std::map<long, long> c;
    for (const auto& orb : orbits()) c[order / static_cast<long>(orb.size())] += 1;
    return c;
}

bool CspReport::all_match() const {
    if (!size_match) return false;
    for (const auto& r : divisors)
        if (!r.match) return false;
    return true;
}

CspReport verify_csp(const CyclicFamily& fam, const QExprSum& poly) {
    CspReport rep;
    long n = fam.order;
    rep.size_match = value_at_one(poly) == Int(fam.keys.size());
    rep.orbit_census = fam.census();
    for (long d : divisors(static_cast<int>(n))) {
        CycInt v = eval_at_root(poly, d);
        if (!v.is_rational())
            throw NotRationalError("verify_csp: evaluation at zeta_" + std::to_string(d) +
                                   " is not a rational integer");
        Int ev = v.embed_rational();
        Int fixed = fam.fixed_count(n / d);
        rep.divisors.push_back({d, ev, fixed, ev == fixed});
    }
    try {
        IntPoly p = expand(poly).reduce_mod_qn_minus_1(n);
        rep.coefficients_checked = true;
        rep.coefficients_match = true;
        for (long i = 0; i < n; ++i) {
            rep.reduced_coefficients.push_back(p.coeff(i));
            Int want = 0;
            for (const auto& [stab, cnt] : rep.orbit_census)
                if (i % stab == 0) want += cnt; // stabilizer order divides i (0: all)
            if (p.coeff(i) != want) rep.coefficients_match = false;
        }
    } catch (const NonPolynomialError&) {
        rep.coefficients_checked = false;
    }
    return rep;
}

Int class_count(const CyclicFamily& fam) {
    Int direct = static_cast<long>(fam.orbits().size());
    Int burnside = 0;
    for (long k = 0; k < fam.order; ++k) burnside += fam.fixed_count(k);
    if (burnside % fam.order != 0 || burnside / fam.order != direct)
        throw std::logic_error("class_count: Burnside count disagrees with direct orbit count");
    return direct;
}

Int class_count_from_poly(const QExprSum& poly, long n, long i) {
    IntPoly p = expand(poly).reduce_mod_qn_minus_1(n);
    return p.coeff(((i % n) + n) % n);
}

long stanton_b_default(const std::vector<long>& lambda_desc) {
    long b = 0;
    for (size_t t = 0; t < lambda_desc.size(); ++t)
        b += 2 * static_cast<long>(t + 1) * lambda_desc[t];
    return b;
}

std::vector<std::vector<long>> partitions_into(long n, long k) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    auto rec = [&](auto&& self, long rem, long parts, long maxp) -> void {
        if (parts == 0) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        for (long p = std::min(rem - parts + 1, maxp); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, parts - 1, p);
            cur.pop_back();
        }
    };
    rec(rec, n, k, n);
    return out;
}

namespace {
std::vector<long> type_of_partition(const std::vector<long>& lambda, long n) {
    std::vector<long> mu(static_cast<size_t>(n), 0);
    for (long p : lambda) mu[static_cast<size_t>(p - 1)] += 1;
    return mu;
}
} // namespace

StantonResult stanton_check(long n, long k, const StantonExponent& b) {
    if (k < 1 || n < k) throw InvalidInputError("stanton_check: need 1 <= k <= n");
    StantonResult res;
    IntPoly lhs = QExpr::from_q_binom(n - 1, k - 1).expand() *
                  IntPoly::q_power(2 * n + k * (k - 1));
    IntPoly rhs;
    Int rhs_at_one = 0;
    for (const auto& lambda : partitions_into(n, k)) {
        std::vector<long> mu = type_of_partition(lambda, n);
        std::vector<long> parts;
        for (long v : mu)
            if (v > 0) parts.push_back(v);
        QExpr term = QExpr::q_multinomial(k, parts);
        rhs_at_one += term.value_at_one();
        rhs += term.expand() * IntPoly::q_power(b(lambda));
    }
    res.q1_identity = rhs_at_one == binomial(n - 1, k - 1);
    if (lhs == rhs) return res;
    res.ok = false;
    long hi = std::max(lhs.degree(), rhs.degree());
    for (long e = 0; e <= hi; ++e) {
        if (lhs.coeff(e) != rhs.coeff(e)) {
            res.first_diff_exponent = e;
            res.lhs_coeff = lhs.coeff(e);
            res.rhs_coeff = rhs.coeff(e);
            break;
        }
    }
    return res;
}

std::vector<std::pair<std::string, StantonExponent>> stanton_candidates() {
    std::vector<std::pair<std::string, StantonExponent>> out;
    out.emplace_back("default", stanton_b_default);
    // literal printed reading: 2k*l1 + 2(k-1)*l2 + ... + 2*l_{k-1} + l_k, lambda decreasing
    out.emplace_back("printed-descending", [](const std::vector<long>& l) {
        long k = static_cast<long>(l.size());
        long b = 0;
        for (long t = 1; t <= k; ++t) {
            long c = (t == k) ? 1 : (t == k - 1 ? 2 : 2 * (k - t + 1));
            b += c * l[static_cast<size_t>(t - 1)];
        }
        return b;
    });
    // even-coefficient reading without the trailing 1: 2k, 2(k-1), ..., 2
    out.emplace_back("even-descending", [](const std::vector<long>& l) {
        long k = static_cast<long>(l.size());
        long b = 0;
        for (long t = 1; t <= k; ++t) b += 2 * (k - t + 1) * l[static_cast<size_t>(t - 1)];
        return b;
    });
    return out;
}

QExpr rsw_poly(long n, long k) {
    if (n < 3 || k < 0 || k > n - 3) throw InvalidInputError("rsw_poly: need 0 <= k <= n-3");
    return (QExpr::from_q_binom(n + k, k + 1) * QExpr::from_q_binom(n - 3, k)).over_q_int(n + k);
}

QExpr eufu_poly(long s, long n, long k) {
    if (s < 1 || n < 1 || k < 0 || k > n - 1)
        throw InvalidInputError("eufu_poly: need s >= 1, 0 <= k <= n-1");
    return (QExpr::from_q_binom(s * n + k + 2, k + 1) * QExpr::from_q_binom(n - 1, k))
        .over_q_int(s * n + k + 2);
}

} // namespace sievekit
