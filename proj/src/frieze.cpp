#include "sievekit/frieze.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sievekit/errors.hpp"

namespace sievekit {

const CycInt& QuiddityRow::at(long i) const {
    long n = size();
    if (n == 0) throw InvalidInputError("QuiddityRow: empty row");
    long r = i % n;
    if (r < 0) r += n;
    return entries[static_cast<size_t>(r)];
}

long QuiddityRow::minimal_period() const {
    long n = size();
    for (long p = 1; p < n; ++p) {
        if (n % p != 0) continue;
        bool ok = true;
        for (long i = 0; i < n && ok; ++i)
            if (!(entries[static_cast<size_t>(i)] == at(i + p))) ok = false;
        if (ok) return p;
    }
    return n;
}

QuiddityRow QuiddityRow::shifted(long t) const {
    QuiddityRow out;
    for (long i = 0; i < size(); ++i) out.entries.push_back(at(i + t));
    return out;
}

CycInt frieze_window(const QuiddityRow& q, long lo, long len) {
    long M = q.ring_order();
    CycInt dm2 = CycInt::zero(M); // D_{-1}
    CycInt dm1 = CycInt::one(M);  // D_0
    for (long t = 0; t < len; ++t) {
        CycInt d = q.at(lo + t) * dm1 - dm2;
        dm2 = std::move(dm1);
        dm1 = std::move(d);
    }
    return dm1;
}

CycInt continuant(std::span<const CycInt> xs) {
    long M = xs.empty() ? 1 : xs.front().order();
    CycInt km2 = CycInt::zero(M);
    CycInt km1 = CycInt::one(M);
    for (const CycInt& x : xs) {
        CycInt k = x * km1 + km2;
        km2 = std::move(km1);
        km1 = std::move(k);
    }
    return km1;
}

FriezePattern::FriezePattern(long width, QuiddityRow quiddity)
    : width_(width), q_(std::move(quiddity)) {
    if (width_ < 3 || q_.size() != width_)
        throw InvalidInputError("FriezePattern: quiddity length must equal the width");
}

CycInt FriezePattern::value(long i, long j) const {
    if (j - i < 0 || j - i > width_)
        throw OutOfBandError("FriezePattern::value: j - i outside [0, width]");
    return extend_value(i, j);
}

CycInt FriezePattern::extend_value(long i, long j) const {
    if (j < i) throw InvalidInputError("extend_value: j must be >= i");
    if (j == i) return CycInt::zero(q_.ring_order());
    return frieze_window(q_, i + 1, j - i - 1);
}

FriezePattern FriezePattern::shift_rows(long t) const {
    return FriezePattern(width_, q_.shifted(t));
}

CycInt FriezePattern::principal_growth() const {
    long p = q_.minimal_period();
    CycInt s = extend_value(0, p + 1) - extend_value(1, p);
    for (long i = 1; i < width_; ++i) {
        CycInt si = extend_value(i, i + p + 1) - extend_value(i + 1, i + p);
        if (!(si == s))
            throw NonConstantError("principal_growth: differences disagree across the row");
    }
    return s;
}

InfiniteFrieze::InfiniteFrieze(QuiddityRow quiddity) : q_(std::move(quiddity)) {
    if (q_.size() < 1) throw InvalidInputError("InfiniteFrieze: empty quiddity row");
}

InfiniteFrieze InfiniteFrieze::from_quiddity_sample(std::vector<CycInt> entries) {
    long n = static_cast<long>(entries.size());
    if (n < 1) throw InvalidInputError("from_quiddity_sample: empty sample");
    for (long p = 1; p <= n; ++p) {
        bool ok = true;
        for (long i = p; i < n && ok; ++i)
            if (!(entries[static_cast<size_t>(i)] == entries[static_cast<size_t>(i - p)])) ok = false;
        if (ok) {
            entries.resize(static_cast<size_t>(p), entries.front());
            break;
        }
    }
    return InfiniteFrieze(QuiddityRow{std::move(entries)});
}

CycInt InfiniteFrieze::value(long i, long j) const {
    if (j < i) throw InvalidInputError("InfiniteFrieze::value: j must be >= i");
    if (j == i) return CycInt::zero(q_.ring_order());
    return frieze_window(q_, i + 1, j - i - 1);
}

CycInt InfiniteFrieze::growth_coefficient(long k) const {
    if (k < 1) throw InvalidInputError("growth_coefficient: k must be >= 1");
    long p = q_.minimal_period();
    CycInt s = value(0, p * k + 1) - value(1, p * k);
    for (long i = 1; i < q_.size(); ++i) {
        CycInt si = value(i, i + p * k + 1) - value(i + 1, i + p * k);
        if (!(si == s))
            throw NonConstantError("growth_coefficient: differences disagree across the row");
    }
    return s;
}

CycInt chebyshev_t(long k, const CycInt& x) {
    if (k < 0) throw InvalidInputError("chebyshev_t: k must be >= 0");
    CycInt t0 = CycInt::integer(x.order(), 2);
    if (k == 0) return t0;
    CycInt t1 = x;
    for (long i = 2; i <= k; ++i) {
        CycInt t2 = x * t1 - t0;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    return t1;
}

long frieze_ring_order(const std::vector<int>& subgon_sizes) {
    long M = 6;
    for (int p : subgon_sizes) M = std::lcm(M, 2L * p);
    return M;
}

FriezePattern frieze_from_dissection(const Dissection& T) {
    auto fcs = T.faces();
    std::vector<int> sizes;
    for (const auto& f : fcs) sizes.push_back(static_cast<int>(f.size()));
    long M = frieze_ring_order(sizes);
    std::vector<CycInt> q(static_cast<size_t>(T.n), CycInt::zero(M));
    for (const auto& f : fcs) {
        CycInt lam = CycInt::lambda(static_cast<long>(f.size()), M);
        for (int v : f) q[static_cast<size_t>(v)] += lam;
    }
    return FriezePattern(T.n, QuiddityRow{std::move(q)});
}

InfiniteFrieze frieze_from_punctured(const PuncturedDissection& T) {
    long M = frieze_ring_order({T.m + 2});
    CycInt lam = CycInt::lambda(T.m + 2, M);
    StripLift L = lift_to_strip(T, 2);
    std::vector<CycInt> q;
    for (int i = 0; i < T.n; ++i)
        q.push_back(CycInt::integer(M, L.faces_at(i)) * lam);
    return InfiniteFrieze(QuiddityRow{std::move(q)});
}

namespace {

// count sequences of pairwise distinct faces, one per position, each chosen
// from the faces incident to that position
Int count_matchings(const std::vector<std::vector<int>>& options) {
    Int total = 0;
    std::vector<int> used;
    auto rec = [&](auto&& self, size_t pos) -> void {
        if (pos == options.size()) {
            total += 1;
            return;
        }
        for (int f : options[pos]) {
            if (std::find(used.begin(), used.end(), f) != used.end()) continue;
            used.push_back(f);
            self(self, pos + 1);
            used.pop_back();
        }
    };
    rec(rec, 0);
    return total;
}

} // namespace

Int bci_matchings(const Dissection& T, long i, long j) {
    if (!T.is_triangulation())
        throw NotTriangulationError("bci_matchings: dissection is not a triangulation");
    if (j < i) throw InvalidInputError("bci_matchings: j must be >= i");
    if (j - i > T.n) throw OutOfBandError("bci_matchings: j - i exceeds the polygon size");
    if (j == i) return 0;
    if (j == i + 1) return 1;
    auto fcs = T.faces();
    std::vector<std::vector<int>> options;
    for (long k = i + 1; k <= j - 1; ++k) {
        int v = static_cast<int>(((k % T.n) + T.n) % T.n);
        std::vector<int> opt;
        for (size_t fi = 0; fi < fcs.size(); ++fi)
            if (std::binary_search(fcs[fi].begin(), fcs[fi].end(), v))
                opt.push_back(static_cast<int>(fi));
        options.push_back(std::move(opt));
    }
    return count_matchings(options);
}

Int bci_matchings(const PuncturedDissection& T, long i, long j) {
    if (T.m != 1) throw NotTriangulationError("bci_matchings: punctured dissection is not a triangulation");
    if (j < i) throw InvalidInputError("bci_matchings: j must be >= i");
    if (j == i) return 0;
    if (j == i + 1) return 1;
    long copies = (j - i) / T.n + 2;
    StripLift L = lift_to_strip(T, copies);
    std::vector<std::vector<int>> options;
    for (long k = i + 1; k <= j - 1; ++k) {
        std::vector<int> opt;
        for (size_t fi = 0; fi < L.faces.size(); ++fi)
            if (std::binary_search(L.faces[fi].vertices.begin(), L.faces[fi].vertices.end(), k))
                opt.push_back(static_cast<int>(fi));
        options.push_back(std::move(opt));
    }
    return count_matchings(options);
}

long ones_in_fundamental_domain(const InfiniteFrieze& F, long window) {
    long n = F.period();
    CycInt one = CycInt::one(F.quiddity().ring_order());
    long count = 0;
    for (long i = 0; i < n; ++i)
        for (long j = i + 2; j - i <= window; ++j)
            if (F.value(i, j) == one) ++count;
    return count;
}

OrbifoldFrieze::OrbifoldFrieze(const Dissection& lifted_triangulation, int p)
    : n_(0), p_(p), lifted_frieze_(frieze_from_dissection(lifted_triangulation)) {
    if (p != 2 && p != 3)
        throw UnsupportedOrderError("OrbifoldFrieze: only orbifold points of order 2 and 3");
    if (lifted_triangulation.n % p != 0)
        throw InvalidInputError("OrbifoldFrieze: lift size must be a multiple of p");
    n_ = lifted_triangulation.n / p;
    if (!lifted_triangulation.is_triangulation())
        throw NotTriangulationError("OrbifoldFrieze: lift must be a triangulation");
    if (lifted_triangulation.rotate(n_) != lifted_triangulation)
        throw NotSymmetricError("OrbifoldFrieze: lift is not invariant under n-step rotation");
}

CycInt OrbifoldFrieze::f(long i, long j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_)
        throw InvalidInputError("OrbifoldFrieze::f: vertex index out of range");
    long jj = j + (j <= i ? n_ : 0);
    return lifted_frieze_.value(i, jj);
}

CycInt OrbifoldFrieze::lambda_p() const {
    long M = lifted_frieze_.quiddity().ring_order();
    return CycInt::lambda(p_, M);
}

} // namespace sievekit
