#include "sievekit/dissect.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "sievekit/errors.hpp"

namespace sievekit {

namespace {
bool crossing(const Diagonal& a, const Diagonal& b) {
    return (a.first < b.first && b.first < a.second && a.second < b.second) ||
           (b.first < a.first && a.first < b.second && b.second < a.second);
}
} // namespace

Dissection::Dissection(int n_, std::vector<Diagonal> diags) : n(n_), diagonals(std::move(diags)) {
    if (n < 3) throw InvalidInputError("Dissection: polygon needs at least 3 vertices");
    for (auto& d : diagonals) {
        if (d.first > d.second) std::swap(d.first, d.second);
        if (d.first < 0 || d.second >= n || d.second - d.first < 2 ||
            (d.first == 0 && d.second == n - 1))
            throw InvalidInputError("Dissection: not a diagonal of P_n");
    }
    std::sort(diagonals.begin(), diagonals.end());
    for (size_t i = 1; i < diagonals.size(); ++i)
        if (diagonals[i] == diagonals[i - 1])
            throw InvalidInputError("Dissection: duplicate diagonal");
    for (size_t i = 0; i < diagonals.size(); ++i)
        for (size_t j = i + 1; j < diagonals.size(); ++j)
            if (crossing(diagonals[i], diagonals[j]))
                throw InvalidInputError("Dissection: crossing diagonals");
}

Dissection Dissection::rotate() const {
    std::vector<Diagonal> out;
    out.reserve(diagonals.size());
    for (auto [a, b] : diagonals)
        out.emplace_back((a + n - 1) % n, (b + n - 1) % n);
    return Dissection(n, std::move(out));
}

Dissection Dissection::rotate(int steps) const {
    steps %= n;
    if (steps < 0) steps += n;
    std::vector<Diagonal> out;
    out.reserve(diagonals.size());
    for (auto [a, b] : diagonals)
        out.emplace_back((a + n - steps) % n, (b + n - steps) % n);
    return Dissection(n, std::move(out));
}

std::vector<std::vector<int>> Dissection::faces() const {
    std::set<Diagonal> diag(diagonals.begin(), diagonals.end());
    // inner face of the interval [a,b], with (a,b) as its base side
    auto walk = [&](int a, int b) {
        std::vector<int> face{a};
        int x = a;
        while (x < b) {
            int w = x + 1;
            for (int u = b; u > x + 1; --u) {
                if (std::make_pair(x, u) == std::make_pair(a, b)) continue;
                if (diag.count({x, u})) { w = u; break; }
            }
            face.push_back(w);
            x = w;
        }
        return face;
    };
    std::vector<std::vector<int>> out;
    out.push_back(walk(0, n - 1)); // face containing the boundary edge (n-1, 0)
    for (auto [a, b] : diagonals) out.push_back(walk(a, b));
    return out;
}

std::vector<long> Dissection::type_vector() const {
    std::vector<long> mu(static_cast<size_t>(n), 0);
    for (const auto& f : faces()) mu[f.size() - 3] += 1;
    while (!mu.empty() && mu.back() == 0) mu.pop_back();
    return mu;
}

int Dissection::symmetry_order() const {
    int best = 1;
    for (int d = 2; d <= n; ++d) {
        if (n % d != 0) continue;
        if (rotate(n / d) == *this) best = d;
    }
    return best;
}

bool Dissection::is_triangulation() const {
    return static_cast<long>(diagonals.size()) == n - 3;
}

std::string Dissection::key() const {
    std::ostringstream os;
    os << n << ":";
    for (auto [a, b] : diagonals) os << a << "-" << b << ";";
    return os.str();
}

bool Dissection::operator<(const Dissection& o) const {
    if (n != o.n) return n < o.n;
    return diagonals < o.diagonals;
}

long TypeVector::k() const {
    long s = 0;
    for (long v : mu) s += v;
    return s;
}

long TypeVector::n() const {
    long s = 0;
    for (size_t i = 0; i < mu.size(); ++i) s += static_cast<long>(i + 1) * mu[i];
    return s;
}

std::vector<Dissection> enumerate_by_type(const TypeVector& mu) {
    for (long v : mu.mu)
        if (v < 0) throw InvalidInputError("enumerate_by_type: negative multiplicity");
    long N = mu.n() + 2;
    if (mu.k() < 1 || N < 3) throw InvalidInputError("enumerate_by_type: inconsistent type");
    std::vector<Dissection> out;
    std::vector<long> budget = mu.mu;
    std::vector<Diagonal> acc;
    std::vector<std::pair<int, int>> segments{{0, static_cast<int>(N) - 1}};

    // peel the face containing the base side of the last open segment
    auto dfs = [&](auto&& self) -> void {
        if (segments.empty()) {
            for (long v : budget)
                if (v != 0) return;
            out.emplace_back(static_cast<int>(N), acc);
            return;
        }
        auto [a, b] = segments.back();
        segments.pop_back();
        int len = b - a + 1;
        for (size_t e = 0; e < budget.size(); ++e) {
            if (budget[e] == 0) continue;
            int p = static_cast<int>(e) + 3; // face size
            if (p > len) continue;
            budget[e] -= 1;
            // choose the p-2 intermediate face vertices in (a, b)
            std::vector<int> pick(static_cast<size_t>(p) - 2);
            auto choose = [&](auto&& chooseSelf, int idx, int from) -> void {
                if (idx == p - 2) {
                    std::vector<int> vs{a};
                    vs.insert(vs.end(), pick.begin(), pick.end());
                    vs.push_back(b);
                    size_t nseg = 0, ndiag = 0;
                    for (size_t t = 0; t + 1 < vs.size(); ++t) {
                        if (vs[t + 1] - vs[t] >= 2) {
                            acc.emplace_back(vs[t], vs[t + 1]);
                            segments.emplace_back(vs[t], vs[t + 1]);
                            ++nseg;
                            ++ndiag;
                        }
                    }
                    self(self);
                    segments.resize(segments.size() - nseg);
                    acc.resize(acc.size() - ndiag);
                    return;
                }
                for (int v = from; v <= b - 1 - (p - 3 - idx); ++v) {
                    pick[static_cast<size_t>(idx)] = v;
                    chooseSelf(chooseSelf, idx + 1, v + 1);
                }
            };
            choose(choose, 0, a + 1);
            budget[e] += 1;
        }
        segments.emplace_back(a, b);
    };
    dfs(dfs);
    std::sort(out.begin(), out.end());
    return out;
}

Int a_mu_count(const TypeVector& mu) { return a_mu_poly(mu).value_at_one(); }

QExpr a_mu_poly(const TypeVector& mu) {
    long n = mu.n(), k = mu.k();
    QExpr p = QExpr::from_q_binom(n + k, k) * QExpr::q_multinomial(k, mu.mu);
    return p.over_q_int(n + 1);
}

std::vector<Dissection> fixed_points(const TypeVector& mu, int d) {
    long N = mu.n() + 2;
    if (d < 1 || N % d != 0) throw InvalidInputError("fixed_points: d must divide n+2");
    std::vector<Dissection> out;
    for (const Dissection& T : enumerate_by_type(mu))
        if (T.rotate(static_cast<int>(N) / d) == T) out.push_back(T);
    return out;
}

Int fixed_point_count_formula(const TypeVector& mu, int d) {
    long n = mu.n(), k = mu.k(), N = n + 2;
    if (d < 1 || N % d != 0)
        throw InvalidInputError("fixed_point_count_formula: d must divide n+2");
    if (d == 1) return a_mu_count(mu);
    long ones = 0;
    bool rest_zero = true;
    for (long v : mu.mu) {
        long r = v % d;
        if (r == 1) ++ones;
        else if (r != 0) rest_zero = false;
    }
    if (ones == 1 && rest_zero) {
        long g = (k - 1) / d;
        std::vector<long> parts;
        for (long v : mu.mu) parts.push_back(v / d);
        return binomial(N / d + g - 1, g) * multinomial(g, parts);
    }
    if (d == 2 && ones == 0 && rest_zero) {
        std::vector<long> parts;
        for (long v : mu.mu) parts.push_back(v / 2);
        return binomial((n + k) / 2, k / 2) * multinomial(k / 2, parts);
    }
    return 0;
}

namespace {

// Orient a diagonal so the polygon center lies to its right: the start is the
// endpoint from which the smaller side is on the left. Requires span != n/2.
std::pair<int, int> orient_center_right(int n, Diagonal dg) {
    int span = dg.second - dg.first;
    if (2 * span == n)
        throw ConditionViolatedError("orient: diameter has no center-right orientation");
    if (2 * span < n) return {dg.first, dg.second};
    return {dg.second, dg.first};
}

} // namespace

SymmetricCode encode_symmetric(const Dissection& T, int d) {
    int N = T.n;
    if (d < 2 || N % d != 0) throw InvalidInputError("encode_symmetric: need d >= 2, d | n");
    if (T.rotate(N / d) != T)
        throw NotSymmetricError("encode_symmetric: dissection lacks d-fold symmetry");
    std::vector<long> mu = T.type_vector();
    long ones = 0;
    for (long v : mu) {
        long r = v % d;
        if (r == 1) ++ones;
        else if (r != 0)
            throw ConditionViolatedError("encode_symmetric: type not in the one-residue case");
    }
    if (ones != 1)
        throw ConditionViolatedError("encode_symmetric: type not in the one-residue case");

    auto fcs = T.faces();
    int per = N / d;
    // (a, span, e) for orbit representatives starting in the fundamental domain
    std::vector<std::array<int, 3>> entries;
    for (auto dg : T.diagonals) {
        auto [s, t] = orient_center_right(N, dg);
        if (s >= per) continue;
        int span = ((t - s) % N + N) % N;
        // subgon to the left of s->t: the face whose third vertex sits in (s, t)
        int e = -1;
        for (const auto& f : fcs) {
            bool has_s = std::binary_search(f.begin(), f.end(), s);
            bool has_t = std::binary_search(f.begin(), f.end(), t);
            if (!has_s || !has_t || f.size() < 3) continue;
            int third = -1;
            for (int v : f)
                if (v != s && v != t) { third = v; break; }
            if (((third - s) % N + N) % N < span) {
                e = static_cast<int>(f.size()) - 2;
                break;
            }
        }
        if (e < 0) throw std::logic_error("encode_symmetric: left face not found");
        entries.push_back({s, span, e});
    }
    // weakly increasing starts; at equal starts, larger list index is closer to
    // the boundary edge, i.e. smaller span
    std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) {
        if (x[0] != y[0]) return x[0] < y[0];
        return x[1] > y[1];
    });
    SymmetricCode code;
    code.d = d;
    for (const auto& ent : entries) code.pairs.emplace_back(ent[0], ent[2]);
    return code;
}

Dissection decode_symmetric(const SymmetricCode& code, const TypeVector& mu, int d) {
    long N = mu.n() + 2;
    if (d < 2 || N % d != 0) throw InvalidInputError("decode_symmetric: need d >= 2, d | n");
    int per = static_cast<int>(N) / d;
    // lift each pair to its d rotated copies, innermost-last at equal starts
    struct Item {
        int start, e;
        bool done = false;
    };
    std::vector<Item> items;
    for (int t = 0; t < d; ++t)
        for (auto [a, e] : code.pairs) {
            if (a < 0 || a >= per) throw InvalidInputError("decode_symmetric: start out of range");
            items.push_back({a + t * per, e});
        }
    // resolve ears: an item closes over e live non-start vertices
    std::vector<bool> alive(static_cast<size_t>(N), true);
    auto next_alive = [&](int v) {
        do v = (v + 1) % static_cast<int>(N);
        while (!alive[static_cast<size_t>(v)]);
        return v;
    };
    std::vector<int> open_at(static_cast<size_t>(N), 0);
    for (const auto& it : items) open_at[static_cast<size_t>(it.start)] += 1;

    std::vector<Diagonal> diagonals;
    size_t remaining = items.size();
    while (remaining > 0) {
        bool progressed = false;
        // innermost unresolved at a position = latest in lift order
        for (size_t idx = items.size(); idx-- > 0;) {
            Item& it = items[idx];
            if (it.done) continue;
            // only the innermost (last unresolved) item at each start may close
            bool inner_pending = false;
            for (size_t j = idx + 1; j < items.size() && !inner_pending; ++j)
                if (!items[j].done && items[j].start == it.start) inner_pending = true;
            if (inner_pending) continue;
            int v = it.start;
            bool ok = true;
            std::vector<int> interior;
            for (int step = 0; step < it.e; ++step) {
                v = next_alive(v);
                if (open_at[static_cast<size_t>(v)] > 0) { ok = false; break; }
                interior.push_back(v);
            }
            if (!ok) continue;
            int end = next_alive(v);
            if (end == it.start)
                throw InvalidInputError("decode_symmetric: code closes the whole polygon");
            diagonals.emplace_back(std::min(it.start, end), std::max(it.start, end));
            for (int u : interior) alive[static_cast<size_t>(u)] = false;
            it.done = true;
            open_at[static_cast<size_t>(it.start)] -= 1;
            --remaining;
            progressed = true;
        }
        if (!progressed)
            throw InvalidInputError("decode_symmetric: code admits no ear (invalid code)");
    }
    Dissection T(static_cast<int>(N), std::move(diagonals));
    std::vector<long> want = mu.mu;
    while (!want.empty() && want.back() == 0) want.pop_back();
    if (T.type_vector() != want)
        throw InvalidInputError("decode_symmetric: decoded type mismatch");
    return T;
}

std::vector<SymmetricCode> enumerate_codes(const TypeVector& mu, int d) {
    long N = mu.n() + 2, k = mu.k();
    if (d < 2 || N % d != 0) throw InvalidInputError("enumerate_codes: need d >= 2, d | n");
    if ((k - 1) % d != 0)
        throw ConditionViolatedError("enumerate_codes: (k-1)/d is not an integer");
    long g = (k - 1) / d;
    int per = static_cast<int>(N) / d;
    std::vector<int> emultiset;
    for (size_t i = 0; i < mu.mu.size(); ++i)
        for (long c = 0; c < mu.mu[i] / d; ++c) emultiset.push_back(static_cast<int>(i) + 1);
    if (static_cast<long>(emultiset.size()) != g)
        throw ConditionViolatedError("enumerate_codes: type not in the one-residue case");

    // weakly increasing a-multisets x distinct arrangements of the e-multiset
    std::vector<std::vector<int>> astacks;
    std::vector<int> cur;
    auto genA = [&](auto&& self, int from, long left) -> void {
        if (left == 0) {
            astacks.push_back(cur);
            return;
        }
        for (int v = from; v < per; ++v) {
            cur.push_back(v);
            self(self, v, left - 1);
            cur.pop_back();
        }
    };
    genA(genA, 0, g);

    std::sort(emultiset.begin(), emultiset.end());
    std::vector<SymmetricCode> out;
    do {
        for (const auto& as : astacks) {
            SymmetricCode c;
            c.d = d;
            for (long i = 0; i < g; ++i)
                c.pairs.emplace_back(as[static_cast<size_t>(i)], emultiset[static_cast<size_t>(i)]);
            out.push_back(std::move(c));
        }
    } while (std::next_permutation(emultiset.begin(), emultiset.end()));
    return out;
}

std::vector<TypeVector> all_type_vectors(long n) {
    std::vector<TypeVector> out;
    std::vector<long> mu(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, long rem, long maxpart) -> void {
        if (rem == 0) {
            TypeVector tv{mu};
            while (!tv.mu.empty() && tv.mu.back() == 0) tv.mu.pop_back();
            out.push_back(std::move(tv));
            return;
        }
        for (long p = std::min(rem, maxpart); p >= 1; --p) {
            mu[static_cast<size_t>(p - 1)] += 1;
            self(self, rem - p, p);
            mu[static_cast<size_t>(p - 1)] -= 1;
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<int> divisors(int n) {
    std::vector<int> out;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

} // namespace sievekit
