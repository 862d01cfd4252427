#include "sievekit/punctured.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "sievekit/errors.hpp"

namespace sievekit {

PuncturedDissection::PuncturedDissection(int n_, int m_, std::vector<int> spokes_,
                                         std::vector<Dissection> sectors_)
    : n(n_), m(m_), spokes(std::move(spokes_)), sectors(std::move(sectors_)) {
    if (n < 1 || m < 1 || n % m != 0)
        throw InvalidInputError("PuncturedDissection: need m | n, n >= 1");
    if (spokes.empty() || static_cast<int>(spokes.size()) > n / m)
        throw InvalidInputError("PuncturedDissection: spoke count out of range");
    if (!std::is_sorted(spokes.begin(), spokes.end()) ||
        std::adjacent_find(spokes.begin(), spokes.end()) != spokes.end())
        throw InvalidInputError("PuncturedDissection: spokes must be sorted and distinct");
    for (int v : spokes)
        if (v < 0 || v >= n) throw InvalidInputError("PuncturedDissection: spoke out of range");
    if (sectors.size() != spokes.size())
        throw InvalidInputError("PuncturedDissection: one sector per spoke required");
    for (size_t i = 0; i < sectors.size(); ++i) {
        int g = gap(static_cast<int>(i));
        if (g % m != 0) throw InvalidInputError("PuncturedDissection: sector gap not divisible by m");
        if (sectors[i].n != g + 2)
            throw InvalidInputError("PuncturedDissection: sector polygon size mismatch");
        for (auto [a, b] : sectors[i].diagonals)
            if (a == 0) throw InvalidInputError("PuncturedDissection: sector touches the base vertex");
        // all faces of a sector must be (m+2)-gons
        for (const auto& f : sectors[i].faces())
            if (static_cast<int>(f.size()) != m + 2)
                throw InvalidInputError("PuncturedDissection: sector face is not an (m+2)-gon");
    }
}

int PuncturedDissection::gap(int i) const {
    int a = spokes[static_cast<size_t>(i)];
    int b = spokes[static_cast<size_t>((i + 1) % spokes.size())];
    int g = (b - a) % n;
    if (g <= 0) g += n;
    return g;
}

PuncturedDissection PuncturedDissection::rotate() const { return rotate(1); }

PuncturedDissection PuncturedDissection::rotate(int steps) const {
    steps %= n;
    if (steps < 0) steps += n;
    std::vector<std::pair<int, const Dissection*>> pairs;
    for (size_t i = 0; i < spokes.size(); ++i)
        pairs.emplace_back((spokes[i] - steps % n + n) % n, &sectors[i]);
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<int> sp;
    std::vector<Dissection> sec;
    for (auto& [a, d] : pairs) {
        sp.push_back(a);
        sec.push_back(*d);
    }
    return PuncturedDissection(n, m, std::move(sp), std::move(sec));
}

PuncturedDissection PuncturedDissection::quotient(int d) const {
    if (d < 1 || n % d != 0) throw InvalidInputError("quotient: d must divide n");
    if (rotate(n / d) != *this) throw NotSymmetricError("quotient: lacks d-fold symmetry");
    std::vector<int> sp;
    std::vector<Dissection> sec;
    for (size_t i = 0; i < spokes.size(); ++i)
        if (spokes[i] < n / d) {
            sp.push_back(spokes[i]);
            sec.push_back(sectors[i]);
        }
    return PuncturedDissection(n / d, m, std::move(sp), std::move(sec));
}

std::string PuncturedDissection::key() const {
    std::ostringstream os;
    os << n << "|" << m;
    for (size_t i = 0; i < spokes.size(); ++i) os << "|" << spokes[i] << ":" << sectors[i].key();
    return os.str();
}

bool PuncturedDissection::operator<(const PuncturedDissection& o) const { return key() < o.key(); }

namespace {

// all (m+2)-angulations of the cut polygon P_{gap+2} avoiding vertex 0
const std::vector<Dissection>& sector_options(int m, int gap) {
    static std::mutex mtx;
    static std::map<std::pair<int, int>, std::vector<Dissection>> cache;
    {
        std::lock_guard<std::mutex> lk(mtx);
        auto it = cache.find({m, gap});
        if (it != cache.end()) return it->second;
    }
    std::vector<Dissection> opts;
    TypeVector tv;
    tv.mu.assign(static_cast<size_t>(m), 0);
    tv.mu[static_cast<size_t>(m) - 1] = gap / m;
    for (const Dissection& T : enumerate_by_type(tv)) {
        bool base_free = true;
        for (auto [a, b] : T.diagonals)
            if (a == 0) { base_free = false; break; }
        if (base_free) opts.push_back(T);
    }
    std::lock_guard<std::mutex> lk(mtx);
    return cache.emplace(std::make_pair(m, gap), std::move(opts)).first->second;
}

} // namespace

std::vector<PuncturedDissection> enumerate_punctured(int n, int m, int s) {
    if (n < 1 || m < 1 || n % m != 0 || s < 1 || s > n / m)
        throw InvalidInputError("enumerate_punctured: need m | n and 1 <= s <= n/m");
    std::vector<PuncturedDissection> out;
    std::vector<int> spokes(static_cast<size_t>(s));
    auto pick = [&](auto&& self, int idx, int from) -> void {
        if (idx == s) {
            std::vector<int> gaps;
            for (int i = 0; i < s; ++i) {
                int g = (spokes[static_cast<size_t>((i + 1) % s)] - spokes[static_cast<size_t>(i)]) % n;
                if (g <= 0) g += n;
                if (g % m != 0) return;
                gaps.push_back(g);
            }
            std::vector<Dissection> sec(static_cast<size_t>(s), Dissection(3, {}));
            auto fill = [&](auto&& fillSelf, int i) -> void {
                if (i == s) {
                    out.emplace_back(n, m, spokes, sec);
                    return;
                }
                for (const Dissection& opt : sector_options(m, gaps[static_cast<size_t>(i)])) {
                    sec[static_cast<size_t>(i)] = opt;
                    fillSelf(fillSelf, i + 1);
                }
            };
            fill(fill, 0);
            return;
        }
        for (int v = from; v < n; ++v) {
            spokes[static_cast<size_t>(idx)] = v;
            self(self, idx + 1, v + 1);
        }
    };
    pick(pick, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

Int p_count(int m, int ell) {
    if (ell < 0) throw InvalidInputError("p_count: ell must be >= 0");
    if (ell == 0) return 0;
    // [x^{ell-1}] c^{(m)}(x)^m by repeated convolution of Fuss-Catalan numbers
    std::vector<Int> fc(static_cast<size_t>(ell));
    for (int i = 0; i < ell; ++i)
        fc[static_cast<size_t>(i)] =
            binomial(static_cast<long>(m + 1) * i, i) / (static_cast<long>(m) * i + 1);
    std::vector<Int> cur(static_cast<size_t>(ell), 0);
    cur[0] = 1;
    for (int rep = 0; rep < m; ++rep) {
        std::vector<Int> nxt(static_cast<size_t>(ell), 0);
        for (int i = 0; i < ell; ++i) {
            if (cur[static_cast<size_t>(i)] == 0) continue;
            for (int j = 0; i + j < ell; ++j)
                nxt[static_cast<size_t>(i + j)] += cur[static_cast<size_t>(i)] * fc[static_cast<size_t>(j)];
        }
        cur = std::move(nxt);
    }
    return cur[static_cast<size_t>(ell) - 1];
}

Int t_count(int n, int m, int s) {
    if (m < 1 || n % m != 0 || s < 1 || s > n / m)
        throw InvalidInputError("t_count: need m | n and 1 <= s <= n/m");
    return Int(m) * binomial(n + n / m - s - 1, n - 1);
}

QExpr t_poly(int n, int m, int s) {
    if (m < 1 || n % m != 0 || s < 1 || s > n / m)
        throw InvalidInputError("t_poly: need m | n and 1 <= s <= n/m");
    return QExpr::from_q_binom(n + n / m - s - 1, n - 1).times_scalar(m);
}

QExprSum t_total_poly(int n) {
    QExprSum terms;
    for (int s = 1; s <= n; ++s) terms.push_back(t_poly(n, 1, s));
    return terms;
}

std::vector<PuncturedDissection> fixed_points_punctured(int n, int m, int s, int d) {
    if (d < 1 || n % d != 0) throw InvalidInputError("fixed_points_punctured: d must divide n");
    std::vector<PuncturedDissection> out;
    for (const PuncturedDissection& T : enumerate_punctured(n, m, s))
        if (T.rotate(n / d) == T) out.push_back(T);
    return out;
}

long StripLift::faces_at(long v) const {
    long cnt = 0;
    for (const StripFace& f : faces)
        if (std::binary_search(f.vertices.begin(), f.vertices.end(), v)) ++cnt;
    return cnt;
}

StripLift lift_to_strip(const PuncturedDissection& T, long copies) {
    if (copies < 1) throw InvalidInputError("lift_to_strip: copies must be >= 1");
    StripLift L;
    L.n = T.n;
    L.copies = copies;
    for (long t = -copies; t <= copies; ++t) {
        long base = t * T.n;
        for (size_t i = 0; i < T.spokes.size(); ++i) {
            long a = base + T.spokes[i];
            L.asymptotic_arcs.push_back(a);
            const Dissection& sec = T.sectors[i];
            // cut-polygon vertex c >= 1 sits at strip coordinate a + c - 1
            for (auto [c, dd] : sec.diagonals) L.arcs.emplace_back(a + c - 1, a + dd - 1);
            for (const auto& f : sec.faces()) {
                StripFace sf;
                for (int v : f) {
                    if (v == 0) sf.asymptotic = true;
                    else sf.vertices.push_back(a + v - 1);
                }
                std::sort(sf.vertices.begin(), sf.vertices.end());
                L.faces.push_back(std::move(sf));
            }
        }
    }
    std::sort(L.asymptotic_arcs.begin(), L.asymptotic_arcs.end());
    std::sort(L.arcs.begin(), L.arcs.end());
    return L;
}

} // namespace sievekit
