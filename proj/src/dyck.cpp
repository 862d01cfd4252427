#include "sievekit/dyck.hpp"

#include <algorithm>
#include <map>

#include "sievekit/errors.hpp"

namespace sievekit {

MDyckPath validate(const std::string& word, int m) {
    if (m < 1) throw InvalidInputError("validate: m must be >= 1");
    long ups = 0, rights = 0;
    for (size_t t = 0; t < word.size(); ++t) {
        char c = word[t];
        if (c == 'U') ++ups;
        else if (c == 'R') ++rights;
        else throw InvalidInputError("validate: word must be over {U, R}");
        if (rights > static_cast<long>(m) * ups)
            throw NotBallotError("validate: ballot property fails", static_cast<long>(t) + 1);
    }
    if (rights != static_cast<long>(m) * ups)
        throw InvalidInputError("validate: letter counts are not (ell, m*ell)");
    MDyckPath D;
    D.m = m;
    D.ell = static_cast<int>(ups);
    D.word = word;
    return D;
}

std::vector<MDyckPath> enumerate_dyck(int m, int ell) {
    if (m < 1 || ell < 1) throw InvalidInputError("enumerate_dyck: m, ell must be >= 1");
    std::vector<MDyckPath> out;
    std::string w;
    auto rec = [&](auto&& self, long ups, long rights) -> void {
        if (ups == ell && rights == static_cast<long>(m) * ell) {
            out.push_back(MDyckPath{m, ell, w});
            return;
        }
        if (ups < ell) {
            w.push_back('U');
            self(self, ups + 1, rights);
            w.pop_back();
        }
        if (rights < static_cast<long>(m) * ups) {
            w.push_back('R');
            self(self, ups, rights + 1);
            w.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

MDyckPath brow(const Dissection& T) {
    auto fcs = T.faces();
    int m = static_cast<int>(fcs.front().size()) - 2;
    for (const auto& f : fcs)
        if (static_cast<int>(f.size()) != m + 2)
            throw InvalidInputError("brow: dissection is not an (m+2)-angulation");
    int N = T.n;
    // per-vertex sweep order: faces sorted by the clockwise distance from the
    // edge toward v_{i-1} to the face's nearer bounding ray
    std::vector<std::vector<size_t>> order(static_cast<size_t>(N));
    for (int i = 0; i < N; ++i) {
        std::vector<std::pair<int, size_t>> ranked;
        for (size_t fi = 0; fi < fcs.size(); ++fi) {
            const auto& f = fcs[fi];
            auto it = std::lower_bound(f.begin(), f.end(), i);
            if (it == f.end() || *it != i) continue;
            size_t pos = static_cast<size_t>(it - f.begin());
            int pred = f[(pos + f.size() - 1) % f.size()];
            int succ = f[(pos + 1) % f.size()];
            int da = ((i - 1 - pred) % N + N) % N;
            int db = ((i - 1 - succ) % N + N) % N;
            ranked.emplace_back(std::min(da, db), fi);
        }
        std::sort(ranked.begin(), ranked.end());
        for (auto& [d, fi] : ranked) order[static_cast<size_t>(i)].push_back(fi);
    }
    std::string w;
    std::vector<int> seen(fcs.size(), 0);
    for (int i = 0; i < N; ++i) {
        for (size_t fi : order[static_cast<size_t>(i)]) {
            int s = ++seen[fi];
            if (s == 1) w.push_back('U');
            else if (s <= m + 1) w.push_back('R');
        }
    }
    return validate(w, m);
}

namespace {

struct PathGeometry {
    long m, ell;
    // classification of lattice points on the path: true = corner
    std::map<std::pair<long, long>, bool> on_path;
    std::vector<std::pair<long, long>> up_bases; // base of every up step, in order
};

PathGeometry trace(const MDyckPath& D) {
    PathGeometry g;
    g.m = D.m;
    g.ell = D.ell;
    long x = 0, y = 0;
    size_t d = D.word.size();
    for (size_t t = 0; t <= d; ++t) {
        bool corner = t > 0 && t < d && D.word[t - 1] != D.word[t];
        g.on_path[{x, y}] = corner;
        if (t == d) break;
        if (D.word[t] == 'U') {
            g.up_bases.emplace_back(x, y);
            ++y;
        } else {
            ++x;
        }
    }
    return g;
}

} // namespace

std::vector<BalanceLine> balance_lines(const MDyckPath& D) {
    PathGeometry g = trace(D);
    std::vector<BalanceLine> out;
    for (size_t u = 1; u < g.up_bases.size(); ++u) { // first up step excluded
        auto [bx, by] = g.up_bases[u];
        BalanceLine bl;
        bl.base_x = bx;
        bl.base_y = by;
        bool found = false;
        for (long s = 1; by + s <= g.ell && bx + g.m * s <= g.m * g.ell; ++s) {
            auto it = g.on_path.find({bx + g.m * s, by + s});
            if (it == g.on_path.end() || it->second) continue; // off path or corner
            bl.label_first = bx;
            bl.label_second = bx + g.m * s + 1;
            found = true;
            break;
        }
        if (!found) throw std::logic_error("balance_lines: no non-corner intersection found");
        out.push_back(bl);
    }
    return out;
}

Dissection rtn(const MDyckPath& D) {
    std::vector<Diagonal> diags;
    for (const BalanceLine& bl : balance_lines(D))
        diags.emplace_back(static_cast<int>(bl.label_first), static_cast<int>(bl.label_second));
    return Dissection(static_cast<int>(D.m) * D.ell + 2, std::move(diags));
}

long up_stat(const MDyckPath& D, long i) {
    PathGeometry g = trace(D);
    long c = 0;
    for (auto [bx, by] : g.up_bases)
        if (bx == i && by > 0) ++c;
    return c;
}

long bal_stat(const MDyckPath& D, long i) {
    long c = 0;
    for (const BalanceLine& bl : balance_lines(D))
        if (bl.label_second == i) ++c;
    return c;
}

QuiddityRow quiddity_from_dyck(const MDyckPath& D) {
    long N = static_cast<long>(D.m) * D.ell + 2;
    long M = frieze_ring_order({D.m + 2});
    CycInt lam = CycInt::lambda(D.m + 2, M);
    std::vector<long> up(static_cast<size_t>(N), 0), bal(static_cast<size_t>(N), 0);
    PathGeometry g = trace(D);
    for (size_t u = 0; u < g.up_bases.size(); ++u)
        if (g.up_bases[u].second > 0) up[static_cast<size_t>(g.up_bases[u].first)] += 1;
    for (const BalanceLine& bl : balance_lines(D)) bal[static_cast<size_t>(bl.label_second)] += 1;
    std::vector<CycInt> q;
    for (long i = 0; i < N; ++i)
        q.push_back(CycInt::integer(M, up[static_cast<size_t>(i)] + bal[static_cast<size_t>(i)] + 1) * lam);
    return QuiddityRow{std::move(q)};
}

std::vector<long> height_sequence(const MDyckPath& D) {
    std::vector<long> h;
    long acc = 0;
    for (char c : D.word) {
        acc += (c == 'U') ? D.m : -1;
        h.push_back(acc);
    }
    return h;
}

MDyckPath rot_tilde(const MDyckPath& D) {
    long d = static_cast<long>(D.word.size());
    long k = 0;
    while (k < d && D.word[static_cast<size_t>(k)] == 'U') ++k;
    if (k == 0 || k >= d || D.word[static_cast<size_t>(k)] != 'R')
        throw InvalidInputError("rot_tilde: malformed path");
    std::vector<long> H = height_sequence(D);
    // insertion spots: for each i = 1..k-1 the first position p > k (1-based)
    // with H(p) < m*i
    std::vector<long> inserts(static_cast<size_t>(d) + 1, 0);
    for (long i = 1; i <= k - 1; ++i) {
        long p = -1;
        for (long t = k + 1; t <= d; ++t)
            if (H[static_cast<size_t>(t - 1)] < static_cast<long>(D.m) * i) { p = t; break; }
        if (p < 0) throw std::logic_error("rot_tilde: no insertion point found");
        inserts[static_cast<size_t>(p)] += 1;
    }
    std::string w;
    for (long t = 1; t <= d; ++t) {
        w.push_back(D.word[static_cast<size_t>(t - 1)]);
        w.append(static_cast<size_t>(inserts[static_cast<size_t>(t)]), 'U');
    }
    // drop the initial U^k R, prepend U, append R
    w = "U" + w.substr(static_cast<size_t>(k) + 1) + "R";
    return validate(w, D.m);
}

} // namespace sievekit
