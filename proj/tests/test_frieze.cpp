#include <doctest.h>

#include <random>
#include <vector>

#include "sievekit/errors.hpp"
#include "sievekit/frieze.hpp"

using namespace sievekit;

namespace {

// cyclic words compare equal up to rotation
bool same_cyclic(const std::vector<CycInt>& a, const std::vector<CycInt>& b) {
    if (a.size() != b.size()) return false;
    for (size_t s = 0; s < a.size(); ++s) {
        bool ok = true;
        for (size_t i = 0; i < a.size() && ok; ++i)
            if (!(a[i] == b[(i + s) % b.size()])) ok = false;
        if (ok) return true;
    }
    return false;
}

std::vector<CycInt> row_of(const FriezePattern& F, long k) {
    std::vector<CycInt> out;
    for (long i = 0; i < F.width(); ++i) out.push_back(F.value(i, i + k));
    return out;
}

std::vector<CycInt> row_of(const InfiniteFrieze& F, long k) {
    std::vector<CycInt> out;
    for (long i = 0; i < F.period(); ++i) out.push_back(F.value(i, i + k));
    return out;
}

std::vector<CycInt> ints(long M, std::vector<long> vs) {
    std::vector<CycInt> out;
    for (long v : vs) out.push_back(CycInt::integer(M, v));
    return out;
}

const PuncturedDissection& punctured_hexagon() {
    static PuncturedDissection T(6, 1, {1},
                                 {Dissection(8, {{1, 3}, {3, 5}, {1, 5}, {5, 7}, {1, 7}})});
    return T;
}

} // namespace

TEST_CASE("continuant-style window recursion") {
    long M = 6;
    QuiddityRow q{ints(M, {1, 2, 3, 4, 5})};
    CHECK(frieze_window(q, 0, 0) == CycInt::one(M));
    CHECK(frieze_window(q, 1, 1) == CycInt::integer(M, 2));
    // unrolled: D_2 = 2*1 - 1 = 1, D_3 = 3*1 - 1 = 2
    CHECK(frieze_window(q, 0, 3) == CycInt::integer(M, 2));
}

TEST_CASE("classical continuant") {
    long M = 6;
    CHECK(continuant({}) == CycInt::one(1));
    std::vector<CycInt> one{CycInt::integer(M, 7)};
    CHECK(continuant(one) == CycInt::integer(M, 7));
    // 3*(2*1 + 1) + 1 = 10
    std::vector<CycInt> xs = ints(M, {1, 2, 3});
    CHECK(continuant(xs) == CycInt::integer(M, 10));
}

TEST_CASE("hexagon triangulation frieze") {
    Dissection T(6, {{0, 2}, {2, 5}, {3, 5}});
    FriezePattern F = frieze_from_dissection(T);
    CHECK(F.width() == 6);
    long M = F.quiddity().ring_order();
    CHECK(M == 6);
    CHECK(F.quiddity().entries == ints(M, {2, 1, 3, 2, 1, 3}));
    CHECK(same_cyclic(row_of(F, 3), ints(M, {1, 2, 5, 1, 2, 5})));
    // frame rows
    for (long i = 0; i < 6; ++i) {
        CHECK(F.value(i, i).is_zero());
        CHECK(F.value(i, i + 1) == CycInt::one(M));
        CHECK(F.value(i, i + 5) == CycInt::one(M));
        CHECK(F.value(i, i + 6).is_zero());
    }
    CHECK_THROWS_AS(F.value(0, 7), OutOfBandError);
}

TEST_CASE("hexagon 4-angulation and mixed dissection friezes") {
    FriezePattern F4 = frieze_from_dissection(Dissection(6, {{2, 5}}));
    long M = F4.quiddity().ring_order();
    CHECK(M == 24);
    CycInt s2 = CycInt::lambda(4, M);
    std::vector<CycInt> want{s2, s2, s2 * CycInt::integer(M, 2), s2, s2, s2 * CycInt::integer(M, 2)};
    CHECK(same_cyclic(F4.quiddity().entries, want));
    CHECK(same_cyclic(row_of(F4, 3), ints(M, {1, 3, 3, 1, 3, 3})));

    FriezePattern Fm = frieze_from_dissection(Dissection(6, {{0, 2}, {2, 5}}));
    long Mm = Fm.quiddity().ring_order();
    CycInt r2 = CycInt::lambda(4, Mm), one = CycInt::one(Mm), two = CycInt::integer(Mm, 2);
    std::vector<CycInt> wantm{two, one, two + r2, r2, r2, one + r2};
    CHECK(Fm.quiddity().entries == wantm);
    std::vector<CycInt> row3{one, one + r2, one + two * r2, one, one + r2, one + two * r2};
    CHECK(same_cyclic(row_of(Fm, 3), row3));
    std::vector<CycInt> row4{r2, r2, one + r2, two, one, two + r2};
    CHECK(same_cyclic(row_of(Fm, 4), row4));
}

TEST_CASE("unimodular rule and tameness on generated friezes") {
    auto check_frieze = [](const FriezePattern& F) {
        long M = F.quiddity().ring_order();
        for (long i = 0; i < F.width(); ++i) {
            for (long j = i; j <= i + F.width() - 1; ++j) {
                // E*W - N*S = 1 on the diamond below (i, j)
                if (j + 1 - i > F.width() || j - (i - 1) > F.width()) continue;
                CycInt lhs = F.extend_value(i - 1, j) * F.extend_value(i, j + 1) -
                             F.extend_value(i - 1, j + 1) * F.extend_value(i, j);
                CHECK(lhs == CycInt::one(M));
            }
        }
        // 3x3 diamond determinants vanish (tameness)
        for (long i = 0; i < F.width(); ++i) {
            for (long k = 2; k <= F.width() - 2; ++k) {
                long j = i + k;
                CycInt det = F.value(i - 1, j - 1) *
                                 (F.value(i, j) * F.value(i + 1, j + 1) -
                                  F.value(i, j + 1) * F.value(i + 1, j)) -
                             F.value(i - 1, j) * (F.value(i, j - 1) * F.value(i + 1, j + 1) -
                                                  F.value(i, j + 1) * F.value(i + 1, j - 1)) +
                             F.value(i - 1, j + 1) * (F.value(i, j - 1) * F.value(i + 1, j) -
                                                      F.value(i, j) * F.value(i + 1, j - 1));
                CHECK(det.is_zero());
            }
        }
    };
    check_frieze(frieze_from_dissection(Dissection(6, {{0, 2}, {2, 5}, {3, 5}})));
    check_frieze(frieze_from_dissection(Dissection(6, {{0, 2}, {2, 5}})));
    check_frieze(frieze_from_dissection(Dissection(8, {{0, 4}, {1, 3}, {5, 7}})));
}

TEST_CASE("width property on all dissection friezes up to 10-gons") {
    for (long n = 2; n <= 8; ++n) {
        for (const TypeVector& tv : all_type_vectors(n)) {
            for (const Dissection& T : enumerate_by_type(tv)) {
                FriezePattern F = frieze_from_dissection(T);
                long M = F.quiddity().ring_order();
                for (long i = 0; i < F.width(); ++i) {
                    CHECK(F.value(i, i + F.width() - 1) == CycInt::one(M));
                    CHECK(F.value(i, i + F.width()).is_zero());
                }
            }
        }
    }
}

TEST_CASE("punctured hexagon infinite frieze rows") {
    InfiniteFrieze F = frieze_from_punctured(punctured_hexagon());
    long M = F.quiddity().ring_order();
    CHECK(F.period() == 6);
    CHECK(F.quiddity().entries == ints(M, {1, 7, 1, 3, 1, 4}));
    CHECK(same_cyclic(row_of(F, 3), ints(M, {6, 6, 2, 2, 3, 3})));
    CHECK(same_cyclic(row_of(F, 4), ints(M, {17, 5, 11, 1, 5, 2})));
    // unimodular rule on a window of cells
    for (long i = 0; i < 6; ++i)
        for (long j = i; j <= i + 18; ++j)
            CHECK(F.value(i - 1, j) * F.value(i, j + 1) -
                      F.value(i - 1, j + 1) * F.value(i, j) ==
                  CycInt::one(M));
}

TEST_CASE("BCI matchings equal frieze values") {
    // the worked hexagon: 5 matchings between v_1 and v_4
    Dissection hex(6, {{0, 2}, {2, 5}, {3, 5}});
    CHECK(bci_matchings(hex, 1, 4) == 5);
    FriezePattern Fh = frieze_from_dissection(hex);
    CHECK(Fh.value(1, 4) == CycInt::integer(Fh.quiddity().ring_order(), 5));

    // every cell of every triangulation of P_n, n <= 7 here (acceptance goes to 9)
    for (long n = 4; n <= 7; ++n) {
        TypeVector tv;
        tv.mu = {n - 2};
        for (const Dissection& T : enumerate_by_type(tv)) {
            FriezePattern F = frieze_from_dissection(T);
            for (long i = 0; i < n; ++i)
                for (long j = i; j <= i + n; ++j)
                    CHECK(F.value(i, j) ==
                          CycInt::integer(F.quiddity().ring_order(), bci_matchings(T, i, j)));
        }
    }

    // punctured: the worked strip entries sit between the lifts of v_5/v_9
    // and v_1/v_5 in these coordinates
    const PuncturedDissection& P = punctured_hexagon();
    InfiniteFrieze Fp = frieze_from_punctured(P);
    long M = Fp.quiddity().ring_order();
    CHECK(bci_matchings(P, 5, 9) == 5);
    CHECK(Fp.value(5, 9) == CycInt::integer(M, 5));
    CHECK(bci_matchings(P, 1, 5) == 1);
    CHECK(Fp.value(1, 5) == CycInt::integer(M, 1));
    for (long i = 0; i < 6; ++i)
        for (long j = i; j - i <= 10; ++j)
            CHECK(Fp.value(i, j) == CycInt::integer(M, bci_matchings(P, i, j)));

    CHECK_THROWS_AS(bci_matchings(Dissection(6, {{2, 5}}), 0, 3), NotTriangulationError);
}

TEST_CASE("growth coefficients") {
    InfiniteFrieze F = frieze_from_punctured(punctured_hexagon());
    long M = F.quiddity().ring_order();
    CHECK(F.growth_coefficient(1) == CycInt::integer(M, 2));
    for (long k = 2; k <= 5; ++k) CHECK(F.growth_coefficient(k) == CycInt::integer(M, 2));

    // annulus-style quiddity row given as four entries of a period-3 sample
    long Ma = 24;
    CycInt r2 = CycInt::lambda(4, Ma), one = CycInt::one(Ma), two = CycInt::integer(Ma, 2);
    std::vector<CycInt> sample{one, two + r2, two + two * r2, one};
    InfiniteFrieze Fa = InfiniteFrieze::from_quiddity_sample(sample);
    CHECK(Fa.period() == 3);
    CycInt s1 = Fa.growth_coefficient(1);
    CHECK(s1 == CycInt::integer(Ma, 3) + CycInt::integer(Ma, 3) * r2);
    for (long k = 2; k <= 5; ++k) CHECK(Fa.growth_coefficient(k) == chebyshev_t(k, s1));

    // Chebyshev relation on randomized quiddity rows
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        long n = 2 + static_cast<long>(rng() % 5);
        std::vector<CycInt> q;
        for (long i = 0; i < n; ++i) {
            CycInt v = CycInt::integer(Ma, 1 + static_cast<long>(rng() % 4)) +
                       r2 * CycInt::integer(Ma, static_cast<long>(rng() % 3));
            q.push_back(v);
        }
        InfiniteFrieze Fr{QuiddityRow{q}};
        CycInt g1 = Fr.growth_coefficient(1);
        for (long k = 2; k <= 5; ++k) CHECK(Fr.growth_coefficient(k) == chebyshev_t(k, g1));
    }
}

TEST_CASE("finite growth classification") {
    long M = 6;
    // pentagon fan: no symmetry
    FriezePattern Fp(5, QuiddityRow{ints(M, {3, 1, 2, 2, 1})});
    CHECK(Fp.principal_growth() == CycInt::integer(M, -2));
    // hexagon with minimal period 3: 2-fold symmetry
    FriezePattern F2(6, QuiddityRow{ints(M, {2, 1, 3, 2, 1, 3})});
    CHECK(F2.principal_growth() == CycInt::zero(M));
    // central triangle: 3-fold symmetry
    FriezePattern F3(6, QuiddityRow{ints(M, {3, 1, 3, 1, 3, 1})});
    CHECK(F3.principal_growth() == CycInt::one(M));

    // classification matches the combinatorial symmetry for all small triangulations
    for (long n = 4; n <= 8; ++n) {
        TypeVector tv;
        tv.mu = {n - 2};
        for (const Dissection& T : enumerate_by_type(tv)) {
            FriezePattern F = frieze_from_dissection(T);
            long want = T.symmetry_order() == 3 ? 1 : (T.symmetry_order() == 2 ? 0 : -2);
            CHECK(F.principal_growth() == CycInt::integer(F.quiddity().ring_order(), want));
        }
    }
}

TEST_CASE("ones in a fundamental domain") {
    InfiniteFrieze F = frieze_from_punctured(punctured_hexagon());
    CHECK(ones_in_fundamental_domain(F, 18) == 5); // n/m - s = 6 - 1
    // all-spokes fan has none
    PuncturedDissection fan(4, 1, {0, 1, 2, 3},
                            {Dissection(3, {}), Dissection(3, {}), Dissection(3, {}),
                             Dissection(3, {})});
    CHECK(ones_in_fundamental_domain(frieze_from_punctured(fan), 12) == 0);
    // the three drawn 5-angulation representatives carry exactly one 1 each
    for (Diagonal d : {Diagonal{3, 7}, {2, 6}, {1, 5}}) {
        PuncturedDissection rep(12, 3, {3, 6, 9},
                                {Dissection(5, {}), Dissection(5, {}), Dissection(8, {d})});
        CHECK(ones_in_fundamental_domain(frieze_from_punctured(rep), 36) == 1);
    }
    // the expected count across every small (m+2)-angulation family
    for (int n = 2; n <= 6; ++n)
        for (int m = 1; m <= n; ++m) {
            if (n % m != 0) continue;
            for (int s = 1; s <= n / m; ++s)
                for (const PuncturedDissection& T : enumerate_punctured(n, m, s))
                    CHECK(ones_in_fundamental_domain(frieze_from_punctured(T), 3 * n) ==
                          n / m - s);
        }
}

TEST_CASE("shift rows = rotate dissection") {
    for (const Dissection& T : enumerate_by_type(TypeVector{{4}})) {
        FriezePattern F = frieze_from_dissection(T);
        CHECK(F.shift_rows(0) == F);
        CHECK(F.shift_rows(T.n) == F);
        CHECK(F.shift_rows(1) == frieze_from_dissection(T.rotate()));
    }
    for (const Dissection& T : enumerate_by_type(TypeVector{{1, 2}})) {
        FriezePattern F = frieze_from_dissection(T);
        CHECK(F.shift_rows(1) == frieze_from_dissection(T.rotate()));
    }
}

TEST_CASE("orbifold friezes") {
    // order 2: lift of {pending at v0, arc (v0, v2)} on the punctured-triangle orbifold
    OrbifoldFrieze F2(Dissection(6, {{0, 3}, {0, 2}, {3, 5}}), 2);
    long M2 = F2.lifted().quiddity().ring_order();
    auto I2 = [&](long v) { return CycInt::integer(M2, v); };
    long want2[3][3] = {{1, 1, 1}, {2, 5, 1}, {1, 3, 2}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(F2.f(i, j) == I2(want2[i][j]));

    // order 3
    OrbifoldFrieze F3(Dissection(9, {{0, 3}, {3, 6}, {0, 6}, {0, 2}, {3, 5}, {6, 8}}), 3);
    long M3 = F3.lifted().quiddity().ring_order();
    auto I3 = [&](long v) { return CycInt::integer(M3, v); };
    long want3[3][3] = {{1, 1, 1}, {2, 7, 1}, {1, 4, 3}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(F3.f(i, j) == I3(want3[i][j]));

    // the worked skein identity: 7 * 3 = 4^2 + 1*4*1 + 1^2
    CHECK(F3.f(1, 1) * F3.f(2, 2) ==
          F3.f(2, 1) * F3.f(2, 1) + F3.lambda_p() * F3.f(2, 1) * F3.f(1, 2) +
              F3.f(1, 2) * F3.f(1, 2));

    CHECK_THROWS_AS(OrbifoldFrieze(Dissection(8, {{0, 4}, {1, 3}, {5, 7}}), 4),
                    UnsupportedOrderError);
    CHECK_THROWS_AS(OrbifoldFrieze(Dissection(6, {{0, 2}, {0, 3}, {3, 5}}), 3),
                    NotSymmetricError);
}

TEST_CASE("quiddity sample period detection") {
    long M = 6;
    std::vector<CycInt> s = ints(M, {1, 7, 1, 3, 1, 4});
    CHECK(InfiniteFrieze::from_quiddity_sample(s).period() == 6);
    std::vector<CycInt> rep = ints(M, {2, 5, 2, 5, 2, 5});
    CHECK(InfiniteFrieze::from_quiddity_sample(rep).period() == 2);
}
