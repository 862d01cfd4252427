#include <doctest.h>

#include <algorithm>
#include <set>

#include "sievekit/cycint.hpp"
#include "sievekit/errors.hpp"
#include "sievekit/json_io.hpp"
#include "sievekit/punctured.hpp"

using namespace sievekit;

TEST_CASE("p_count") {
    CHECK(p_count(1, 1) == 1);
    CHECK(p_count(2, 1) == 1);
    CHECK(p_count(7, 1) == 1);
    CHECK(p_count(1, 2) == 1); // only the diagonal opposite the avoided vertex
    CHECK(p_count(3, 2) == 3);
    CHECK(p_count(3, 3) == 15);
    CHECK(p_count(5, 2) == 5);
    CHECK(p_count(3, 0) == 0);
    // brute-force cross-check: (m+2)-angulations of P_{m*ell+2} avoiding v_0
    for (int m = 1; m <= 3; ++m) {
        for (int ell = 1; ell <= 3; ++ell) {
            TypeVector tv;
            tv.mu.assign(static_cast<size_t>(m), 0);
            tv.mu.back() = ell;
            long brute = 0;
            for (const Dissection& T : enumerate_by_type(tv)) {
                bool avoid = true;
                for (auto [a, b] : T.diagonals)
                    if (a == 0) avoid = false;
                if (avoid) ++brute;
            }
            CHECK(p_count(m, ell) == brute);
        }
    }
}

TEST_CASE("enumerate_punctured and t_count") {
    // 5-angulations of the punctured 15-gon with 3 spokes
    auto all = enumerate_punctured(15, 3, 3);
    CHECK(all.size() == 360);
    CHECK(t_count(15, 3, 3) == 360);
    long with_v0 = 0;
    for (const auto& T : all)
        if (std::find(T.spokes.begin(), T.spokes.end(), 0) != T.spokes.end()) ++with_v0;
    CHECK(with_v0 == 72);
    // sector products for the two spoke gap shapes through v_0
    CHECK(p_count(3, 2) * p_count(3, 2) * p_count(3, 1) == 9);
    CHECK(p_count(3, 3) * p_count(3, 1) * p_count(3, 1) == 15);

    CHECK(enumerate_punctured(3, 1, 1).size() == 6);
    CHECK(enumerate_punctured(3, 1, 2).size() == 3);
    CHECK(enumerate_punctured(3, 1, 3).size() == 1);
    // all-spokes dissections: one per rotational placement of the spoke grid
    CHECK(enumerate_punctured(8, 2, 4).size() == 2);
    CHECK(enumerate_punctured(9, 3, 3).size() == 3);

    // the counting theorem across every subgon parameter up to 10-gons
    for (int n = 1; n <= 10; ++n)
        for (int m = 1; m <= n; ++m) {
            if (n % m != 0) continue;
            for (int s = 1; s <= n / m; ++s)
                CHECK(Int(enumerate_punctured(n, m, s).size()) == t_count(n, m, s));
        }
}

TEST_CASE("t_poly evaluations") {
    CHECK(eval_at_root(t_poly(12, 3, 1), 3).embed_rational() == 12);
    // s and ell in different nonzero classes mod d: evaluation vanishes
    CHECK(eval_at_root(t_poly(12, 3, 2), 3).is_zero());
    CHECK(eval_at_root(t_poly(12, 3, 3), 2).is_zero());
    // centrally symmetric triangulations of the punctured hexagon, 2 spokes
    long fixed = static_cast<long>(fixed_points_punctured(6, 1, 2, 2).size());
    CHECK(eval_at_root(t_poly(6, 1, 2), 2).embed_rational() == fixed);
}

TEST_CASE("rotation and fixed points") {
    for (const auto& T : enumerate_punctured(6, 1, 2)) {
        PuncturedDissection R = T;
        for (int t = 0; t < 6; ++t) R = R.rotate();
        CHECK(R == T);
    }
    // the documented failure witness: evaluation 12, no fixed points
    CHECK(fixed_points_punctured(12, 3, 1, 3).empty());
    CHECK(eval_at_root(t_poly(12, 3, 1), 3).embed_rational() == 12);
    // d = 1 fixes everything
    CHECK(fixed_points_punctured(5, 1, 2, 1).size() == enumerate_punctured(5, 1, 2).size());
}

TEST_CASE("sector quotient bijection") {
    // fixed points of order-d rotation match the quotient enumeration
    auto check_quotient = [](int n, int m, int s, int d) {
        auto fixed = fixed_points_punctured(n, m, s, d);
        auto small = enumerate_punctured(n / d, m, s / d);
        CHECK(fixed.size() == small.size());
        std::set<std::string> keys;
        for (const auto& T : fixed) keys.insert(T.quotient(d).key());
        std::set<std::string> expect;
        for (const auto& T : small) expect.insert(T.key());
        CHECK(keys == expect);
    };
    check_quotient(6, 1, 2, 2);
    check_quotient(6, 1, 3, 3);
    check_quotient(8, 2, 2, 2);
    check_quotient(12, 3, 2, 2);

    // the drawn 2-fold symmetric 4-angulation of the punctured 12-gon
    PuncturedDissection big(12, 2, {1, 5, 7, 11},
                            {Dissection(6, {{2, 5}}), Dissection(4, {}),
                             Dissection(6, {{2, 5}}), Dissection(4, {})});
    PuncturedDissection quot(6, 2, {1, 5}, {Dissection(6, {{2, 5}}), Dissection(4, {})});
    CHECK(big.rotate(6) == big);
    CHECK(big.quotient(2) == quot);
}

TEST_CASE("strip lift") {
    // all-spokes fan lifts to asymptotic arcs only
    PuncturedDissection fan(4, 1, {0, 1, 2, 3},
                            {Dissection(3, {}), Dissection(3, {}), Dissection(3, {}),
                             Dissection(3, {})});
    StripLift L = lift_to_strip(fan, 2);
    CHECK(L.arcs.empty());
    CHECK(L.asymptotic_arcs.size() == 4 * 5);
    // arc multiset invariant under shift by one period
    PuncturedDissection T(6, 1, {1},
                          {Dissection(8, {{1, 3}, {3, 5}, {1, 5}, {5, 7}, {1, 7}})});
    StripLift L2 = lift_to_strip(T, 3);
    std::set<std::pair<long, long>> arcs(L2.arcs.begin(), L2.arcs.end());
    for (auto [a, b] : L2.arcs)
        if (b + 6 <= 2 * 6 + 5) CHECK(arcs.count({a + 6, b + 6}) == 1);
    // face counts at the middle copy reproduce the folded-multiplicity counts
    CHECK(L2.faces_at(0) == 1);
    CHECK(L2.faces_at(1) == 7);
    CHECK(L2.faces_at(2) == 1);
    CHECK(L2.faces_at(3) == 3);
    CHECK(L2.faces_at(4) == 1);
    CHECK(L2.faces_at(5) == 4);
}

TEST_CASE("json round trips") {
    for (const PuncturedDissection& T : enumerate_punctured(6, 2, 2))
        CHECK(punctured_from_json(to_json(T)) == T);
    Dissection D(12, {{0, 9}, {1, 8}, {3, 8}, {3, 6}});
    CHECK(dissection_from_json(to_json(D)) == D);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(PuncturedDissection(6, 1, {}, {}), InvalidInputError);
    CHECK_THROWS_AS(PuncturedDissection(6, 4, {0}, {Dissection(8, {})}), InvalidInputError);
    // sector dissection touching the base vertex
    CHECK_THROWS_AS(PuncturedDissection(4, 1, {0, 2},
                                        {Dissection(4, {{0, 2}}), Dissection(4, {{1, 3}})}),
                    InvalidInputError);
    CHECK_THROWS_AS(enumerate_punctured(6, 4, 1), InvalidInputError);
}
