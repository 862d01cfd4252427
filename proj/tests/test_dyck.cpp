#include <doctest.h>

#include <map>
#include <set>

#include "sievekit/dyck.hpp"
#include "sievekit/errors.hpp"

using namespace sievekit;

namespace {
const char* kWorkedPath = "UURURRUURRRRRRR"; // the worked 2-Dyck path of order 5
const Dissection& worked_dissection() {
    static Dissection T(12, {{0, 9}, {1, 8}, {3, 8}, {3, 6}});
    return T;
}
} // namespace

TEST_CASE("validation") {
    MDyckPath D = validate("URR", 2);
    CHECK(D.ell == 1);
    CHECK_THROWS_AS(validate("RU", 1), NotBallotError);
    try {
        validate("RURU", 1);
    } catch (const NotBallotError& e) {
        CHECK(e.position == 1);
    }
    try {
        validate("UURRRU", 1);
    } catch (const NotBallotError& e) {
        CHECK(e.position == 5);
    }
    CHECK_THROWS_AS(validate("UUR", 1), InvalidInputError); // count mismatch
    CHECK(validate(kWorkedPath, 2).ell == 5);
}

TEST_CASE("enumeration counts are Fuss-Catalan") {
    CHECK(enumerate_dyck(1, 3).size() == 5);
    CHECK(enumerate_dyck(2, 2).size() == 3);
    CHECK(enumerate_dyck(3, 1).size() == 1);
    for (int m = 1; m <= 3; ++m)
        for (int ell = 1; ell <= 4; ++ell)
            CHECK(Int(enumerate_dyck(m, ell).size()) ==
                  binomial((m + 1) * ell, ell) / (m * ell + 1));
}

TEST_CASE("brow on the worked examples") {
    CHECK(brow(worked_dissection()).word == kWorkedPath);
    CHECK(brow(Dissection(4, {})).word == "URR"); // single 4-gon, m = 2
    CHECK(brow(Dissection(5, {})).word == "URRR");
    CHECK(brow(Dissection(4, {{0, 2}})).word == "UURR"); // fan of the square at v_0
}

TEST_CASE("balance line labels of the worked path") {
    MDyckPath D = validate(kWorkedPath, 2);
    std::multiset<std::pair<long, long>> labels;
    for (const BalanceLine& bl : balance_lines(D)) labels.insert({bl.label_first, bl.label_second});
    std::multiset<std::pair<long, long>> want{{0, 9}, {1, 8}, {3, 8}, {3, 6}};
    CHECK(labels == want);
    CHECK(rtn(D) == worked_dissection());
    // a path with no balance lines
    CHECK(balance_lines(validate("URR", 2)).empty());
    CHECK(rtn(validate("URR", 2)) == Dissection(4, {}));
}

TEST_CASE("statistics") {
    MDyckPath D = validate(kWorkedPath, 2);
    CHECK(up_stat(D, 0) == 1);
    CHECK(up_stat(D, 1) == 1);
    CHECK(up_stat(D, 2) == 0);
    CHECK(up_stat(D, 3) == 2);
    CHECK(bal_stat(D, 6) == 1);
    CHECK(bal_stat(D, 8) == 2);
    CHECK(bal_stat(D, 9) == 1);
    long up_total = 0, bal_total = 0;
    for (long i = 0; i <= 11; ++i) {
        up_total += up_stat(D, i);
        bal_total += bal_stat(D, i);
    }
    CHECK(up_total == D.ell - 1); // the first up step is excluded
    CHECK(bal_total == D.ell - 1);
}

TEST_CASE("height sequence") {
    std::vector<long> want{2, 4, 3, 5, 4, 3, 5, 7, 6, 5, 4, 3, 2, 1, 0};
    CHECK(height_sequence(validate(kWorkedPath, 2)) == want);
    CHECK(height_sequence(validate("URRR", 3)) == std::vector<long>{3, 2, 1, 0});
}

TEST_CASE("quiddity from a path matches the frieze of its dissection") {
    MDyckPath D = validate(kWorkedPath, 2);
    QuiddityRow q = quiddity_from_dyck(D);
    long M = q.ring_order();
    CycInt lam = CycInt::lambda(4, M);
    std::vector<long> coeffs{2, 2, 1, 3, 1, 1, 2, 1, 3, 2, 1, 1};
    for (size_t i = 0; i < coeffs.size(); ++i)
        CHECK(q.entries[i] == CycInt::integer(M, coeffs[i]) * lam);
    CHECK(q == frieze_from_dissection(rtn(D)).quiddity());

    // single-subgon path: all-ones coefficients
    QuiddityRow q1 = quiddity_from_dyck(validate("URRR", 3));
    CycInt l5 = CycInt::lambda(5, q1.ring_order());
    for (const CycInt& e : q1.entries) CHECK(e == l5);

    for (int m = 1; m <= 2; ++m)
        for (int ell = 1; ell <= 3; ++ell)
            for (const MDyckPath& P : enumerate_dyck(m, ell))
                CHECK(quiddity_from_dyck(P) == frieze_from_dissection(rtn(P)).quiddity());
}

TEST_CASE("brow and rtn are inverse bijections") {
    for (int m = 1; m <= 3; ++m) {
        for (int ell = 1; ell <= 4; ++ell) {
            if (m * ell > 10) continue; // the larger cases run in the acceptance suite
            auto paths = enumerate_dyck(m, ell);
            std::set<std::string> seen;
            for (const MDyckPath& D : paths) {
                Dissection T = rtn(D);
                CHECK(brow(T).word == D.word);
                seen.insert(T.key());
            }
            CHECK(seen.size() == paths.size());
            TypeVector tv;
            tv.mu.assign(static_cast<size_t>(m), 0);
            tv.mu.back() = ell;
            for (const Dissection& T : enumerate_by_type(tv)) CHECK(rtn(brow(T)) == T);
        }
    }
}

TEST_CASE("rot_tilde") {
    MDyckPath D = validate(kWorkedPath, 2);
    CHECK(rot_tilde(D).word == "UURRUURRRRRRURR");
    CHECK(rot_tilde(validate("URR", 2)).word == "URR");
    CHECK(rot_tilde(validate("UR", 1)).word == "UR");

    // order divides m*ell + 2
    for (int m = 1; m <= 2; ++m) {
        for (int ell = 1; ell <= 3; ++ell) {
            for (const MDyckPath& P : enumerate_dyck(m, ell)) {
                MDyckPath R = P;
                for (int t = 0; t < m * ell + 2; ++t) R = rot_tilde(R);
                CHECK(R.word == P.word);
            }
        }
    }

    // commuting diagram: brow(rotate(T)) = rot_tilde(brow(T))
    for (int m = 1; m <= 3; ++m) {
        for (int ell = 1; ell <= 4; ++ell) {
            if (m * ell + 2 > 11) continue; // 12-gon cases covered by the acceptance suite
            TypeVector tv;
            tv.mu.assign(static_cast<size_t>(m), 0);
            tv.mu.back() = ell;
            for (const Dissection& T : enumerate_by_type(tv))
                CHECK(brow(T.rotate()).word == rot_tilde(brow(T)).word);
        }
    }
}
