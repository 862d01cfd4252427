#pragma once

#include <string>
#include <vector>

#include "sievekit/dissect.hpp"
#include "sievekit/frieze.hpp"

namespace sievekit {

// Lattice path from (0,0) to (m*ell, ell) over steps U = (0,1), R = (1,0),
// staying weakly above y = x/m (the m-ballot property).
struct MDyckPath {
    int m = 1;
    int ell = 0;
    std::string word; // over {U, R}, length (m+1)*ell

    bool operator==(const MDyckPath& o) const = default;
};

// Accepts iff the letter counts and the ballot property hold; NotBallotError
// carries the 1-based index of the first offending prefix.
MDyckPath validate(const std::string& word, int m);

std::vector<MDyckPath> enumerate_dyck(int m, int ell);

// Etherington's vertex sweep: clockwise walk, per-vertex counterclockwise
// survey of incident subgons; first sighting U, sightings 2..m+1 R, last
// sighting silent.
MDyckPath brow(const Dissection& T);

struct BalanceLine {
    long base_x = 0, base_y = 0; // lowest point of the owning up step
    long label_first = 0, label_second = 0;
};

// One line of slope 1/m through the base of each up step except the first;
// the label (i, j+1) comes from the first lattice point after the base that
// lies on the path at a non-corner (corner = incident to both a U and an R).
std::vector<BalanceLine> balance_lines(const MDyckPath& D);

// dissection with the balance-line labels as diagonals
Dissection rtn(const MDyckPath& D);

// up steps on x = i above y = 0 / balance lines labeled (., i)
long up_stat(const MDyckPath& D, long i);
long bal_stat(const MDyckPath& D, long i);

// entry i = (up(i) + bal(i) + 1) * lambda_{m+2}
QuiddityRow quiddity_from_dyck(const MDyckPath& D);

// H(j) = sum of h over the first j steps, h(U) = m, h(R) = -1 (1-based)
std::vector<long> height_sequence(const MDyckPath& D);

// Rotation companion of the polygon rotation under brow/rtn: insert a U after
// the first position p > k with H(p) < m*i for each i = 1..k-1 (k = length of
// the initial U-run), drop the initial U^k R, prepend U, append R.
MDyckPath rot_tilde(const MDyckPath& D);

} // namespace sievekit
