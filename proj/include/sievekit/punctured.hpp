#pragma once

#include <string>
#include <vector>

#include "sievekit/bigint.hpp"
#include "sievekit/dissect.hpp"
#include "sievekit/qexpr.hpp"

namespace sievekit {

// (m+2)-angulation of the once-punctured polygon P_n^* with boundary vertices
// v_0..v_{n-1} clockwise. Stored as the sorted spoke set plus, per sector
// between consecutive spokes (a, b), the dissection of the cut polygon
// P_{gap+2}: its vertex 0 is the puncture copy, vertices 1..gap+1 are
// v_a, v_{a+1}, ..., v_b. Sector dissections use no diagonal at vertex 0;
// loops and both arcs between a vertex pair are implicit in this encoding.
struct PuncturedDissection {
    int n = 0;
    int m = 1;
    std::vector<int> spokes;         // sorted, nonempty
    std::vector<Dissection> sectors; // sectors[i] follows spokes[i] clockwise

    PuncturedDissection() = default;
    PuncturedDissection(int n_, int m_, std::vector<int> spokes_, std::vector<Dissection> sectors_);

    int spoke_count() const { return static_cast<int>(spokes.size()); }
    int gap(int i) const; // clockwise distance from spokes[i] to the next spoke

    PuncturedDissection rotate() const; // v_i -> v_{i-1}
    PuncturedDissection rotate(int steps) const;

    // sector-collapse onto P_{n/d}^*; requires invariance under n/d-rotation
    PuncturedDissection quotient(int d) const;

    std::string key() const;
    bool operator==(const PuncturedDissection& o) const = default;
    bool operator<(const PuncturedDissection& o) const;
};

std::vector<PuncturedDissection> enumerate_punctured(int n, int m, int s);

// number of (m+2)-angulations of P_{m*ell+2} avoiding one boundary vertex
Int p_count(int m, int ell);

Int t_count(int n, int m, int s);
QExpr t_poly(int n, int m, int s);
// t_n(q) = sum over s of t_{n,s}^{(1)}(q), as a formal sum of terms
QExprSum t_total_poly(int n);

std::vector<PuncturedDissection> fixed_points_punctured(int n, int m, int s, int d);

// Periodic lift to the infinite strip. Vertex t of the strip is the lift of
// boundary vertex (t mod n); spokes lift to asymptotic arcs. Faces carry
// explicit vertex lists; asymptotic faces additionally run off to infinity.
struct StripFace {
    std::vector<long> vertices; // strictly increasing strip coordinates
    bool asymptotic = false;
};

struct StripLift {
    int n = 0;
    long copies = 0; // copies t in [-copies, copies]
    std::vector<long> asymptotic_arcs;
    std::vector<std::pair<long, long>> arcs;
    std::vector<StripFace> faces;

    long faces_at(long v) const;
};

StripLift lift_to_strip(const PuncturedDissection& T, long copies);

} // namespace sievekit
