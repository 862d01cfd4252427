#pragma once

#include <vector>

#include "sievekit/cycint.hpp"
#include "sievekit/dissect.hpp"
#include "sievekit/punctured.hpp"

namespace sievekit {

// The cyclic row F(i-1, i+1); entry i belongs to vertex v_i. Determines the
// whole pattern through the three-term recursion
//   F(i, j+1) = q_j * F(i, j) - F(i, j-1),
// i.e. F(i, j) is the tridiagonal determinant of the entries strictly
// between i and j.
struct QuiddityRow {
    std::vector<CycInt> entries;

    long size() const { return static_cast<long>(entries.size()); }
    long ring_order() const { return entries.empty() ? 1 : entries.front().order(); }
    const CycInt& at(long i) const; // cyclic access
    long minimal_period() const;
    QuiddityRow shifted(long t) const; // entry i of result = entry i+t
    bool operator==(const QuiddityRow& o) const { return entries == o.entries; }
};

// window determinant D_k(x_1..x_k): D_0 = 1, D_1 = x_1, D_t = x_t D_{t-1} - D_{t-2}
CycInt frieze_window(const QuiddityRow& q, long lo, long len);

// classical continuant K_0 = 1, K_1(x) = x, K_t = x_t K_{t-1} + K_{t-2}
// (continued-fraction numerators; the frieze recursion above flips the sign)
CycInt continuant(std::span<const CycInt> xs);

class FriezePattern {
  public:
    FriezePattern(long width, QuiddityRow quiddity);

    long width() const { return width_; }
    const QuiddityRow& quiddity() const { return q_; }

    // F(i, j) for 0 <= j - i <= width; OutOfBandError beyond.
    CycInt value(long i, long j) const;
    // same recursion on the periodically extended quiddity, any j >= i
    CycInt extend_value(long i, long j) const;

    FriezePattern shift_rows(long t) const; // F'(i,j) = F(i+t, j+t)

    // s_1 = F(i, i+p+1) - F(i+1, i+p) on the extension, p the minimal quiddity
    // period; verified constant over a full period (NonConstantError if not).
    CycInt principal_growth() const;

    bool operator==(const FriezePattern& o) const = default;

  private:
    long width_;
    QuiddityRow q_;
};

class InfiniteFrieze {
  public:
    explicit InfiniteFrieze(QuiddityRow quiddity);

    // The given entries are read as a sample of the periodic quiddity row:
    // the row is extended with the smallest period consistent with the sample.
    static InfiniteFrieze from_quiddity_sample(std::vector<CycInt> entries);

    long period() const { return q_.size(); }
    const QuiddityRow& quiddity() const { return q_; }

    CycInt value(long i, long j) const; // any j >= i

    // s_k = F(i, i+pk+1) - F(i+1, i+pk), p the minimal quiddity period;
    // NonConstantError when the differences disagree across i.
    CycInt growth_coefficient(long k) const;

  private:
    QuiddityRow q_;
};

// normalized Chebyshev: T_0 = 2, T_1 = x, T_k = x T_{k-1} - T_{k-2}
CycInt chebyshev_t(long k, const CycInt& x);

// ring order for a set of subgon sizes: lcm(6, 2p_1, ..., 2p_s)
long frieze_ring_order(const std::vector<int>& subgon_sizes);

FriezePattern frieze_from_dissection(const Dissection& T);
InfiniteFrieze frieze_from_punctured(const PuncturedDissection& T);

// Broline-Crowe-Isaacs count: sequences of distinct triangles Q_{i+1}..Q_{j-1}
// with Q_k incident to v_k. Triangulations only (NotTriangulationError).
Int bci_matchings(const Dissection& T, long i, long j);
Int bci_matchings(const PuncturedDissection& T, long i, long j);

// entries equal to 1 with j - i >= 2 in one fundamental domain, scanned up to
// j - i <= window
long ones_in_fundamental_domain(const InfiniteFrieze& F, long window);

// Frieze on the orbifold P_n^* (orbifold point of order p in {2,3}), realized
// through the rotation-invariant lifted triangulation of P_{pn}. The accessor
// convention f(v_i, v_j) = F_lift(i, j + n*[j <= i]) reproduces the worked
// tables; in particular f(v_i, v_i) is the pending-arc value F_lift(i, i+n).
class OrbifoldFrieze {
  public:
    OrbifoldFrieze(const Dissection& lifted_triangulation, int p);

    int n() const { return n_; }
    int p() const { return p_; }
    const FriezePattern& lifted() const { return lifted_frieze_; }
    CycInt f(long i, long j) const;
    CycInt lambda_p() const;

  private:
    int n_, p_;
    FriezePattern lifted_frieze_;
};

} // namespace sievekit
