#ifndef CYCPERM_RECURRENCES_HPP
#define CYCPERM_RECURRENCES_HPP

#include <string>
#include <vector>

#include "cycperm/mpoly.hpp"

namespace cycperm {

enum class PolyFamily {
    PeakFull,     // P_n(q,x,y): cyclic peaks, cycles, fixed points
    ValleyFull,   // V_n(q,x,y): cyclic valleys, cycles, fixed points
    PeakDer,      // P_n(q,x,0): the derangement specialization
    ValleyDer,    // V_n(q,x,0)
    PeakLinear,   // W_n(q): interior peaks of one-line words
    LeftPeak,     // Wbar_n(q): left peaks
    Stirling,     // S_n(x): Stirling set polynomials
    StirlingAssoc,// T_n(x): blocks of size >= 2
    Runs,         // R_n(q): alternating runs
    CombinedR,    // M_n(q^2) + q*Mbar_n(q^2), with fiat values below n = 3
    CombinedI     // D_n(q^2) + q*Dbar_n(q^2), with the fiat value at n = 1
};

std::string family_name(PolyFamily f);

// polys[n] is the family's n-th polynomial for start <= n <= max_n().
struct PolySequence {
    PolyFamily family{};
    int start = 0;
    std::vector<MPoly> polys;

    int max_n() const { return static_cast<int>(polys.size()) - 1; }
    const MPoly& at(int n) const { return polys.at(static_cast<std::size_t>(n)); }
};

// P_0..P_N by the insertion recurrence
//   P_{n+1} = (n q + x y) P_n + 2q(1-q) dP_n/dq + x(1-q) dP_n/dx + (1-y) dP_n/dy
// with P_0 = 1, P_1 = x y.
PolySequence pnqxy_sequence(int N);

// V_0..V_N by
//   V_{n+1} = (n q + x y) V_n + 2q(1-q) dV_n/dq + 2x(1-q) dV_n/dx
//             + (1 - 2y + q y) dV_n/dy
// with V_0 = 1, V_1 = x y.
PolySequence vnqxy_sequence(int N);

// P_n(q,x,0) for n = 0..N by
//   P_{n+1} = n q P_n + 2q(1-q) dP_n/dq + x(1-q) dP_n/dx + n x P_{n-1},
// seeded with P_0 = 1, P_1 = 0.
PolySequence derangement_p_sequence(int N);

// V_n(q,x,0) for n = 0..N by
//   V_{n+1} = n q V_n + 2q(1-q) dV_n/dq + 2x(1-q) dV_n/dx + n x V_{n-1},
// seeded with V_0 = 1, V_1 = 0.
PolySequence derangement_v_sequence(int N);

// W_1..W_N and Wbar_1..Wbar_N:
//   W_{n+1}    = (n q - q + 2) W_n    + 2q(1-q) W_n',     W_1 = 1
//   Wbar_{n+1} = (n q + 1)     Wbar_n + 2q(1-q) Wbar_n',  Wbar_1 = 1
std::pair<PolySequence, PolySequence> w_sequences(int N);

// S_0..S_N and T_0..T_N:
//   S_{n+1} = x S_n + x S_n',            S_0 = 1
//   T_{n+1} = x T_n' + n x T_{n-1},      T_0 = 1, T_1 = 0
std::pair<PolySequence, PolySequence> stirling_sequences(int N);

// R_1..R_N by R_{n+2} = q(n q + 2) R_{n+1} + q(1-q^2) R_{n+1}', R_1 = 1.
PolySequence runs_sequence(int N);

// Rows 1..N of the alternating-runs triangle by the independent integer
// recurrence R(n,k) = k R(n-1,k) + 2 R(n-1,k-1) + (n-k) R(n-1,k-2) with
// R(1,0) = 1. Row 1 is the special single value R(1,0); row n >= 2 lists
// R(n,1)..R(n,n-1).
std::vector<std::vector<BigInt>> runs_triangle_rows(int N);

// Combined families: first = M_n(q^2) + q Mbar_n(q^2) for n >= 3 with the
// fiat values 1 and 2+q at n = 1, 2; second = D_n(q^2) + q Dbar_n(q^2) for
// n >= 2 with the fiat value 1 at n = 1.
std::pair<PolySequence, PolySequence> combined_sequences(int N);

enum class TriangleFamily {
    M,          // coefficients of M_n(q) = P_n(q,1,1)
    Mbar,       // Mbar_n(q) = V_n(q,1,1)
    D,          // D_n(q) = P_n(q,1,0)
    Dbar,       // Dbar_n(q) = V_n(q,1,0)
    Runs,
    CombinedR,
    CombinedI,
    StirlingS,
    StirlingT
};

// Maps the CLI family spelling (M, Mbar, D, Dbar, runs, combinedR,
// combinedI, stirlingS, stirlingT). Throws std::invalid_argument.
TriangleFamily triangle_family_from_name(const std::string& name);
std::string triangle_family_name(TriangleFamily f);

struct Triangle {
    TriangleFamily family{};
    int offset = 0; // column index of the first entry of a row
    std::vector<std::vector<BigInt>> rows; // rows[i] is row i+1
};

// Rows 1..N. Rows of a zero polynomial print as the single entry 0.
Triangle triangle(TriangleFamily family, int N);

enum class IntKind { Bell, Pell, Euler, Factorial, Derangement };

// Values 0..N. Bell via the Bell triangle, Euler (zigzag) via the
// Seidel-Entringer boustrophedon, the rest by their two-term recurrences.
std::vector<BigInt> int_sequence(IntKind kind, int N);

} // namespace cycperm

#endif
