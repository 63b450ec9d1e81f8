#ifndef CYCPERM_CHECKS_HPP
#define CYCPERM_CHECKS_HPP

#include <string>
#include <vector>

#include "cycperm/egf.hpp"
#include "cycperm/oracle.hpp"
#include "cycperm/recurrences.hpp"
#include "cycperm/report.hpp"

namespace cycperm {

// Every input the identity checks consume, precomputed once. Tests perturb a
// single coefficient here to prove the checks catch it.
struct SequenceStore {
    int max_n = 0;
    PolySequence peak_full;    // P_n(q,x,y)
    PolySequence valley_full;  // V_n(q,x,y)
    PolySequence peak_der;     // P_n(q,x,0)
    PolySequence valley_der;   // V_n(q,x,0)
    PolySequence w;            // W_n(q)
    PolySequence wbar;         // Wbar_n(q)
    PolySequence stirling_s;   // S_n(x)
    PolySequence stirling_t;   // T_n(x)
    PolySequence runs;         // R_n(q)
    PolySequence combined_r;
    PolySequence combined_i;
    std::vector<BigInt> bell;
    std::vector<BigInt> pell;
    std::vector<BigInt> euler;
};

// All sequences through index max_n (runs through max_n + 1 so EGF checks at
// order max_n - 2 always have their shifted series available).
SequenceStore build_store(int max_n);

// Constant terms of M_n and of the combined polynomial both equal the n-th
// Bell number, 1 <= n <= N.
CheckReport check_bell(const SequenceStore& store, int N);

// V_n(-1,1,0) equals Pell(n-1) for 1 <= n <= N; for n <= oracle_cap the same
// value is recomputed as a signed sum over enumerated derangements.
CheckReport check_pell(const SequenceStore& store, int N, int oracle_cap);

// Top coefficients of the combined polynomials of index n+1 equal the n-th
// zigzag (Euler) number, 0 <= n <= N.
CheckReport check_euler(const SequenceStore& store, int N);

// P_n(0,x,1) = S_n(x) and P_n(0,x,0) = T_n(x); the zero-peak column of the
// oracle distribution marginalizes to Stirling rows; the constant term of
// D_n(q) equals T_n(1) for n >= 2.
CheckReport check_stirling(const SequenceStore& store, int N, int oracle_cap);

// deg_q M_n = deg_q D_n = floor((n-1)/2), deg_q Mbar_n = deg_q Dbar_n =
// floor(n/2) - 1, for 2 <= n <= N.
CheckReport check_degrees(const SequenceStore& store, int N);

// [x^1] P_{n+1}(q,x,1) = Wbar_n(q) and [x^1] V_{n+1}(q,x,1) = W_n(q).
CheckReport check_x_coefficient(const SequenceStore& store, int N);

// Scans coefficient rows of the combined polynomials for log-concavity
// (a_{i-1} a_{i+1} <= a_i^2). A violation is reported as a finding, not a
// failure: it would be a discovery, not a bug.
CheckReport check_log_concavity(const SequenceStore& store, int N);

struct SuiteOptions {
    int max_n = 14;
    int oracle_cap = 8;
    int egf_order = 12;
    int jobs = 1;
};

// The six EGF identity checks at the given order.
std::vector<CheckReport> egf_checks(const SequenceStore& store, int order);

// Every check above plus the oracle/recurrence comparison and the EGF
// checks. The aggregate passes iff every report passes.
std::vector<CheckReport> run_all(const SuiteOptions& opts);
std::vector<CheckReport> run_all_on(const SequenceStore& store, const SuiteOptions& opts);

// Checks selected by CLI suite name: all, bell, pell, euler, stirling,
// degrees, xcoeff, logconcave, egf, oracle. Throws std::invalid_argument for
// anything else.
std::vector<CheckReport> run_suite(const std::string& suite, const SuiteOptions& opts);

} // namespace cycperm

#endif
