#ifndef CYCPERM_ORACLE_HPP
#define CYCPERM_ORACLE_HPP

#include <array>
#include <map>

#include "cycperm/mpoly.hpp"
#include "cycperm/perm.hpp"
#include "cycperm/recurrences.hpp"
#include "cycperm/report.hpp"

namespace cycperm {

// Everything in this header recomputes distributions by walking all of S_n
// and reading statistics off standard cycle forms; it never consults the
// recurrence engine, so the two sides can check each other.

inline constexpr int kDefaultOracleCap = 9;

enum class StatKind { Peak, Valley };

// counts[(t,s,r)] = #permutations of [n] with t cyclic peaks (or valleys),
// s cycles and r fixed points.
struct JointDistribution {
    int n = 0;
    StatKind kind = StatKind::Peak;
    std::map<std::array<int, 3>, long long> counts;
};

// Exhaustive distribution over S_n. Streams permutations, never materializes
// the group. jobs > 1 partitions the stream by first entry; the merged result
// does not depend on the partition. Throws std::length_error when n > cap.
JointDistribution joint_distribution(int n, StatKind kind, int jobs = 1,
                                     int cap = kDefaultOracleCap);

// Sum of counts(t,s,r) * q^t x^s y^r.
MPoly distribution_polynomial(const JointDistribution& d);

// Distributions of interior peaks, left peaks and alternating runs over S_n.
struct LinearDistributions {
    int n = 0;
    std::map<int, long long> pk;
    std::map<int, long long> lpk;
    std::map<int, long long> runs;
};

LinearDistributions linear_triangles(int n, int cap = kDefaultOracleCap);

// Compares oracle joint distributions with given recurrence outputs for every
// n <= n_max and both statistic kinds; mismatches name the offending cell.
CheckReport compare_with_recurrence(int n_max, const PolySequence& peak_polys,
                                    const PolySequence& valley_polys, int jobs = 1,
                                    int cap = kDefaultOracleCap);

// Convenience overload that builds the recurrence side itself.
CheckReport compare_with_recurrence(int n_max, int jobs = 1, int cap = kDefaultOracleCap);

} // namespace cycperm

#endif
