#include "cycperm/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace cycperm {

namespace {

void check_cap(int n, int cap) {
    if (n < 0) throw std::invalid_argument("oracle: n must be nonnegative");
    if (n > cap) {
        throw std::length_error("oracle: n = " + std::to_string(n) +
                                " exceeds the enumeration cap of " + std::to_string(cap));
    }
}

void accumulate(JointDistribution& d, const std::vector<int>& word, StatKind kind) {
    CycleStats s = cycle_stats(cycle_form(Permutation(word)));
    int t = kind == StatKind::Peak ? s.cpk : s.cval;
    ++d.counts[{t, s.cyc, s.fix}];
}

void merge(JointDistribution& into, const JointDistribution& from) {
    for (const auto& [key, count] : from.counts) into.counts[key] += count;
}

} // namespace

JointDistribution joint_distribution(int n, StatKind kind, int jobs, int cap) {
    check_cap(n, cap);
    JointDistribution d;
    d.n = n;
    d.kind = kind;
    if (n == 0) {
        d.counts[{0, 0, 0}] = 1;
        return d;
    }
    if (jobs <= 1 || n < 2) {
        for_each_permutation(n, [&](const std::vector<int>& w) { accumulate(d, w, kind); });
        return d;
    }
    int workers = std::min(jobs, n);
    std::vector<JointDistribution> partials(static_cast<std::size_t>(workers));
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            auto& local = partials[static_cast<std::size_t>(w)];
            local.n = n;
            local.kind = kind;
            for (int first = w + 1; first <= n; first += workers) {
                for_each_permutation_with_first(
                    n, first, [&](const std::vector<int>& word) { accumulate(local, word, kind); });
            }
        });
    }
    for (auto& t : threads) t.join();
    for (const auto& partial : partials) merge(d, partial);
    return d;
}

MPoly distribution_polynomial(const JointDistribution& d) {
    MPoly p;
    for (const auto& [key, count] : d.counts) {
        p += MPoly::monomial(BigInt(count), key[0], key[1], key[2]);
    }
    return p;
}

LinearDistributions linear_triangles(int n, int cap) {
    check_cap(n, cap);
    LinearDistributions d;
    d.n = n;
    for_each_permutation(n, [&](const std::vector<int>& w) {
        LinearStats s = linear_stats(Permutation(w));
        ++d.pk[s.pk];
        ++d.lpk[s.lpk];
        ++d.runs[s.runs];
    });
    return d;
}

CheckReport compare_with_recurrence(int n_max, const PolySequence& peak_polys,
                                    const PolySequence& valley_polys, int jobs, int cap) {
    CheckReport report;
    report.name = "oracle.recurrence-equivalence";
    report.range = "n=1.." + std::to_string(n_max);
    for (int n = 1; n <= n_max; ++n) {
        for (StatKind kind : {StatKind::Peak, StatKind::Valley}) {
            const char* kind_name = kind == StatKind::Peak ? "peak" : "valley";
            MPoly oracle_poly = distribution_polynomial(joint_distribution(n, kind, jobs, cap));
            const MPoly& recurrence_poly =
                kind == StatKind::Peak ? peak_polys.at(n) : valley_polys.at(n);
            if (oracle_poly == recurrence_poly) continue;
            // Name every differing cell.
            MPoly diff = recurrence_poly - oracle_poly;
            for (const auto& [e, c] : diff.terms()) {
                BigInt expected = oracle_poly.coeff(e.q, e.x, e.y);
                BigInt actual = recurrence_poly.coeff(e.q, e.x, e.y);
                report.mismatches.push_back(
                    {std::string("(kind=") + kind_name + ",n=" + std::to_string(n) +
                         ",t=" + std::to_string(e.q) + ",s=" + std::to_string(e.x) +
                         ",r=" + std::to_string(e.y) + ")",
                     expected.to_string(), actual.to_string()});
            }
        }
    }
    report.details.push_back(report.pass()
                                 ? "joint distributions match the recurrence outputs exactly"
                                 : std::to_string(report.mismatches.size()) + " cells differ");
    return report;
}

CheckReport compare_with_recurrence(int n_max, int jobs, int cap) {
    return compare_with_recurrence(n_max, pnqxy_sequence(n_max), vnqxy_sequence(n_max), jobs, cap);
}

} // namespace cycperm
