#include "cycperm/recurrences.hpp"

#include <stdexcept>

namespace cycperm {

namespace {

const MPoly kQ = MPoly::variable(Var::Q);
const MPoly kX = MPoly::variable(Var::X);
const MPoly kY = MPoly::variable(Var::Y);

MPoly two_q_one_minus_q() { return MPoly(2) * kQ * (MPoly(1) - kQ); }

} // namespace

std::string family_name(PolyFamily f) {
    switch (f) {
        case PolyFamily::PeakFull: return "P";
        case PolyFamily::ValleyFull: return "V";
        case PolyFamily::PeakDer: return "Pder";
        case PolyFamily::ValleyDer: return "Vder";
        case PolyFamily::PeakLinear: return "W";
        case PolyFamily::LeftPeak: return "Wbar";
        case PolyFamily::Stirling: return "S";
        case PolyFamily::StirlingAssoc: return "T";
        case PolyFamily::Runs: return "runs";
        case PolyFamily::CombinedR: return "combinedR";
        default: return "combinedI";
    }
}

PolySequence pnqxy_sequence(int N) {
    PolySequence s{PolyFamily::PeakFull, 0, {}};
    s.polys.reserve(static_cast<std::size_t>(N) + 1);
    s.polys.push_back(MPoly(1));
    if (N >= 1) s.polys.push_back(kX * kY);
    for (int n = 1; n < N; ++n) {
        const MPoly& p = s.polys.back();
        MPoly next = (MPoly(n) * kQ + kX * kY) * p + two_q_one_minus_q() * p.partial(Var::Q) +
                     kX * (MPoly(1) - kQ) * p.partial(Var::X) +
                     (MPoly(1) - kY) * p.partial(Var::Y);
        s.polys.push_back(std::move(next));
    }
    return s;
}

PolySequence vnqxy_sequence(int N) {
    PolySequence s{PolyFamily::ValleyFull, 0, {}};
    s.polys.reserve(static_cast<std::size_t>(N) + 1);
    s.polys.push_back(MPoly(1));
    if (N >= 1) s.polys.push_back(kX * kY);
    for (int n = 1; n < N; ++n) {
        const MPoly& v = s.polys.back();
        MPoly next = (MPoly(n) * kQ + kX * kY) * v + two_q_one_minus_q() * v.partial(Var::Q) +
                     MPoly(2) * kX * (MPoly(1) - kQ) * v.partial(Var::X) +
                     (MPoly(1) - MPoly(2) * kY + kQ * kY) * v.partial(Var::Y);
        s.polys.push_back(std::move(next));
    }
    return s;
}

PolySequence derangement_p_sequence(int N) {
    PolySequence s{PolyFamily::PeakDer, 0, {}};
    s.polys.reserve(static_cast<std::size_t>(N) + 1);
    s.polys.push_back(MPoly(1));
    if (N >= 1) s.polys.push_back(MPoly(0));
    for (int n = 1; n < N; ++n) {
        const MPoly& p = s.polys[static_cast<std::size_t>(n)];
        const MPoly& prev = s.polys[static_cast<std::size_t>(n) - 1];
        MPoly next = MPoly(n) * kQ * p + two_q_one_minus_q() * p.partial(Var::Q) +
                     kX * (MPoly(1) - kQ) * p.partial(Var::X) + MPoly(n) * kX * prev;
        s.polys.push_back(std::move(next));
    }
    return s;
}

PolySequence derangement_v_sequence(int N) {
    PolySequence s{PolyFamily::ValleyDer, 0, {}};
    s.polys.reserve(static_cast<std::size_t>(N) + 1);
    s.polys.push_back(MPoly(1));
    if (N >= 1) s.polys.push_back(MPoly(0));
    for (int n = 1; n < N; ++n) {
        const MPoly& v = s.polys[static_cast<std::size_t>(n)];
        const MPoly& prev = s.polys[static_cast<std::size_t>(n) - 1];
        MPoly next = MPoly(n) * kQ * v + two_q_one_minus_q() * v.partial(Var::Q) +
                     MPoly(2) * kX * (MPoly(1) - kQ) * v.partial(Var::X) + MPoly(n) * kX * prev;
        s.polys.push_back(std::move(next));
    }
    return s;
}

std::pair<PolySequence, PolySequence> w_sequences(int N) {
    PolySequence w{PolyFamily::PeakLinear, 1, {MPoly(0)}};
    PolySequence wbar{PolyFamily::LeftPeak, 1, {MPoly(0)}};
    if (N >= 1) {
        w.polys.push_back(MPoly(1));
        wbar.polys.push_back(MPoly(1));
    }
    for (int n = 1; n < N; ++n) {
        const MPoly& wn = w.polys.back();
        const MPoly& bn = wbar.polys.back();
        w.polys.push_back((MPoly(n) * kQ - kQ + MPoly(2)) * wn +
                          two_q_one_minus_q() * wn.partial(Var::Q));
        wbar.polys.push_back((MPoly(n) * kQ + MPoly(1)) * bn +
                             two_q_one_minus_q() * bn.partial(Var::Q));
    }
    return {std::move(w), std::move(wbar)};
}

std::pair<PolySequence, PolySequence> stirling_sequences(int N) {
    PolySequence s{PolyFamily::Stirling, 0, {MPoly(1)}};
    PolySequence t{PolyFamily::StirlingAssoc, 0, {MPoly(1)}};
    if (N >= 1) t.polys.push_back(MPoly(0));
    for (int n = 0; n < N; ++n) {
        const MPoly& sn = s.polys.back();
        s.polys.push_back(kX * sn + kX * sn.partial(Var::X));
    }
    for (int n = 1; n < N; ++n) {
        const MPoly& tn = t.polys[static_cast<std::size_t>(n)];
        const MPoly& prev = t.polys[static_cast<std::size_t>(n) - 1];
        t.polys.push_back(kX * tn.partial(Var::X) + MPoly(n) * kX * prev);
    }
    return {std::move(s), std::move(t)};
}

PolySequence runs_sequence(int N) {
    PolySequence s{PolyFamily::Runs, 1, {MPoly(0)}};
    if (N >= 1) s.polys.push_back(MPoly(1));
    for (int n = 0; n + 2 <= N; ++n) {
        const MPoly& r = s.polys.back();
        s.polys.push_back(kQ * (MPoly(n) * kQ + MPoly(2)) * r +
                          kQ * (MPoly(1) - kQ * kQ) * r.partial(Var::Q));
    }
    return s;
}

std::vector<std::vector<BigInt>> runs_triangle_rows(int N) {
    // r[n][k] with k = 0..n-1
    std::vector<std::vector<BigInt>> r(static_cast<std::size_t>(N) + 1);
    std::vector<std::vector<BigInt>> rows;
    if (N >= 1) {
        r[1] = {BigInt(1)};
        rows.push_back({BigInt(1)});
    }
    for (int n = 2; n <= N; ++n) {
        auto& row = r[static_cast<std::size_t>(n)];
        row.assign(static_cast<std::size_t>(n), BigInt());
        auto prev_at = [&](int k) {
            const auto& prev = r[static_cast<std::size_t>(n) - 1];
            if (k < 0 || k >= static_cast<int>(prev.size())) return BigInt();
            return prev[static_cast<std::size_t>(k)];
        };
        for (int k = 1; k < n; ++k) {
            row[static_cast<std::size_t>(k)] = BigInt(k) * prev_at(k) +
                                               BigInt(2) * prev_at(k - 1) +
                                               BigInt(n - k) * prev_at(k - 2);
        }
        rows.emplace_back(row.begin() + 1, row.end());
    }
    return rows;
}

std::pair<PolySequence, PolySequence> combined_sequences(int N) {
    PolySequence combR{PolyFamily::CombinedR, 1, {MPoly(0)}};
    PolySequence combI{PolyFamily::CombinedI, 1, {MPoly(0)}};
    PolySequence P = pnqxy_sequence(N);
    PolySequence V = vnqxy_sequence(N);
    PolySequence Pder = derangement_p_sequence(N);
    PolySequence Vder = derangement_v_sequence(N);
    const BigInt one(1);
    for (int n = 1; n <= N; ++n) {
        if (n == 1) {
            combR.polys.push_back(MPoly(1));
        } else if (n == 2) {
            combR.polys.push_back(MPoly(2) + kQ);
        } else {
            MPoly m = P.at(n).subst(Var::X, one).subst(Var::Y, one);
            MPoly mbar = V.at(n).subst(Var::X, one).subst(Var::Y, one);
            combR.polys.push_back(m.subst_q_squared() + kQ * mbar.subst_q_squared());
        }
        if (n == 1) {
            combI.polys.push_back(MPoly(1));
        } else {
            MPoly d = Pder.at(n).subst(Var::X, one);
            MPoly dbar = Vder.at(n).subst(Var::X, one);
            combI.polys.push_back(d.subst_q_squared() + kQ * dbar.subst_q_squared());
        }
    }
    return {std::move(combR), std::move(combI)};
}

TriangleFamily triangle_family_from_name(const std::string& name) {
    if (name == "M") return TriangleFamily::M;
    if (name == "Mbar") return TriangleFamily::Mbar;
    if (name == "D") return TriangleFamily::D;
    if (name == "Dbar") return TriangleFamily::Dbar;
    if (name == "runs") return TriangleFamily::Runs;
    if (name == "combinedR") return TriangleFamily::CombinedR;
    if (name == "combinedI") return TriangleFamily::CombinedI;
    if (name == "stirlingS") return TriangleFamily::StirlingS;
    if (name == "stirlingT") return TriangleFamily::StirlingT;
    throw std::invalid_argument("unknown triangle family: " + name);
}

std::string triangle_family_name(TriangleFamily f) {
    switch (f) {
        case TriangleFamily::M: return "M";
        case TriangleFamily::Mbar: return "Mbar";
        case TriangleFamily::D: return "D";
        case TriangleFamily::Dbar: return "Dbar";
        case TriangleFamily::Runs: return "runs";
        case TriangleFamily::CombinedR: return "combinedR";
        case TriangleFamily::CombinedI: return "combinedI";
        case TriangleFamily::StirlingS: return "stirlingS";
        default: return "stirlingT";
    }
}

namespace {

// Coefficients of a univariate polynomial from `offset` through its degree;
// a zero polynomial gives the single entry 0.
std::vector<BigInt> row_of(const MPoly& p, Var v, int offset) {
    std::vector<BigInt> coeffs = p.univariate_coeffs(v);
    if (p.is_zero() || static_cast<int>(coeffs.size()) <= offset) return {BigInt()};
    if (offset > 0) coeffs.erase(coeffs.begin(), coeffs.begin() + offset);
    return coeffs;
}

} // namespace

Triangle triangle(TriangleFamily family, int N) {
    if (N < 1) throw std::invalid_argument("triangle: N must be >= 1");
    Triangle t;
    t.family = family;
    const BigInt one(1), zero(0);
    switch (family) {
        case TriangleFamily::M:
        case TriangleFamily::Mbar:
        case TriangleFamily::D:
        case TriangleFamily::Dbar: {
            t.offset = 0;
            bool peak = family == TriangleFamily::M || family == TriangleFamily::D;
            bool full = family == TriangleFamily::M || family == TriangleFamily::Mbar;
            PolySequence seq = full ? (peak ? pnqxy_sequence(N) : vnqxy_sequence(N))
                                    : (peak ? derangement_p_sequence(N)
                                            : derangement_v_sequence(N));
            for (int n = 1; n <= N; ++n) {
                MPoly p = seq.at(n).subst(Var::X, one);
                if (full) p = p.subst(Var::Y, one);
                t.rows.push_back(row_of(p, Var::Q, 0));
            }
            break;
        }
        case TriangleFamily::Runs: {
            t.offset = 1;
            PolySequence seq = runs_sequence(N);
            t.rows.push_back({BigInt(1)}); // R(1,0) = 1, kept as a special row
            for (int n = 2; n <= N; ++n) t.rows.push_back(row_of(seq.at(n), Var::Q, 1));
            break;
        }
        case TriangleFamily::CombinedR:
        case TriangleFamily::CombinedI: {
            t.offset = 0;
            auto [combR, combI] = combined_sequences(N);
            const PolySequence& seq = family == TriangleFamily::CombinedR ? combR : combI;
            for (int n = 1; n <= N; ++n) t.rows.push_back(row_of(seq.at(n), Var::Q, 0));
            break;
        }
        case TriangleFamily::StirlingS:
        case TriangleFamily::StirlingT: {
            t.offset = 1;
            auto [s, tt] = stirling_sequences(N);
            const PolySequence& seq = family == TriangleFamily::StirlingS ? s : tt;
            for (int n = 1; n <= N; ++n) t.rows.push_back(row_of(seq.at(n), Var::X, 1));
            break;
        }
    }
    return t;
}

std::vector<BigInt> int_sequence(IntKind kind, int N) {
    std::vector<BigInt> v;
    v.reserve(static_cast<std::size_t>(N) + 1);
    switch (kind) {
        case IntKind::Bell: {
            // Bell triangle: each row starts with the previous row's last
            // entry; B_n is the first entry of row n.
            std::vector<BigInt> row{BigInt(1)};
            v.push_back(BigInt(1));
            for (int n = 1; n <= N; ++n) {
                std::vector<BigInt> next;
                next.reserve(row.size() + 1);
                next.push_back(row.back());
                for (const BigInt& x : row) next.push_back(next.back() + x);
                row = std::move(next);
                v.push_back(row.front());
            }
            break;
        }
        case IntKind::Pell: {
            for (int n = 0; n <= N; ++n) {
                if (n == 0) v.push_back(BigInt(0));
                else if (n == 1) v.push_back(BigInt(1));
                else v.push_back(BigInt(2) * v[static_cast<std::size_t>(n) - 1] +
                                 v[static_cast<std::size_t>(n) - 2]);
            }
            break;
        }
        case IntKind::Euler: {
            // Seidel-Entringer boustrophedon: e(n,k) = e(n,k-1) + e(n-1,n-k),
            // e(0,0) = 1, e(n,0) = 0; the zigzag number is e(n,n).
            std::vector<BigInt> prev{BigInt(1)};
            v.push_back(BigInt(1));
            for (int n = 1; n <= N; ++n) {
                std::vector<BigInt> cur(static_cast<std::size_t>(n) + 1);
                for (int k = 1; k <= n; ++k) {
                    cur[static_cast<std::size_t>(k)] =
                        cur[static_cast<std::size_t>(k) - 1] +
                        prev[static_cast<std::size_t>(n - k)];
                }
                v.push_back(cur.back());
                prev = std::move(cur);
            }
            break;
        }
        case IntKind::Factorial: {
            BigInt f(1);
            v.push_back(f);
            for (int n = 1; n <= N; ++n) {
                f *= BigInt(n);
                v.push_back(f);
            }
            break;
        }
        case IntKind::Derangement: {
            for (int n = 0; n <= N; ++n) {
                if (n == 0) v.push_back(BigInt(1));
                else {
                    BigInt d = BigInt(n) * v[static_cast<std::size_t>(n) - 1];
                    v.push_back(n % 2 == 0 ? d + BigInt(1) : d - BigInt(1));
                }
            }
            break;
        }
    }
    return v;
}

} // namespace cycperm
