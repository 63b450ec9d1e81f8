#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cycperm/recurrences.hpp"
#include "fixtures.hpp"

using namespace cycperm;

namespace {

const MPoly q = MPoly::variable(Var::Q);
const MPoly x = MPoly::variable(Var::X);

std::vector<BigInt> to_big(const std::vector<long long>& row) {
    std::vector<BigInt> out;
    out.reserve(row.size());
    for (long long v : row) out.emplace_back(v);
    return out;
}

// Test-side oracle: counts partitions of [n] by number of blocks, optionally
// requiring every block to have at least two elements.
std::vector<long long> partition_counts(int n, int min_block) {
    std::vector<long long> by_blocks(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::vector<int>> blocks;
    auto rec = [&](auto&& self, int next) -> void {
        if (next > n) {
            for (const auto& b : blocks) {
                if (static_cast<int>(b.size()) < min_block) return;
            }
            ++by_blocks[blocks.size()];
            return;
        }
        std::size_t existing = blocks.size();
        for (std::size_t i = 0; i < existing; ++i) {
            blocks[i].push_back(next);
            self(self, next + 1);
            blocks[i].pop_back();
        }
        blocks.push_back({next});
        self(self, next + 1);
        blocks.pop_back();
    };
    rec(rec, 1);
    return by_blocks;
}

// Test-side oracle: permutations with pi(1) > pi(2) < pi(3) > ...
long long count_alternating(int n) {
    if (n == 0) return 1;
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
    long long count = 0;
    do {
        bool ok = true;
        for (int i = 0; i + 1 < n && ok; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            ok = i % 2 == 0 ? w[ui] > w[ui + 1] : w[ui] < w[ui + 1];
        }
        if (ok) ++count;
    } while (std::next_permutation(w.begin(), w.end()));
    return count;
}

} // namespace

TEST_CASE("peak and valley polynomials match the reference expressions") {
    PolySequence p = pnqxy_sequence(4);
    CHECK(p.at(0) == MPoly(1));
    for (std::size_t n = 1; n <= 4; ++n) {
        CHECK(p.at(static_cast<int>(n)) == MPoly::parse(fixtures::kPeakPolys[n - 1]));
    }
    PolySequence v = vnqxy_sequence(5);
    for (std::size_t n = 1; n <= 5; ++n) {
        CHECK(v.at(static_cast<int>(n)) == MPoly::parse(fixtures::kValleyPolys[n - 1]));
    }
}

TEST_CASE("derangement specializations") {
    PolySequence p = derangement_p_sequence(5);
    CHECK(p.at(0) == MPoly(1));
    CHECK(p.at(1).is_zero());
    CHECK(p.at(2) == x);
    CHECK(p.at(3) == (MPoly(1) + q) * x);
    CHECK(p.at(4) == MPoly::parse("(1+5q)x + 3x^2"));
    PolySequence v = derangement_v_sequence(5);
    CHECK(v.at(2) == x);
    CHECK(v.at(3) == MPoly(2) * x);
    CHECK(v.at(4) == MPoly::parse("(4+2q)x + 3x^2"));
    CHECK(v.at(5) == MPoly::parse("(8+16q)x + 20x^2"));

    // Agreement with the y = 0 slice of the full polynomials.
    PolySequence pf = pnqxy_sequence(12), vf = vnqxy_sequence(12);
    PolySequence pd = derangement_p_sequence(12), vd = derangement_v_sequence(12);
    for (int n = 0; n <= 12; ++n) {
        CHECK(pd.at(n) == pf.at(n).coefficient_of(Var::Y, 0));
        CHECK(vd.at(n) == vf.at(n).coefficient_of(Var::Y, 0));
    }
}

TEST_CASE("interior and left peak polynomials") {
    auto [w, wbar] = w_sequences(12);
    CHECK(w.at(1) == MPoly(1));
    CHECK(w.at(2) == MPoly(2));
    CHECK(w.at(3) == MPoly::parse("4+2q"));
    CHECK(w.at(4) == MPoly::parse("8+16q"));
    CHECK(wbar.at(1) == MPoly(1));
    CHECK(wbar.at(2) == MPoly::parse("1+q"));
    CHECK(wbar.at(3) == MPoly::parse("1+5q"));

    // The x-coefficient identities tie them to the full families.
    PolySequence pf = pnqxy_sequence(13), vf = vnqxy_sequence(13);
    const BigInt one(1);
    for (int n = 1; n <= 12; ++n) {
        CHECK(pf.at(n + 1).subst(Var::Y, one).coefficient_of(Var::X, 1) == wbar.at(n));
        CHECK(vf.at(n + 1).subst(Var::Y, one).coefficient_of(Var::X, 1) == w.at(n));
    }
}

TEST_CASE("Stirling polynomials against brute-force partition counts") {
    auto [s, t] = stirling_sequences(8);
    CHECK(s.at(1) == x);
    CHECK(s.at(4) == MPoly::parse("x + 7x^2 + 6x^3 + x^4"));
    CHECK(t.at(0) == MPoly(1));
    CHECK(t.at(1).is_zero());
    CHECK(t.at(2) == x);
    CHECK(t.at(3) == x);
    CHECK(t.at(4) == MPoly::parse("x + 3x^2"));
    for (int n = 1; n <= 8; ++n) {
        auto all = partition_counts(n, 1);
        auto assoc = partition_counts(n, 2);
        auto srow = s.at(n).univariate_coeffs(Var::X);
        auto trow = t.at(n).univariate_coeffs(Var::X);
        for (int k = 1; k <= n; ++k) {
            BigInt sk = k < static_cast<int>(srow.size()) ? srow[static_cast<std::size_t>(k)]
                                                          : BigInt();
            BigInt tk = k < static_cast<int>(trow.size()) ? trow[static_cast<std::size_t>(k)]
                                                          : BigInt();
            CHECK(sk == BigInt(all[static_cast<std::size_t>(k)]));
            CHECK(tk == BigInt(assoc[static_cast<std::size_t>(k)]));
        }
    }

    // Specializations of the full peak family.
    PolySequence pf = pnqxy_sequence(12);
    auto [s12, t12] = stirling_sequences(12);
    const BigInt zero(0), one(1);
    for (int n = 0; n <= 12; ++n) {
        CHECK(pf.at(n).subst(Var::Q, zero).subst(Var::Y, one) == s12.at(n));
        CHECK(pf.at(n).subst(Var::Q, zero).subst(Var::Y, zero) == t12.at(n));
    }
}

TEST_CASE("alternating runs polynomials, both routes") {
    PolySequence r = runs_sequence(10);
    CHECK(r.at(1) == MPoly(1));
    CHECK(r.at(2) == MPoly::parse("2q"));
    CHECK(r.at(3) == MPoly::parse("2q+4q^2"));
    CHECK(r.at(4) == MPoly::parse("2q+12q^2+10q^3"));
    CHECK(r.at(5) == MPoly::parse("2q+28q^2+58q^3+32q^4"));

    auto rows = runs_triangle_rows(10);
    Triangle tri = triangle(TriangleFamily::Runs, 10);
    REQUIRE(rows.size() == tri.rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i] == tri.rows[i]);
}

TEST_CASE("combined polynomials") {
    auto [combR, combI] = combined_sequences(12);
    CHECK(combR.at(1) == MPoly(1));
    CHECK(combR.at(2) == MPoly::parse("2+q"));
    CHECK(combI.at(1) == MPoly(1));
    for (std::size_t n = 1; n <= 6; ++n) {
        CHECK(combR.at(static_cast<int>(n)).univariate_coeffs(Var::Q) ==
              to_big(fixtures::kCombinedRRows[n - 1]));
        CHECK(combI.at(static_cast<int>(n)).univariate_coeffs(Var::Q) ==
              to_big(fixtures::kCombinedIRows[n - 1]));
    }

    // Interleaving: even coefficients from the peak row, odd from the valley
    // row, for every n >= 3 (combined R) and n >= 2 (combined I).
    PolySequence pf = pnqxy_sequence(12), vf = vnqxy_sequence(12);
    PolySequence pd = derangement_p_sequence(12), vd = derangement_v_sequence(12);
    const BigInt one(1);
    for (int n = 2; n <= 12; ++n) {
        MPoly m = pf.at(n).subst(Var::X, one).subst(Var::Y, one);
        MPoly mbar = vf.at(n).subst(Var::X, one).subst(Var::Y, one);
        MPoly d = pd.at(n).subst(Var::X, one);
        MPoly dbar = vd.at(n).subst(Var::X, one);
        auto interleaved = [&](const MPoly& even, const MPoly& odd, const MPoly& combined) {
            auto row = combined.univariate_coeffs(Var::Q);
            for (int k = 0; k < static_cast<int>(row.size()); ++k) {
                BigInt expected = k % 2 == 0 ? even.coeff(k / 2, 0, 0)
                                             : odd.coeff((k - 1) / 2, 0, 0);
                CHECK(row[static_cast<std::size_t>(k)] == expected);
            }
        };
        if (n >= 3) interleaved(m, mbar, combR.at(n));
        interleaved(d, dbar, combI.at(n));
    }
}

TEST_CASE("triangles match the reference tables") {
    auto check_rows = [](TriangleFamily fam, const std::vector<std::vector<long long>>& expected) {
        Triangle t = triangle(fam, static_cast<int>(expected.size()));
        REQUIRE(t.rows.size() == expected.size());
        for (std::size_t i = 0; i < expected.size(); ++i) CHECK(t.rows[i] == to_big(expected[i]));
    };
    check_rows(TriangleFamily::M, fixtures::kMRows);
    check_rows(TriangleFamily::Mbar, fixtures::kMbarRows);
    check_rows(TriangleFamily::D, fixtures::kDRows);
    check_rows(TriangleFamily::Dbar, fixtures::kDbarRows);
    check_rows(TriangleFamily::CombinedR, fixtures::kCombinedRRows);
    check_rows(TriangleFamily::CombinedI, fixtures::kCombinedIRows);

    Triangle runs = triangle(TriangleFamily::Runs, 5);
    CHECK(runs.offset == 1);
    CHECK(runs.rows[0] == std::vector<BigInt>{BigInt(1)});
    for (std::size_t n = 2; n <= 5; ++n) {
        CHECK(runs.rows[n - 1] == to_big(fixtures::kRunsRows2to5[n - 2]));
    }

    Triangle st = triangle(TriangleFamily::StirlingS, 4);
    CHECK(st.offset == 1);
    CHECK(st.rows[3] == to_big({1, 7, 6, 1}));
    Triangle tt = triangle(TriangleFamily::StirlingT, 4);
    CHECK(tt.rows[0] == std::vector<BigInt>{BigInt(0)});
    CHECK(tt.rows[3] == to_big({1, 3}));

    CHECK_THROWS_AS((void)triangle(TriangleFamily::M, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)triangle_family_from_name("nosuch"), std::invalid_argument);
    CHECK(triangle_family_from_name("Mbar") == TriangleFamily::Mbar);
    CHECK(triangle_family_name(TriangleFamily::CombinedI) == "combinedI");
}

TEST_CASE("triangle row sums") {
    auto factorial = int_sequence(IntKind::Factorial, 12);
    auto derangement = int_sequence(IntKind::Derangement, 12);
    auto row_sum = [](const std::vector<BigInt>& row) {
        BigInt s;
        for (const auto& v : row) s += v;
        return s;
    };
    Triangle m = triangle(TriangleFamily::M, 12), mbar = triangle(TriangleFamily::Mbar, 12);
    Triangle d = triangle(TriangleFamily::D, 12), dbar = triangle(TriangleFamily::Dbar, 12);
    Triangle runs = triangle(TriangleFamily::Runs, 12);
    Triangle combR = triangle(TriangleFamily::CombinedR, 12);
    for (int n = 1; n <= 12; ++n) {
        const auto idx = static_cast<std::size_t>(n);
        CHECK(row_sum(m.rows[idx - 1]) == factorial[idx]);
        CHECK(row_sum(mbar.rows[idx - 1]) == factorial[idx]);
        CHECK(row_sum(d.rows[idx - 1]) == derangement[idx]);
        CHECK(row_sum(dbar.rows[idx - 1]) == derangement[idx]);
        CHECK(row_sum(runs.rows[idx - 1]) == factorial[idx]);
        if (n >= 3) CHECK(row_sum(combR.rows[idx - 1]) == BigInt(2) * factorial[idx]);
    }
}

TEST_CASE("integer sequences") {
    auto euler = int_sequence(IntKind::Euler, 7);
    for (std::size_t n = 0; n <= 7; ++n) CHECK(euler[n] == BigInt(fixtures::kEuler[n]));
    for (int n = 0; n <= 6; ++n) {
        CHECK(euler[static_cast<std::size_t>(n)] == BigInt(count_alternating(n)));
    }
    auto pell = int_sequence(IntKind::Pell, 11);
    for (std::size_t n = 0; n <= 11; ++n) CHECK(pell[n] == BigInt(fixtures::kPell[n]));
    auto bell = int_sequence(IntKind::Bell, 10);
    for (std::size_t n = 0; n <= 10; ++n) CHECK(bell[n] == BigInt(fixtures::kBell[n]));
    auto der = int_sequence(IntKind::Derangement, 10);
    for (std::size_t n = 0; n <= 10; ++n) CHECK(der[n] == BigInt(fixtures::kDerangement[n]));
    CHECK(int_sequence(IntKind::Factorial, 21)[21].to_string() == "51090942171709440000");

    // Bell numbers appear as the zero-peak column.
    PolySequence pf = pnqxy_sequence(10);
    const BigInt one(1);
    for (int n = 1; n <= 10; ++n) {
        CHECK(pf.at(n).subst(Var::X, one).subst(Var::Y, one).coeff(0, 0, 0) ==
              bell[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("degree formulas") {
    PolySequence pf = pnqxy_sequence(16), vf = vnqxy_sequence(16);
    PolySequence pd = derangement_p_sequence(16), vd = derangement_v_sequence(16);
    const BigInt one(1);
    for (int n = 2; n <= 16; ++n) {
        CHECK(pf.at(n).subst(Var::X, one).subst(Var::Y, one).degree_in(Var::Q) == (n - 1) / 2);
        CHECK(pd.at(n).subst(Var::X, one).degree_in(Var::Q) == (n - 1) / 2);
        CHECK(vf.at(n).subst(Var::X, one).subst(Var::Y, one).degree_in(Var::Q) == n / 2 - 1);
        CHECK(vd.at(n).subst(Var::X, one).degree_in(Var::Q) == n / 2 - 1);
    }
}

TEST_CASE("factorial evaluations stay exact out to n = 20") {
    PolySequence pf = pnqxy_sequence(20), vf = vnqxy_sequence(20);
    auto factorial = int_sequence(IntKind::Factorial, 20);
    const BigInt one(1);
    for (int n = 0; n <= 20; ++n) {
        CHECK(pf.at(n).eval(one, one, one) == factorial[static_cast<std::size_t>(n)]);
        CHECK(vf.at(n).eval(one, one, one) == factorial[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("fixed-point factorization of the full families") {
    PolySequence pf = pnqxy_sequence(12), vf = vnqxy_sequence(12);
    PolySequence pd = derangement_p_sequence(12), vd = derangement_v_sequence(12);
    auto binom = binomial_triangle(12);
    MPoly xy = MPoly::variable(Var::X) * MPoly::variable(Var::Y);
    for (int n = 0; n <= 12; ++n) {
        MPoly psum, vsum, xyk(1);
        for (int k = 0; k <= n; ++k) {
            MPoly c(binom[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]);
            psum += c * xyk * pd.at(n - k);
            vsum += c * xyk * vd.at(n - k);
            xyk *= xy;
        }
        CHECK(psum == pf.at(n));
        CHECK(vsum == vf.at(n));
    }
    // Per-slice form: the y^k coefficient is binom(n,k) x^k times the
    // (n-k)-th derangement polynomial.
    for (int n = 0; n <= 12; ++n) {
        for (int k = 0; k <= n; ++k) {
            MPoly slice = pf.at(n).coefficient_of(Var::Y, k);
            MPoly expect = MPoly(binom[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]) *
                           MPoly::monomial(BigInt(1), 0, k, 0) * pd.at(n - k);
            CHECK(slice == expect);
        }
    }
}
