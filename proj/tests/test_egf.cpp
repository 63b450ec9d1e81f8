#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cycperm/egf.hpp"

using namespace cycperm;

namespace {
const MPoly q = MPoly::variable(Var::Q);
const MPoly x = MPoly::variable(Var::X);

EgfSeries ones(int order) {
    EgfSeries s(order);
    for (int n = 0; n <= order; ++n) s.coeff(n) = MPoly(1);
    return s;
}
} // namespace

TEST_CASE("series plumbing") {
    EgfSeries e = ones(8);
    EgfSeries e2 = egf_product(e, e);
    for (int n = 0; n <= 8; ++n) CHECK(e2.coeff(n) == MPoly(BigInt::pow(BigInt(2), n)));

    EgfSeries unit = EgfSeries::constant(MPoly(1), 8);
    CHECK(egf_product(e, unit).coeff(5) == MPoly(1));

    EgfSeries de = egf_dz(e);
    CHECK(de.order() == 7);
    for (int n = 0; n <= 7; ++n) CHECK(de.coeff(n) == MPoly(1));

    CHECK_THROWS_AS((void)egf_product(ones(4), ones(5)), std::invalid_argument);
    CHECK_THROWS_AS((void)egf_dz(EgfSeries(0)), std::invalid_argument);
    CHECK_THROWS_AS((void)egf_truncate(ones(4), 6), std::invalid_argument);
    CHECK(EgfSeries(5).is_zero());
    CHECK(!ones(2).is_zero());
    CHECK(ones(2).first_nonzero_order() == 0);
}

TEST_CASE("trig pair") {
    MPoly b = q - MPoly(1);
    auto [c, s] = trig_pair(b, 10);
    CHECK(c.coeff(0) == MPoly(1));
    CHECK(c.coeff(1).is_zero());
    CHECK(c.coeff(2) == -(q - MPoly(1)));
    CHECK(s.coeff(1) == MPoly(1));
    CHECK(s.coeff(0).is_zero());
    CHECK(s.coeff(3) == -(q - MPoly(1)));

    // d/dz C = -b S, d/dz S = C, C^2 + b S^2 = 1.
    for (const MPoly& base : {q - MPoly(1), q * q - MPoly(1), MPoly(0)}) {
        auto [cc, ss] = trig_pair(base, 10);
        EgfSeries dc = egf_dz(cc);
        EgfSeries expected_dc = egf_scale(-base, egf_truncate(ss, 9));
        for (int n = 0; n <= 9; ++n) CHECK(dc.coeff(n) == expected_dc.coeff(n));
        EgfSeries ds = egf_dz(ss);
        for (int n = 0; n <= 9; ++n) CHECK(ds.coeff(n) == cc.coeff(n));
        EgfSeries pyth = egf_add(egf_product(cc, cc), egf_scale(base, egf_product(ss, ss)));
        CHECK(pyth.coeff(0) == MPoly(1));
        for (int n = 1; n <= 10; ++n) CHECK(pyth.coeff(n).is_zero());
    }

    // b = 0 degenerates to the pair (1, z).
    auto [c0, s0] = trig_pair(MPoly(0), 6);
    CHECK(c0.coeff(0) == MPoly(1));
    for (int n = 1; n <= 6; ++n) CHECK(c0.coeff(n).is_zero());
    CHECK(s0.coeff(1) == MPoly(1));
    CHECK(s0.coeff(3).is_zero());
}

TEST_CASE("derivative of the valley series starts at the first polynomial") {
    EgfSeries v = series_of(vnqxy_sequence(6), 6);
    EgfSeries dv = egf_dz(v);
    CHECK(dv.coeff(0) == MPoly::parse("xy"));
}

TEST_CASE("all six verifications pass at order 12") {
    PolySequence peak_full = pnqxy_sequence(12);
    PolySequence valley_full = vnqxy_sequence(12);
    PolySequence peak_der = derangement_p_sequence(12);
    PolySequence valley_der = derangement_v_sequence(12);
    PolySequence runs = runs_sequence(14);
    auto [w, wbar] = w_sequences(12);

    CHECK(verify_valley_closed_form(valley_der, 12).pass());
    CHECK(verify_peak_closed_form(peak_der, 12).pass());
    CHECK(verify_runs_closed_form(runs, 12).pass());
    CHECK(verify_valley_product_form(valley_full, wbar, 12).pass());
    CHECK(verify_peak_runs_form(peak_full, runs, 12).pass());
    CHECK(verify_fix_factorization(peak_full, peak_der, valley_full, valley_der, 12).pass());
}

TEST_CASE("valley closed form: perturbation at index 4 fails at order 3") {
    EgfSeries v = series_of(derangement_v_sequence(8), 8);
    v.coeff(4) += q;
    EgfSeries residual = residual_valley_closed_form(v);
    CHECK(residual.first_nonzero_order() == 3);
    CheckReport report = report_from_residual("egf.valley-closed-form", "order=0..7", residual);
    REQUIRE(!report.pass());
    CHECK(report.mismatches.front().location == "order=3");
}

TEST_CASE("peak closed form: corrupted third polynomial fails") {
    EgfSeries p = series_of(derangement_p_sequence(8), 8);
    p.coeff(3) += MPoly(1);
    CHECK(!residual_peak_closed_form(p).is_zero());
    CHECK(residual_peak_closed_form(series_of(derangement_p_sequence(8), 8)).is_zero());
}

TEST_CASE("runs closed form: perturbed third polynomial fails at order 2") {
    EgfSeries r = runs_egf(runs_sequence(10), 8);
    r.coeff(2) += q; // this slot holds the index-3 polynomial
    EgfSeries residual = residual_runs_closed_form(r);
    CHECK(residual.first_nonzero_order() == 2);
}

TEST_CASE("valley product form: perturbed left-peak polynomial fails") {
    EgfSeries v = series_of(vnqxy_sequence(8), 8);
    EgfSeries wb = series_with_unit_head(w_sequences(8).second, 8);
    CHECK(residual_valley_product_form(v, wb).is_zero());
    wb.coeff(4) += q;
    EgfSeries residual = residual_valley_product_form(v, wb);
    CHECK(residual.first_nonzero_order() == 3);
}

TEST_CASE("peak runs form: perturbed full polynomial fails") {
    PolySequence peak_full = pnqxy_sequence(8);
    PolySequence runs = runs_sequence(10);
    EgfSeries p(8);
    for (int n = 0; n <= 8; ++n) p.coeff(n) = peak_full.at(n).subst_q_squared();
    EgfSeries r = runs_egf(runs, 8);
    CHECK(residual_peak_runs_form(p, r).is_zero());
    p.coeff(4) += q * x;
    CHECK(!residual_peak_runs_form(p, r).is_zero());
}

TEST_CASE("fixed point factorization: perturbed derangement coefficient fails") {
    EgfSeries full = series_of(vnqxy_sequence(8), 8);
    EgfSeries der = series_of(derangement_v_sequence(8), 8);
    CHECK(residual_fix_factorization(full, der).is_zero());
    der.coeff(5) += x;
    EgfSeries residual = residual_fix_factorization(full, der);
    CHECK(residual.first_nonzero_order() == 5);
}

TEST_CASE("the cleared identities are regular at q = 1") {
    // Every coefficient of every residual is a polynomial; substituting q = 1
    // (where the closed forms have a removable singularity) stays exact and
    // zero.
    EgfSeries v = series_of(derangement_v_sequence(10), 10);
    EgfSeries residual = residual_valley_closed_form(v);
    for (int n = 0; n <= residual.order(); ++n) {
        CHECK(residual.coeff(n).subst(Var::Q, BigInt(1)).is_zero());
    }
    // The b = 0 instance of the same identity shape: (1 - z) F' = x z F for
    // the EGF of derangements by cycle count, i.e. the q = 1 slice.
    EgfSeries v1(10);
    for (int n = 0; n <= 10; ++n) v1.coeff(n) = v.coeff(n).subst(Var::Q, BigInt(1));
    auto [c0, s0] = trig_pair(MPoly(0), 9);
    EgfSeries lhs = egf_product(egf_sub(c0, s0), egf_dz(v1));
    EgfSeries rhs = egf_scale(x, egf_product(s0, egf_truncate(v1, 9)));
    CHECK(egf_sub(lhs, rhs).is_zero());
}
