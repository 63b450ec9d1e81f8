#include "cycperm/egf.hpp"

#include <stdexcept>

namespace cycperm {

EgfSeries::EgfSeries(int order) {
    if (order < 0) throw std::invalid_argument("EgfSeries: order must be nonnegative");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

EgfSeries::EgfSeries(int order, std::vector<MPoly> coeffs) : coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != order + 1) {
        throw std::invalid_argument("EgfSeries: coefficient count does not match order");
    }
}

bool EgfSeries::is_zero() const {
    for (const auto& c : coeffs_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

std::optional<int> EgfSeries::first_nonzero_order() const {
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        if (!coeffs_[n].is_zero()) return static_cast<int>(n);
    }
    return std::nullopt;
}

EgfSeries EgfSeries::constant(const MPoly& c, int order) {
    EgfSeries s(order);
    s.coeff(0) = c;
    return s;
}

EgfSeries egf_product(const EgfSeries& a, const EgfSeries& b) {
    if (a.order() != b.order()) {
        throw std::invalid_argument("egf_product: order mismatch");
    }
    int N = a.order();
    auto binom = binomial_triangle(N);
    EgfSeries r(N);
    for (int n = 0; n <= N; ++n) {
        MPoly acc;
        for (int k = 0; k <= n; ++k) {
            if (a.coeff(k).is_zero() || b.coeff(n - k).is_zero()) continue;
            acc += MPoly(binom[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]) *
                   a.coeff(k) * b.coeff(n - k);
        }
        r.coeff(n) = std::move(acc);
    }
    return r;
}

EgfSeries egf_add(const EgfSeries& a, const EgfSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("egf_add: order mismatch");
    EgfSeries r(a.order());
    for (int n = 0; n <= a.order(); ++n) r.coeff(n) = a.coeff(n) + b.coeff(n);
    return r;
}

EgfSeries egf_sub(const EgfSeries& a, const EgfSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("egf_sub: order mismatch");
    EgfSeries r(a.order());
    for (int n = 0; n <= a.order(); ++n) r.coeff(n) = a.coeff(n) - b.coeff(n);
    return r;
}

EgfSeries egf_scale(const MPoly& c, const EgfSeries& a) {
    EgfSeries r(a.order());
    for (int n = 0; n <= a.order(); ++n) r.coeff(n) = c * a.coeff(n);
    return r;
}

EgfSeries egf_dz(const EgfSeries& a) {
    if (a.order() < 1) throw std::invalid_argument("egf_dz: order must be >= 1");
    EgfSeries r(a.order() - 1);
    for (int n = 0; n < a.order(); ++n) r.coeff(n) = a.coeff(n + 1);
    return r;
}

EgfSeries egf_truncate(const EgfSeries& a, int order) {
    if (order > a.order()) throw std::invalid_argument("egf_truncate: cannot extend a series");
    EgfSeries r(order);
    for (int n = 0; n <= order; ++n) r.coeff(n) = a.coeff(n);
    return r;
}

std::pair<EgfSeries, EgfSeries> trig_pair(const MPoly& b, int N) {
    EgfSeries c(N), s(N);
    MPoly bpow(1);
    bool negate = false;
    for (int k = 0; 2 * k <= N; ++k) {
        MPoly value = negate ? -bpow : bpow;
        c.coeff(2 * k) = value;
        if (2 * k + 1 <= N) s.coeff(2 * k + 1) = value;
        bpow *= b;
        negate = !negate;
    }
    return {std::move(c), std::move(s)};
}

EgfSeries series_of(const PolySequence& seq, int order) {
    EgfSeries r(order);
    for (int n = 0; n <= order; ++n) r.coeff(n) = seq.at(n);
    return r;
}

EgfSeries series_with_unit_head(const PolySequence& seq, int order) {
    EgfSeries r(order);
    r.coeff(0) = MPoly(1);
    for (int n = 1; n <= order; ++n) r.coeff(n) = seq.at(n);
    return r;
}

EgfSeries runs_egf(const PolySequence& runs, int order) {
    EgfSeries r(order);
    for (int n = 0; n <= order; ++n) r.coeff(n) = runs.at(n + 1);
    return r;
}

EgfSeries exp_xyz_series(int order) {
    EgfSeries r(order);
    MPoly xy = MPoly::variable(Var::X) * MPoly::variable(Var::Y);
    MPoly cur(1);
    for (int n = 0; n <= order; ++n) {
        r.coeff(n) = cur;
        cur *= xy;
    }
    return r;
}

EgfSeries residual_valley_closed_form(const EgfSeries& valley_der) {
    const int N = valley_der.order();
    const MPoly b = MPoly::variable(Var::Q) - MPoly(1);
    auto [c, s] = trig_pair(b, N - 1);
    EgfSeries v = egf_truncate(valley_der, N - 1);
    EgfSeries dv = egf_dz(valley_der);
    // (C - S) V' - x S V
    return egf_sub(egf_product(egf_sub(c, s), dv),
                   egf_scale(MPoly::variable(Var::X), egf_product(s, v)));
}

EgfSeries residual_peak_closed_form(const EgfSeries& peak_der) {
    const int N = peak_der.order();
    const MPoly q = MPoly::variable(Var::Q);
    const MPoly b = q - MPoly(1);
    auto [c, s] = trig_pair(b, N - 1);
    EgfSeries a = egf_add(c, egf_scale(b, s));                       // A = C + (q-1) S
    EgfSeries q_minus_a2 = egf_sub(EgfSeries::constant(q, N - 1), egf_product(a, a));
    EgfSeries p = egf_truncate(peak_der, N - 1);
    EgfSeries dp = egf_dz(peak_der);
    // (q - A^2) P' - x [(q-1)(C - S) - (q - A^2)] P
    EgfSeries bracket = egf_sub(egf_scale(b, egf_sub(c, s)), q_minus_a2);
    return egf_sub(egf_product(q_minus_a2, dp),
                   egf_scale(MPoly::variable(Var::X), egf_product(bracket, p)));
}

EgfSeries residual_runs_closed_form(const EgfSeries& runs) {
    const int N = runs.order();
    const MPoly q = MPoly::variable(Var::Q);
    const MPoly b = q * q - MPoly(1);
    auto [c, s] = trig_pair(b, N);
    EgfSeries mix = egf_add(c, egf_scale(b, s));                     // C + (q^2-1) S
    EgfSeries lhs = egf_scale(q + MPoly(1),
                              egf_product(egf_sub(EgfSeries::constant(q, N), mix), runs));
    EgfSeries rhs = egf_scale(q - MPoly(1), egf_add(EgfSeries::constant(q, N), mix));
    return egf_sub(lhs, rhs);
}

EgfSeries residual_valley_product_form(const EgfSeries& valley_full, const EgfSeries& left_peak) {
    const int N = valley_full.order();
    const MPoly q = MPoly::variable(Var::Q);
    const MPoly x = MPoly::variable(Var::X);
    const MPoly y = MPoly::variable(Var::Y);
    EgfSeries v = egf_truncate(valley_full, N - 1);
    EgfSeries dv = egf_dz(valley_full);
    EgfSeries wb = egf_truncate(left_peak, N - 1);
    EgfSeries dwb = egf_dz(left_peak);
    // q Wb V' - x (q y - 1) Wb V - x Wb' V
    EgfSeries lhs = egf_scale(q, egf_product(wb, dv));
    EgfSeries mid = egf_scale(x * (q * y - MPoly(1)), egf_product(wb, v));
    EgfSeries last = egf_scale(x, egf_product(dwb, v));
    return egf_sub(egf_sub(lhs, mid), last);
}

EgfSeries residual_peak_runs_form(const EgfSeries& peak_full_qsq, const EgfSeries& runs) {
    const int N = peak_full_qsq.order();
    const MPoly q = MPoly::variable(Var::Q);
    const MPoly x = MPoly::variable(Var::X);
    const MPoly y = MPoly::variable(Var::Y);
    EgfSeries p = egf_truncate(peak_full_qsq, N - 1);
    EgfSeries dp = egf_dz(peak_full_qsq);
    EgfSeries r = egf_truncate(runs, N - 1);
    EgfSeries dr = egf_dz(runs);
    // 2q R P' - x [2q (y-1) R + R'] P
    EgfSeries lhs = egf_scale(MPoly(2) * q, egf_product(r, dp));
    EgfSeries bracket = egf_add(egf_scale(MPoly(2) * q * (y - MPoly(1)), r), dr);
    return egf_sub(lhs, egf_scale(x, egf_product(bracket, p)));
}

EgfSeries residual_fix_factorization(const EgfSeries& full, const EgfSeries& derangement) {
    return egf_sub(full, egf_product(exp_xyz_series(full.order()), derangement));
}

CheckReport report_from_residual(const std::string& name, const std::string& range,
                                 const EgfSeries& residual) {
    CheckReport report;
    report.name = name;
    report.range = range;
    for (int n = 0; n <= residual.order(); ++n) {
        if (!residual.coeff(n).is_zero()) {
            report.mismatches.push_back(
                {"order=" + std::to_string(n), "0", residual.coeff(n).to_string()});
        }
    }
    report.details.push_back(report.pass() ? "residual series is identically zero"
                                           : "residual is nonzero");
    return report;
}

CheckReport verify_valley_closed_form(const PolySequence& valley_der, int order) {
    EgfSeries v = series_of(valley_der, order);
    return report_from_residual("egf.valley-closed-form",
                                "order=0.." + std::to_string(order - 1),
                                residual_valley_closed_form(v));
}

CheckReport verify_peak_closed_form(const PolySequence& peak_der, int order) {
    EgfSeries p = series_of(peak_der, order);
    return report_from_residual("egf.peak-closed-form", "order=0.." + std::to_string(order - 1),
                                residual_peak_closed_form(p));
}

CheckReport verify_runs_closed_form(const PolySequence& runs, int order) {
    EgfSeries r = runs_egf(runs, order);
    return report_from_residual("egf.runs-closed-form", "order=0.." + std::to_string(order),
                                residual_runs_closed_form(r));
}

CheckReport verify_valley_product_form(const PolySequence& valley_full,
                                       const PolySequence& left_peak, int order) {
    EgfSeries v = series_of(valley_full, order);
    EgfSeries wb = series_with_unit_head(left_peak, order);
    return report_from_residual("egf.valley-left-peak-product",
                                "order=0.." + std::to_string(order - 1),
                                residual_valley_product_form(v, wb));
}

CheckReport verify_peak_runs_form(const PolySequence& peak_full, const PolySequence& runs,
                                  int order) {
    EgfSeries p(order);
    for (int n = 0; n <= order; ++n) p.coeff(n) = peak_full.at(n).subst_q_squared();
    EgfSeries r = runs_egf(runs, order);
    return report_from_residual("egf.peak-runs-product", "order=0.." + std::to_string(order - 1),
                                residual_peak_runs_form(p, r));
}

CheckReport verify_fix_factorization(const PolySequence& peak_full, const PolySequence& peak_der,
                                     const PolySequence& valley_full,
                                     const PolySequence& valley_der, int order) {
    CheckReport report;
    report.name = "egf.fixed-point-factorization";
    report.range = "order=0.." + std::to_string(order);
    for (const char* family : {"peak", "valley"}) {
        bool peak = family[0] == 'p';
        EgfSeries full = series_of(peak ? peak_full : valley_full, order);
        EgfSeries der = series_of(peak ? peak_der : valley_der, order);
        EgfSeries residual = residual_fix_factorization(full, der);
        for (int n = 0; n <= residual.order(); ++n) {
            if (!residual.coeff(n).is_zero()) {
                report.mismatches.push_back({std::string("family=") + family +
                                                 ",order=" + std::to_string(n),
                                             "0", residual.coeff(n).to_string()});
            }
        }
    }
    report.details.push_back(report.pass() ? "both families factor through exp(xyz)"
                                           : "residual is nonzero");
    return report;
}

} // namespace cycperm
