#ifndef CYCPERM_EGF_HPP
#define CYCPERM_EGF_HPP

#include <optional>
#include <utility>
#include <vector>

#include "cycperm/mpoly.hpp"
#include "cycperm/recurrences.hpp"
#include "cycperm/report.hpp"

namespace cycperm {

// Truncated exponential generating function: coefficients a_0..a_N of
// sum a_n z^n / n!, each an exact polynomial in q, x, y. All operations are
// truncation-consistent: order-N inputs give order-N outputs (N-1 for the
// z-derivative) whose coefficients equal those of the untruncated series.
class EgfSeries {
public:
    explicit EgfSeries(int order);
    EgfSeries(int order, std::vector<MPoly> coeffs);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const MPoly& coeff(int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    MPoly& coeff(int n) { return coeffs_.at(static_cast<std::size_t>(n)); }

    bool is_zero() const;
    std::optional<int> first_nonzero_order() const;

    static EgfSeries constant(const MPoly& c, int order);

private:
    std::vector<MPoly> coeffs_;
};

// Binomial convolution c_n = sum_k C(n,k) a_k b_{n-k}. Orders must agree;
// a mismatch throws std::invalid_argument.
EgfSeries egf_product(const EgfSeries& a, const EgfSeries& b);

EgfSeries egf_add(const EgfSeries& a, const EgfSeries& b);
EgfSeries egf_sub(const EgfSeries& a, const EgfSeries& b);
EgfSeries egf_scale(const MPoly& c, const EgfSeries& a);

// Coefficient shift: (d/dz A)_n = A_{n+1}. Order drops by one; order-0 input
// throws std::invalid_argument.
EgfSeries egf_dz(const EgfSeries& a);

EgfSeries egf_truncate(const EgfSeries& a, int order);

// The pair (C, S) with C_{2k} = (-1)^k b^k, S_{2k+1} = (-1)^k b^k and zero
// elsewhere. C encodes cos(z sqrt(b)) and S encodes sin(z sqrt(b))/sqrt(b);
// they satisfy C' = -b S, S' = C and C^2 + b S^2 = 1 at every order.
std::pair<EgfSeries, EgfSeries> trig_pair(const MPoly& b, int N);

// Series builders. Full-family series take a_0 = 1 and a_n = the n-th
// polynomial; the runs series takes a_n = R_{n+1} (so it needs the runs
// sequence through N+1); exp_xyz is the EGF with a_n = (xy)^n.
EgfSeries series_of(const PolySequence& seq, int order);
EgfSeries series_with_unit_head(const PolySequence& seq, int order);
EgfSeries runs_egf(const PolySequence& runs, int order);
EgfSeries exp_xyz_series(int order);

// Residuals of the identities below, as series that are identically zero
// exactly when the identity holds. Each takes prebuilt input series so tests
// can perturb single coefficients.
//
// Valley derangement closed form:      (C - S) V' = x S V          (b = q-1)
// Peak derangement closed form:        (q - A^2) P' = x ((q-1)(C-S) - (q - A^2)) P,
//                                      A = C + (q-1) S              (b = q-1)
// Runs closed form:                    (q+1)(q - C - (q^2-1) S) R = (q-1)(q + C + (q^2-1) S)
//                                                                   (b = q^2-1)
// Valley/left-peak product form:       q Wb V' = x (q y - 1) Wb V + x Wb' V
// Peak/runs product form:              2q R P' = x (2q (y-1) R + R') P,
//                                      where P has q replaced by q^2
// Fixed-point factorization:           F = exp_xyz * F0 for each family
EgfSeries residual_valley_closed_form(const EgfSeries& valley_der);
EgfSeries residual_peak_closed_form(const EgfSeries& peak_der);
EgfSeries residual_runs_closed_form(const EgfSeries& runs);
EgfSeries residual_valley_product_form(const EgfSeries& valley_full, const EgfSeries& left_peak);
EgfSeries residual_peak_runs_form(const EgfSeries& peak_full_qsq, const EgfSeries& runs);
EgfSeries residual_fix_factorization(const EgfSeries& full, const EgfSeries& derangement);

// Report wrappers: build the input series from recurrence sequences at the
// given truncation order and report the first nonzero residual orders.
CheckReport verify_valley_closed_form(const PolySequence& valley_der, int order);
CheckReport verify_peak_closed_form(const PolySequence& peak_der, int order);
CheckReport verify_runs_closed_form(const PolySequence& runs, int order);
CheckReport verify_valley_product_form(const PolySequence& valley_full,
                                       const PolySequence& left_peak, int order);
CheckReport verify_peak_runs_form(const PolySequence& peak_full, const PolySequence& runs,
                                  int order);
CheckReport verify_fix_factorization(const PolySequence& peak_full, const PolySequence& peak_der,
                                     const PolySequence& valley_full,
                                     const PolySequence& valley_der, int order);

CheckReport report_from_residual(const std::string& name, const std::string& range,
                                 const EgfSeries& residual);

} // namespace cycperm

#endif
