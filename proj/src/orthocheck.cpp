#include "ascq/orthocheck.hpp"

#include "ascq/qlattice.hpp"
#include "ascq/zeros.hpp"

#include <algorithm>
#include <string>

namespace ascq
{

Complex norm_d2(std::size_t n, Complex a, Complex q, const SeriesTruncation& trunc)
{
    if (!(std::abs(q) < 1.0))
        throw Error(ErrorKind::Regime, "d_n^2 requires |q| < 1");
    if (a == Complex(0.0))
        throw Error(ErrorKind::Parameter, "a=0 excluded");
    const long nl = static_cast<long>(n);
    const Complex products[] = {q, a, q / a};
    return ipow(-a, nl) * (1.0 - q) * qpoch(q, q, n) * qpoch_inf(products, q, trunc) * ipow(q, binom2(nl));
}

void require_well_conditioned(Complex a, Complex q, std::size_t nmax)
{
    require_finite(a, "a");
    require_finite(q, "q");
    if (a == Complex(0.0) || std::abs(a) < 1e-8)
        throw Error(ErrorKind::Parameter, "a=0 excluded");
    if (a == Complex(1.0) || std::abs(a - 1.0) < 1e-8)
        throw Error(ErrorKind::Parameter, "a=1 excluded");
    Complex qn(1.0);
    for (std::size_t n = 1; n <= nmax; ++n) {
        qn *= q;
        if (std::abs(qn - 1.0) < 1e-10)
            throw Error(ErrorKind::Parameter, "q^" + std::to_string(n) + " = 1 makes the norms vanish");
    }
}

namespace
{

void fill_statistics(GramReport& report)
{
    const std::size_t n = report.entries.size();
    double max_diag = 0.0;
    for (std::size_t k = 0; k < n; ++k)
        max_diag = std::max(max_diag, std::abs(report.entries(k, k)));

    report.max_offdiag_rel = 0.0;
    report.max_asymmetry = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            report.max_offdiag_rel = std::max(report.max_offdiag_rel, std::abs(report.entries(i, j)) / max_diag);
            report.max_asymmetry = std::max(report.max_asymmetry, std::abs(report.entries(i, j) - report.entries(j, i)));
        }
    }

    report.max_diag_rel_err = 0.0;
    for (std::size_t k = 0; k < report.diag_expected.size() && k < n; ++k) {
        const Complex expected = report.diag_expected[k];
        report.max_diag_rel_err =
            std::max(report.max_diag_rel_err, std::abs(report.entries(k, k) - expected) / std::abs(expected));
    }
}

} // namespace

GramReport gram(std::size_t nmax, Complex a, Complex q, std::size_t M, double tolerance)
{
    const FamilyParams params(a, q);
    params.q.require_inside("Gram matrix on the spiral lattice");
    require_well_conditioned(a, q, nmax);

    GramReport report;
    report.a = a;
    report.q = q;
    report.nmax = nmax;
    report.M = M == 0 ? adaptive_order(a, q) : M;
    report.tolerance = tolerance;
    report.entries = ComplexMatrix(nmax + 1);

    const WeightSpec spec{a, q};
    // Upper triangle by the q-Jackson integral; the integrand is symmetric in (n, m).
    for (std::size_t n = 0; n <= nmax; ++n) {
        for (std::size_t m = n; m <= nmax; ++m) {
            const auto integrand = [&](Complex x) {
                return u_eval(n, params, x) * u_eval(m, params, x) * weight_eval(x, spec);
            };
            const Complex value = jackson_a_to_b(integrand, a, 1.0, q, report.M);
            report.entries(n, m) = value;
            report.entries(m, n) = value;
        }
    }

    report.diag_expected.resize(nmax + 1);
    for (std::size_t n = 0; n <= nmax; ++n)
        report.diag_expected[n] = norm_d2(n, a, q);
    fill_statistics(report);
    return report;
}

GramReport verify_asc2(std::size_t nmax, Complex a, Complex q, std::size_t M, double tolerance)
{
    const QBase base(q);
    if (base.regime() != Regime::OutsideDisk)
        throw Error(ErrorKind::Regime, "the Al-Salam-Carlitz II orthogonality requires |q| > 1");
    const Complex p = 1.0 / q;
    GramReport report = gram(nmax, a, p, M, tolerance);

    // (-a)^n (1 - q^{-1}) (q^{-1};q^{-1})_n (q^{-1};q^{-1})_inf (a;q^{-1})_inf (q^{-1}/a;q^{-1})_inf q^{-binom(n,2)}
    for (std::size_t n = 0; n <= nmax; ++n) {
        const long nl = static_cast<long>(n);
        const Complex products[] = {p, a, p / a};
        report.diag_expected[n] = ipow(-a, nl) * (1.0 - p) * qpoch(p, p, n) * qpoch_inf(products, p) *
                                  ipow(q, -binom2(nl));
    }
    fill_statistics(report);
    return report;
}

CorollarySum corollary_sum(Complex a, Complex q, std::size_t K, const SeriesTruncation& trunc)
{
    require_finite(a, "a");
    if (!(std::abs(q) < 1.0))
        throw Error(ErrorKind::Regime, "the corollary sum requires |q| < 1");
    if (a == Complex(0.0))
        throw Error(ErrorKind::Parameter, "a=0 excluded");

    CompensatedSum lhs;
    Complex qk(1.0);       // q^k
    Complex qq_k(1.0);     // (q;q)_k
    for (std::size_t k = 0; k < K; ++k) {
        const Complex qk1 = qk * q;
        const Complex bracket = qpoch_inf(qk1 / a, q, trunc) - a * qpoch_inf(a * qk1, q, trunc);
        lhs += bracket * qk / qq_k;
        qq_k *= 1.0 - qk1;
        qk = qk1;
    }
    return {lhs.value(), qpoch_inf(a, q, trunc) * qpoch_inf(q / a, q, trunc)};
}

const char* to_string(SbpVariant variant) noexcept
{
    switch (variant) {
    case SbpVariant::Corrected: return "corrected";
    case SbpVariant::Printed: return "printed";
    case SbpVariant::Both: return "both";
    case SbpVariant::Neither: return "neither";
    }
    return "unknown";
}

SbpReport sbp_identity_check(const ComplexFn& f, const ComplexFn& g, Complex q, std::size_t M, double tolerance)
{
    const QBase base(q);
    const Complex qinv = 1.0 / q;

    CompensatedSum lhs, inner;
    Complex qk(1.0);
    for (std::size_t k = 0; k <= M; ++k) {
        lhs += f(qk) * qderiv_pinv_iterated(g, qk, q, 1) * qk;
        inner += g(qk * qinv) * qderiv_pinv_iterated(f, qk, q, 1) * qk;
        qk *= q;
    }
    const Complex qM = ipow(q, static_cast<long>(M));

    SbpReport report;
    report.lhs = lhs.value();
    report.inner_sum = inner.value();
    report.boundary = (f(qinv) * g(qinv) - f(qM) * g(qM)) / (qinv - 1.0);
    report.rhs_corrected = report.boundary - report.inner_sum;
    report.rhs_as_printed = -report.boundary - report.inner_sum;

    const double scale =
        std::max({1.0, std::abs(report.lhs), std::abs(report.boundary), std::abs(report.inner_sum)});
    report.residual_corrected = std::abs(report.lhs - report.rhs_corrected) / scale;
    report.residual_printed = std::abs(report.lhs - report.rhs_as_printed) / scale;

    const bool corrected = report.residual_corrected < tolerance;
    const bool printed = report.residual_printed < tolerance;
    report.matched = corrected && printed ? SbpVariant::Both
                     : corrected          ? SbpVariant::Corrected
                     : printed            ? SbpVariant::Printed
                                          : SbpVariant::Neither;
    return report;
}

const char* to_string(QuadratureWeights weights) noexcept
{
    return weights == QuadratureWeights::Gauss ? "gauss" : "as_printed";
}

RootOfUnityReport rootofunity_gram(std::size_t N, Complex a, Complex q, std::size_t level, QuadratureWeights weights,
                                   double tolerance)
{
    require_finite(a, "a");
    if (N < 2)
        throw Error(ErrorKind::Parameter, "root-of-unity forms need N >= 2");
    if (level < 1)
        throw Error(ErrorKind::Parameter, "root-of-unity form level must be >= 1");
    const FamilyParams params(a, q);
    if (std::abs(ipow(q, static_cast<long>(N)) - 1.0) > QBase::kRootTol)
        throw Error(ErrorKind::Parameter, "q^N != 1 for N=" + std::to_string(N));

    RootOfUnityReport report;
    report.N = N;
    report.level = level;
    report.weights = weights;

    ZeroOptions options;
    report.nodes = find_zeros(N, a, q, options).zeros;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j)
            if (std::abs(report.nodes[i] - report.nodes[j]) < 1e-10)
                throw Error(ErrorKind::Degeneracy, "zeros of U_N are not distinct; quadrature form rejected");

    report.scale = 1.0;
    for (std::size_t k = 1; k < N; ++k)
        report.scale *= recurrence_beta(params, k);

    std::vector<Complex> node_weights(N);
    for (std::size_t s = 0; s < N; ++s) {
        const Complex prev = u_eval(N - 1, params, report.nodes[s]);
        node_weights[s] = weights == QuadratureWeights::Gauss
                              ? report.scale / (prev * u_eval_with_derivative(N, params, report.nodes[s]).derivative)
                              : report.scale / (prev * prev);
    }

    const std::size_t count = level * N;
    const std::vector<Poly> family = u_recurrence_all(count - 1, params);

    // values[i][n][s] = (D_q^{iN} U_n)(x_s)
    std::vector<std::vector<std::vector<Complex>>> values(level);
    for (std::size_t i = 0; i < level; ++i) {
        values[i].resize(count);
        for (std::size_t n = 0; n < count; ++n) {
            Poly p = family[n];
            for (std::size_t d = 0; d < i * N; ++d)
                p = qderiv(p, q);
            values[i][n].resize(N);
            for (std::size_t s = 0; s < N; ++s)
                values[i][n][s] = p(report.nodes[s]);
        }
    }

    GramReport& g = report.gram;
    g.a = a;
    g.q = q;
    g.nmax = count - 1;
    g.M = 0;
    g.tolerance = tolerance;
    g.entries = ComplexMatrix(count);
    for (std::size_t n = 0; n < count; ++n) {
        for (std::size_t m = 0; m < count; ++m) {
            CompensatedSum sum;
            for (std::size_t i = 0; i < level; ++i)
                for (std::size_t s = 0; s < N; ++s)
                    sum += values[i][n][s] * values[i][m][s] * node_weights[s];
            g.entries(n, m) = sum.value();
        }
    }
    fill_statistics(g);

    double max_diag = 0.0;
    for (std::size_t k = 0; k < count; ++k)
        max_diag = std::max(max_diag, std::abs(g.entries(k, k)));
    for (std::size_t k = 0; k < count; ++k)
        if (std::abs(g.entries(k, k)) < tolerance * max_diag)
            report.null_diagonal.push_back(k);
    return report;
}

} // namespace ascq
