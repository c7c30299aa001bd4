#include "ascq/genfun.hpp"

#include "ascq/ascpoly.hpp"
#include "ascq/qkernel.hpp"
#include "ascq/qlattice.hpp"

#include <algorithm>
#include <limits>

namespace ascq
{

const char* to_string(SeriesFamily family) noexcept
{
    return family == SeriesFamily::InverseBase ? "inverse_base" : "literal_base";
}

const char* to_string(GenfunExponent exponent) noexcept
{
    return exponent == GenfunExponent::KTimesKMinus1 ? "k(k-1)" : "binom(k,2)";
}

namespace
{

FamilyParams family_params(Complex a, Complex p, SeriesFamily family)
{
    return family == SeriesFamily::InverseBase ? FamilyParams(a, 1.0 / p) : FamilyParams(a, p);
}

void require_series_base(Complex p)
{
    if (!(std::abs(p) < 1.0) || p == Complex(0.0))
        throw Error(ErrorKind::Regime, "generating functions require 0 < |p| < 1");
}

void require_not_zero_or_one(Complex v, const char* name)
{
    require_finite(v, name);
    if (v == Complex(0.0))
        throw Error(ErrorKind::Parameter, std::string(name) + "=0 excluded");
    if (v == Complex(1.0))
        throw Error(ErrorKind::Parameter, std::string(name) + "=1 excluded");
}

// p^{binom(k,2)} P_k^{(a)}(x) for k < K.
//
// For the inverse-base family the raw values grow like p^{-binom(k,2)} and overflow near k = 40,
// so the scaled values are produced directly by
//   S_{k+1} = (p^k x - (a+1)) S_k + a (p^k - 1) S_{k-1}.
std::vector<Complex> scaled_family_values(std::size_t K, Complex a, Complex p, SeriesFamily family, Complex x)
{
    std::vector<Complex> out(K);
    if (K == 0)
        return out;
    if (family == SeriesFamily::LiteralBase) {
        const auto raw = u_eval_all(K - 1, FamilyParams(a, p), x);
        for (std::size_t k = 0; k < K; ++k)
            out[k] = raw[k] * ipow(p, binom2(static_cast<long>(k)));
        return out;
    }
    out[0] = 1.0;
    Complex pk(1.0);
    for (std::size_t k = 0; k + 1 < K; ++k) {
        out[k + 1] = (pk * x - (a + 1.0)) * out[k];
        if (k >= 1)
            out[k + 1] += a * (pk - 1.0) * out[k - 1];
        pk *= p;
    }
    return out;
}

void require_decay(const std::vector<double>& magnitudes)
{
    if (magnitudes.size() < 2)
        return;
    const double largest = *std::max_element(magnitudes.begin(), magnitudes.end());
    if (!std::isfinite(largest))
        throw Error(ErrorKind::Divergence, "generating-function terms overflowed");
    if (magnitudes.back() > 1e-3 * largest)
        throw Error(ErrorKind::Divergence, "generating-function terms did not decay within K terms");
}

} // namespace

Poly family_poly(std::size_t n, Complex a, Complex p, SeriesFamily family)
{
    return u_recurrence(n, family_params(a, p, family));
}

Complex family_eval(std::size_t n, Complex a, Complex p, SeriesFamily family, Complex x)
{
    return u_eval(n, family_params(a, p, family), x);
}

ConnectionCoeffs connection_coeffs(std::size_t n, Complex a, Complex b, Complex p)
{
    require_series_base(p);
    require_finite(a, "a");
    require_finite(b, "b");
    if (a == Complex(0.0))
        throw Error(ErrorKind::Parameter, "a=0 excluded");
    if (b == Complex(0.0))
        throw Error(ErrorKind::Parameter, "b=0 excluded");

    const long nl = static_cast<long>(n);
    const Complex lead = ipow(-1.0, nl) * qpoch(p, p, n) * ipow(p, -binom2(nl));

    ConnectionCoeffs out{n, a, b, p, std::vector<Complex>(n + 1)};
    for (std::size_t k = 0; k <= n; ++k) {
        const long kl = static_cast<long>(k);
        out.c[k] = lead * ipow(-1.0, kl) * ipow(a, nl - kl) * qpoch(b / a, p, n - k) * ipow(p, binom2(kl)) /
                   (qpoch(p, p, n - k) * qpoch(p, p, k));
    }
    return out;
}

ConnectionResidual verify_connection(std::size_t n, Complex a, Complex b, Complex p, SeriesFamily family)
{
    const ConnectionCoeffs cc = connection_coeffs(n, a, b, p);
    Poly expansion;
    for (std::size_t k = 0; k <= n; ++k)
        expansion += family_poly(k, b, p, family) * cc.c[k];
    const Poly target = family_poly(n, a, p, family);
    return {max_abs_diff(expansion, target), max_scaled_diff(expansion, target)};
}

double connection_transitivity(std::size_t n, Complex a, Complex b, Complex c, Complex p)
{
    const ConnectionCoeffs ab = connection_coeffs(n, a, b, p);
    const ConnectionCoeffs ac = connection_coeffs(n, a, c, p);
    std::vector<Complex> composed(n + 1, Complex(0.0));
    for (std::size_t j = 0; j <= n; ++j) {
        const ConnectionCoeffs bc = connection_coeffs(j, b, c, p);
        for (std::size_t k = 0; k <= j; ++k)
            composed[k] += ab.c[j] * bc.c[k];
    }
    double worst = 0.0;
    for (std::size_t k = 0; k <= n; ++k)
        worst = std::max(worst, std::abs(composed[k] - ac.c[k]) / std::max(1.0, std::abs(ac.c[k])));
    return worst;
}

SeriesCheck genfun_classic_check(Complex x, Complex t, Complex a, Complex p, std::size_t K, SeriesFamily family)
{
    require_series_base(p);
    require_finite(x, "x");
    require_finite(t, "t");
    require_finite(a, "a");
    if (!(std::abs(t) < 1.0) || !(std::abs(a * t) < 1.0))
        throw Error(ErrorKind::Parameter, "classical generating function needs |t| < 1 and |at| < 1");

    SeriesCheck out;
    out.lhs = qpoch_inf(x * t, p) / (qpoch_inf(t, p) * qpoch_inf(a * t, p));

    const auto scaled = scaled_family_values(K, a, p, family, x);
    CompensatedSum sum;
    Complex tn(1.0);
    Complex pp_n(1.0); // (p;p)_n
    Complex pn(1.0);
    for (std::size_t n = 0; n < K; ++n) {
        const Complex term = ((n % 2) ? -1.0 : 1.0) * scaled[n] * tn / pp_n;
        sum += term;
        out.term_magnitudes.push_back(std::abs(term));
        tn *= t;
        pn *= p;
        pp_n *= 1.0 - pn;
    }
    out.rhs = sum.value();
    require_decay(out.term_magnitudes);
    return out;
}

namespace
{

SeriesCheck generalized_series(Complex x, Complex t, Complex a, Complex b, Complex p, std::size_t K,
                               GenfunExponent exponent, SeriesFamily family)
{
    SeriesCheck out;
    out.lhs = qpoch_inf(a * t, p) * phi11(x, a * t, p, t);

    // p^{k(k-1)} P_k = p^{binom(k,2)} * (p^{binom(k,2)} P_k); p^{binom(k,2)} P_k = 1 * (p^{binom(k,2)} P_k).
    const auto scaled = scaled_family_values(K, b, p, family, x);
    CompensatedSum sum;
    Complex tk(1.0);
    Complex pp_k(1.0);
    Complex pk(1.0);
    for (std::size_t k = 0; k < K; ++k) {
        const Complex extra = exponent == GenfunExponent::KTimesKMinus1 ? ipow(p, binom2(static_cast<long>(k))) : 1.0;
        const Complex term = extra * scaled[k] / pp_k * phi11(b / a, 0.0, p, a * t * pk) * tk;
        sum += term;
        out.term_magnitudes.push_back(std::abs(term));
        tk *= t;
        pk *= p;
        pp_k *= 1.0 - pk;
    }
    out.rhs = sum.value();
    return out;
}

} // namespace

SeriesCheck genfun_generalized_check(Complex x, Complex t, Complex a, Complex b, Complex p, std::size_t K,
                                     GenfunExponent exponent, SeriesFamily family)
{
    require_series_base(p);
    require_finite(x, "x");
    require_finite(t, "t");
    require_not_zero_or_one(a, "a");
    require_not_zero_or_one(b, "b");
    if (!(std::abs(a * t) < 1.0))
        throw Error(ErrorKind::Parameter, "generalized generating function needs |at| < 1");

    SeriesCheck out = generalized_series(x, t, a, b, p, K, exponent, family);
    require_decay(out.term_magnitudes);
    return out;
}

ReductionReport genfun_reduction_check(Complex x, Complex t, Complex a, Complex p, std::size_t K, double tolerance)
{
    ReductionReport report;
    const SeriesCheck kk1 = genfun_generalized_check(x, t, a, a, p, K, GenfunExponent::KTimesKMinus1);
    const SeriesCheck bin = genfun_generalized_check(x, t, a, a, p, K, GenfunExponent::Binomial);
    report.lhs = kk1.lhs;
    report.rhs_k_times_k_minus_1 = kk1.rhs;
    report.rhs_binomial = bin.rhs;
    report.residual_k_times_k_minus_1 = kk1.residual();
    report.residual_binomial = bin.residual();

    // Collapsed series without the 1phi1(1; 0; ...) factors.
    const auto scaled = scaled_family_values(K, a, p, SeriesFamily::InverseBase, x);
    CompensatedSum collapsed;
    Complex tk(1.0), pp_k(1.0), pk(1.0);
    for (std::size_t k = 0; k < K; ++k) {
        collapsed += ipow(p, binom2(static_cast<long>(k))) * scaled[k] / pp_k * tk;
        tk *= t;
        pk *= p;
        pp_k *= 1.0 - pk;
    }
    report.collapse_residual = std::abs(collapsed.value() - kk1.rhs);

    const bool kk1_ok = report.residual_k_times_k_minus_1 < tolerance;
    const bool bin_ok = report.residual_binomial < tolerance;
    if (kk1_ok != bin_ok)
        report.matched = kk1_ok ? GenfunExponent::KTimesKMinus1 : GenfunExponent::Binomial;
    return report;
}

SeriesCheck con2_check(Complex x, Complex t, Complex a, Complex b, Complex p, std::size_t K)
{
    const SeriesCheck series_a = genfun_classic_check(x, t, a, p, K);
    const SeriesCheck series_b = genfun_classic_check(x, t, b, p, K);
    SeriesCheck out;
    out.lhs = series_a.rhs;
    out.rhs = qpoch_inf(b * t, p) / qpoch_inf(a * t, p) * series_b.rhs;
    out.term_magnitudes = series_a.term_magnitudes;
    return out;
}

Thm33Report thm33_check(std::size_t m, Complex t, Complex a, Complex b, Complex p, std::size_t M, double tolerance)
{
    require_series_base(p);
    require_finite(t, "t");
    require_not_zero_or_one(a, "a");
    require_not_zero_or_one(b, "b");
    if (!(std::abs(a * t) < 1.0))
        throw Error(ErrorKind::Parameter, "integral identity check needs |at| < 1");

    Thm33Report report;
    report.m = m;
    report.t = t;
    report.a = a;
    report.b = b;
    report.p = p;
    report.tolerance = tolerance;
    report.M = M == 0 ? std::max(adaptive_order(a, p), adaptive_order(b, p)) : M;

    const FamilyParams orthogonal(b, p);
    const auto lhs_integral = [&](Complex c) {
        const WeightSpec spec{c, p};
        const auto integrand = [&](Complex x) {
            return phi11(x, a * t, p, t) * u_eval(m, orthogonal, x) * weight_eval(x, spec);
        };
        return jackson_a_to_b(integrand, c, 1.0, p, report.M);
    };
    report.lhs_raw_b = lhs_integral(b);
    report.lhs_raw_a = lhs_integral(a);
    report.normalization = qpoch_inf(a * t, p) / ((1.0 - p) * qpoch_inf(p, p));

    const Complex q = 1.0 / p;
    const long ml = static_cast<long>(m);
    const Complex norm_b = qpoch_inf(b, p) * qpoch_inf(p / b, p);
    for (char weight : {'b', 'a'}) {
        const Complex lhs = report.normalization * (weight == 'b' ? report.lhs_raw_b : report.lhs_raw_a);
        for (char exp_base : {'p', 'q'}) {
            for (char series_base : {'p', 'q'}) {
                Thm33Variant v;
                v.label = std::string("weight=") + weight + ",exp=" + exp_base + ",series=" + series_base;
                v.weight_param = weight;
                v.exponent_base = exp_base;
                v.series_base = series_base;
                v.lhs = lhs;
                const Complex E = exp_base == 'p' ? p : q;
                const Complex S = series_base == 'p' ? p : q;
                try {
                    const Complex series = phi11(b / a, 0.0, S, a * t * ipow(S, ml));
                    v.value = ipow(-b * t, ml) * ipow(E, 3 * binom2(ml)) * norm_b * series;
                    const double scale = std::max(std::abs(lhs), std::abs(*v.value));
                    v.residual = scale > 0.0 ? std::abs(lhs - *v.value) / scale : 0.0;
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::Regime && e.kind() != ErrorKind::Divergence)
                        throw;
                    v.value.reset();
                    v.residual = std::numeric_limits<double>::infinity();
                }
                report.variants.push_back(std::move(v));
            }
        }
    }

    std::size_t matches = 0;
    for (const auto& v : report.variants) {
        if (v.residual < tolerance) {
            ++matches;
            report.matched_variant = v.label;
        }
    }
    if (matches != 1)
        report.matched_variant.reset();

    // Discrete reading on x = p^{-k}.
    const Complex at_inf = qpoch_inf(a * t, p);
    CompensatedSum discrete;
    Complex pk_inv(1.0); // p^{-k}
    Complex pk(1.0);
    Complex weight(1.0); // p^{k^2} b^k / ((p;p)_k (bp;p)_k)
    for (std::size_t k = 0; k < 400; ++k) {
        if (k > 0 && std::abs(weight) < 1e-60)
            break;
        const Complex x = pk_inv;
        const Complex term = weight * at_inf * phi11(x, a * t, p, t) * family_eval(m, b, p, SeriesFamily::InverseBase, x);
        if (!is_finite(term))
            throw Error(ErrorKind::Divergence, "discrete lattice sum overflowed");
        discrete += term;
        report.discrete_term_max = std::max(report.discrete_term_max, std::abs(term));
        // k -> k+1: p^{(k+1)^2} = p^{k^2} p^{2k+1}
        const Complex pk1 = pk * p;
        const Complex bp_k = 1.0 - b * pk1; // factor (1 - b p^{k+1}) of (bp;p)_{k+1}
        if (bp_k == Complex(0.0))
            throw Error(ErrorKind::Parameter, "b p^j = 1 makes the discrete weight singular");
        weight *= pk * pk * p * b / ((1.0 - pk1) * bp_k);
        pk = pk1;
        pk_inv /= p;
    }
    report.discrete_lhs = discrete.value();
    report.discrete_rhs =
        ipow(b * t, ml) * ipow(p, -ml) * phi11(b / a, 0.0, p, a * t * ipow(p, ml)) / qpoch_inf(b * p, p);
    report.discrete_residual = std::abs(report.discrete_lhs - report.discrete_rhs) /
                               std::max(std::abs(report.discrete_lhs), std::abs(report.discrete_rhs));
    return report;
}

} // namespace ascq
