#pragma once

#include "ascq/core.hpp"
#include "ascq/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ascq
{

/// Which polynomials the base-p generating functions and connection relations are about.
enum class SeriesFamily
{
    /// U_n^{(a)}(x; 1/p), the |q| > 1 family written in p = 1/q. The identities hold for it.
    InverseBase,
    /// U_n^{(a)}(x; p) taken literally; kept to document that the identities fail for it.
    LiteralBase,
};

const char* to_string(SeriesFamily family) noexcept;

/// The family member of degree n with parameter a and series base p.
Poly family_poly(std::size_t n, Complex a, Complex p, SeriesFamily family);
Complex family_eval(std::size_t n, Complex a, Complex p, SeriesFamily family, Complex x);

/// Coefficients c_0..c_n with P_n^{(a)} = sum_k c_k P_k^{(b)}:
///   c_k = (-1)^n (p;p)_n p^{-binom(n,2)} (-1)^k a^{n-k} (b/a;p)_{n-k} p^{binom(k,2)} / ((p;p)_{n-k} (p;p)_k).
struct ConnectionCoeffs
{
    std::size_t n = 0;
    Complex a, b, p;
    std::vector<Complex> c;
};

ConnectionCoeffs connection_coeffs(std::size_t n, Complex a, Complex b, Complex p);

struct ConnectionResidual
{
    double absolute = 0.0; // max_k |coefficient deviation|
    double scaled = 0.0;   // max_k |deviation| / max(1, |coefficient of P_n^{(a)}|)
};

/// Expands sum_k c_k P_k^{(b)} and compares it with P_n^{(a)} coefficient-wise.
ConnectionResidual verify_connection(std::size_t n, Complex a, Complex b, Complex p,
                                     SeriesFamily family = SeriesFamily::InverseBase);

/// Composes a->b with b->c and returns the max scaled deviation from a->c.
double connection_transitivity(std::size_t n, Complex a, Complex b, Complex c, Complex p);

struct SeriesCheck
{
    Complex lhs;
    Complex rhs;                      // K-term partial sum
    std::vector<double> term_magnitudes;
    double residual() const noexcept { return std::abs(lhs - rhs); }
};

/// (xt;p)_inf / ((t;p)_inf (at;p)_inf)  vs  sum_{n<K} (-1)^n p^{binom(n,2)} / (p;p)_n P_n^{(a)}(x) t^n.
/// Requires |p| < 1, |t| < 1, |at| < 1.
SeriesCheck genfun_classic_check(Complex x, Complex t, Complex a, Complex p, std::size_t K = 40,
                                 SeriesFamily family = SeriesFamily::InverseBase);

enum class GenfunExponent
{
    KTimesKMinus1, // p^{k(k-1)}
    Binomial,      // p^{binom(k,2)}
};

const char* to_string(GenfunExponent exponent) noexcept;

/// (at;p)_inf 1phi1(x; at; p, t)  vs
/// sum_{k<K} p^{e(k)} / (p;p)_k 1phi1(b/a; 0; p, a t p^k) P_k^{(b)}(x) t^k.
/// Requires |p| < 1, |at| < 1, a, b not in {0, 1}.
SeriesCheck genfun_generalized_check(Complex x, Complex t, Complex a, Complex b, Complex p, std::size_t K = 40,
                                     GenfunExponent exponent = GenfunExponent::KTimesKMinus1,
                                     SeriesFamily family = SeriesFamily::InverseBase);

/// The b = a case: 1phi1(1; 0; p, .) = 1, so the generalized series collapses to
/// sum p^{e(k)} / (p;p)_k P_k^{(a)}(x) t^k. Both exponents are evaluated against the lhs.
struct ReductionReport
{
    Complex lhs;
    Complex rhs_k_times_k_minus_1;
    Complex rhs_binomial;
    double residual_k_times_k_minus_1 = 0.0;
    double residual_binomial = 0.0;
    double collapse_residual = 0.0; // generalized rhs at b = a vs the collapsed series
    std::optional<GenfunExponent> matched;
};

ReductionReport genfun_reduction_check(Complex x, Complex t, Complex a, Complex p, std::size_t K = 40,
                                       double tolerance = 1e-10);

/// The multiply-through form: a-family series vs (bt;p)_inf / (at;p)_inf times the b-family series.
SeriesCheck con2_check(Complex x, Complex t, Complex a, Complex b, Complex p, std::size_t K = 40);

/// One reading of the closed form (-bt)^m E^{3 binom(m,2)} (b;p)_inf (p/b;p)_inf 1phi1(b/a; 0; S, a t S^m)
/// with exponent base E and series base S each read as p or q = 1/p.
struct Thm33Variant
{
    std::string label;    // e.g. "weight=b,exp=p,series=p"
    char weight_param;    // 'a' or 'b': w(x; weight_param; p) and lattice endpoint
    char exponent_base;   // 'p' or 'q'
    char series_base;     // 'p' or 'q'
    Complex lhs;          // normalized integral for this weight reading
    std::optional<Complex> value;    // empty when the series diverges
    double residual = 0.0;           // |lhs - value| / max(|lhs|, |value|); +inf when divergent
};

struct Thm33Report
{
    std::size_t m = 0;
    Complex t, a, b, p;
    std::size_t M = 0;
    Complex lhs_raw_b;    // int_b^1 1phi1(x; at; p, t) U_m^{(b)}(x;p) w(x;b;p) d_p x
    Complex lhs_raw_a;    // the same with weight and endpoint parameter a
    Complex normalization; // (at;p)_inf / ((1-p)(p;p)_inf), fixed by the m = 0, t = 0 case
    std::vector<Thm33Variant> variants;
    std::optional<std::string> matched_variant; // set when exactly one variant has residual < tolerance
    double tolerance = 1e-6;

    /// Reference reading on the lattice x = p^{-k}: the discrete
    /// orthogonality of the inverse-base family gives
    ///   sum_k p^{k^2} b^k / ((p;p)_k (bp;p)_k) (at;p)_inf 1phi1(p^{-k}; at; p, t) P_m^{(b)}(p^{-k})
    ///     = (bt)^m p^{-m} 1phi1(b/a; 0; p, a t p^m) / (bp;p)_inf.
    Complex discrete_lhs;
    Complex discrete_rhs;
    double discrete_residual = 0.0;
    double discrete_term_max = 0.0; // largest summand; the sum cancels to ~eps times this
};

/// Evaluates the lhs integral on the spiral lattice (M = 0: adaptive) for both weight readings
/// and compares it with every base reading of the closed form.
Thm33Report thm33_check(std::size_t m, Complex t, Complex a, Complex b, Complex p, std::size_t M = 0,
                        double tolerance = 1e-6);

} // namespace ascq
