#pragma once

#include "ascq/core.hpp"
#include "ascq/poly.hpp"

#include <functional>
#include <span>

namespace ascq
{

using ComplexFn = std::function<Complex(Complex)>;

/// Finite q-shifted factorial (z;q)_n = prod_{k<n} (1 - z q^k).
Complex qpoch(Complex z, Complex q, std::size_t n);

/// Infinite q-shifted factorial (z;q)_inf for |q| < 1.
///
/// Factors are multiplied until |z q^K| < trunc.tail_tol. Throws Regime for |q| >= 1 and
/// Truncation if the tail bound is not reached within trunc.max_terms factors.
Complex qpoch_inf(Complex z, Complex q, const SeriesTruncation& trunc = {});

/// Product of several infinite q-shifted factorials (a_1, ..., a_r; q)_inf.
Complex qpoch_inf(std::span<const Complex> zs, Complex q, const SeriesTruncation& trunc = {});

/// The q-number [n]_q = 1 + q + ... + q^{n-1}.
Complex qnumber(Complex q, std::size_t n);

/// D_q f(z) = (f(qz) - f(z)) / ((q - 1) z). Domain error for z = 0 or q = 1.
Complex qderiv(const ComplexFn& f, Complex z, Complex q);

/// Exact coefficient-level q-derivative: D_q x^n = [n]_q x^{n-1}. Valid at z = 0.
Poly qderiv(const Poly& f, Complex q);

/// (D_{q^{-1}})^n f at z, from the n+1 values f(z q^{-j}), 0 <= j <= n, by nested difference quotients.
Complex qderiv_pinv_iterated(const ComplexFn& f, Complex z, Complex q, std::size_t n);

/// Unilateral basic hypergeometric series r phi s (numerators; denominators; q, z) for |q| < 1.
///
/// Terminates on a vanishing numerator Pochhammer factor or once two consecutive terms fall
/// below trunc.tail_tol relative to the partial sum. Throws Regime for |q| >= 1, Domain if a
/// denominator factor vanishes, Divergence if max_terms is exhausted.
Complex rphis(std::span<const Complex> numerators, std::span<const Complex> denominators, Complex q, Complex z,
              const SeriesTruncation& trunc = {});

/// 1 phi 1 (a; b; q, z).
Complex phi11(Complex a, Complex b, Complex q, Complex z, const SeriesTruncation& trunc = {});

} // namespace ascq
