#pragma once

#include "ascq/core.hpp"
#include "ascq/poly.hpp"

#include <vector>

namespace ascq
{

/// Parameters (a, q) of one Al-Salam-Carlitz family.
///
/// a = 0 and a = 1 are allowed for construction and evaluation; orthogonality-facing code
/// calls require_orthogonality_params() to exclude them.
struct FamilyParams
{
    Complex a;
    QBase q;

    FamilyParams(Complex a_, Complex q_) : a(a_), q(q_) { require_finite(a_, "a"); }
    FamilyParams(Complex a_, QBase q_) : a(a_), q(q_) { require_finite(a_, "a"); }

    /// Throws Parameter unless a != 0 and a != 1.
    void require_orthogonality_params() const;
};

/// Recurrence coefficients of U_{n+1} = (x - alpha_n) U_n - beta_n U_{n-1}:
/// alpha_n = (a+1) q^n, beta_n = -a q^{n-1} (1 - q^n).
Complex recurrence_alpha(const FamilyParams& params, std::size_t n);
Complex recurrence_beta(const FamilyParams& params, std::size_t n);

/// U_n from the terminating basic hypergeometric sum, with (x^{-1};q)_k x^k expanded as
/// prod_{j<k} (x - q^j). Parameter error for a = 0.
Poly u_explicit(std::size_t n, const FamilyParams& params);

/// U_n from the three-term recurrence.
Poly u_recurrence(std::size_t n, const FamilyParams& params);

/// U_0 .. U_nmax from one recurrence pass.
std::vector<Poly> u_recurrence_all(std::size_t nmax, const FamilyParams& params);

/// U_n(x) evaluated on values with the recurrence, without coefficient expansion.
Complex u_eval(std::size_t n, const FamilyParams& params, Complex x);

/// U_0(x) .. U_nmax(x).
std::vector<Complex> u_eval_all(std::size_t nmax, const FamilyParams& params, Complex x);

struct ValueAndDerivative
{
    Complex value;
    Complex derivative;
};

/// U_n(x) and the ordinary derivative U_n'(x) by the differentiated recurrence.
ValueAndDerivative u_eval_with_derivative(std::size_t n, const FamilyParams& params, Complex x);

/// U_n(x) through the Rodrigues-type representation
///   a^n q^{binom(n,2)} (1-q)^n / (q^n w(x)) * (D_{q^{-1}})^n w (x).
/// Requires |q| < 1 and x != 0; throws SingularWeight when |w(x)| < 1e-14.
Complex rodrigues_eval(std::size_t n, const FamilyParams& params, Complex x, const SeriesTruncation& trunc = {});

/// The |q| > 1 family U_n^{(a)}(x; 1/q), built by the recurrence in base 1/q.
Poly u_asc2(std::size_t n, Complex a, Complex q);

} // namespace ascq
