#pragma once

#include "ascq/ascpoly.hpp"
#include "ascq/core.hpp"
#include "ascq/qkernel.hpp"

#include <optional>
#include <vector>

namespace ascq
{

/// Square complex matrix, row-major.
class ComplexMatrix
{
  public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t n) : n_(n), data_(n * n, Complex(0.0)) {}

    std::size_t size() const noexcept { return n_; }
    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    Complex operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  private:
    std::size_t n_ = 0;
    std::vector<Complex> data_;
};

/// Gram matrix of <U_n, U_m> with deviation statistics.
struct GramReport
{
    Complex a;
    Complex q;              // base the polynomials and lattice were built in
    std::size_t nmax = 0;
    std::size_t M = 0;      // lattice order actually used (0 for quadrature forms)
    ComplexMatrix entries;
    std::vector<Complex> diag_expected; // empty when no closed-form norm applies
    double max_offdiag_rel = 0.0;       // max_{n!=m} |G_nm| / max_k |G_kk|
    double max_diag_rel_err = 0.0;      // max_n |G_nn - d_n^2| / |d_n^2|
    double max_asymmetry = 0.0;         // max |G_nm - G_mn|
    double tolerance = 1e-8;

    bool passed() const noexcept { return max_offdiag_rel < tolerance && max_diag_rel_err < tolerance; }
};

/// Closed-form squared norm
///   d_n^2 = (-a)^n (1-q) (q;q)_n (q;q)_inf (a;q)_inf (q/a;q)_inf q^{binom(n,2)}, |q| < 1.
Complex norm_d2(std::size_t n, Complex a, Complex q, const SeriesTruncation& trunc = {});

/// Rejects a in {0, 1}, |a-1| < 1e-8, |a| < 1e-8 and |q^n - 1| < 1e-10 for some n <= nmax.
void require_well_conditioned(Complex a, Complex q, std::size_t nmax);

/// Gram matrix G[n][m] = int_a^1 U_n U_m w(x;a;q) d_q x for 0 <= n, m <= nmax on the spiral
/// lattice, with M = 0 selecting the adaptive order. Requires |q| < 1 and a != 0, 1.
GramReport gram(std::size_t nmax, Complex a, Complex q, std::size_t M = 0, double tolerance = 1e-8);

/// The |q| > 1 orthogonality: Gram of U_n^{(a)}(x; 1/q) under base p = 1/q, with diagonals
/// compared to (-a)^n (1-p) (p;p)_n (p;p)_inf (a;p)_inf (p/a;p)_inf p^{binom(n,2)}.
GramReport verify_asc2(std::size_t nmax, Complex a, Complex q, std::size_t M = 0, double tolerance = 1e-8);

struct CorollarySum
{
    Complex lhs; // K-term partial sum
    Complex rhs; // (a;q)_inf (q/a;q)_inf
};

/// sum_{k<K} [(q^{k+1}/a;q)_inf - a (a q^{k+1};q)_inf] q^k / (q;q)_k  vs  (a;q)_inf (q/a;q)_inf.
CorollarySum corollary_sum(Complex a, Complex q, std::size_t K, const SeriesTruncation& trunc = {});

enum class SbpVariant
{
    Corrected, // boundary [f g(q^{-1}) - f g(q^M)] / (q^{-1} - 1)
    Printed,   // boundary [f g(q^M) - f g(q^{-1})] / (q^{-1} - 1)
    Both,
    Neither,
};

const char* to_string(SbpVariant variant) noexcept;

struct SbpReport
{
    Complex lhs;              // sum_{k=0}^M f(q^k) D_{q^{-1}} g(q^k) q^k
    Complex boundary;         // the corrected-sign boundary term
    Complex inner_sum;        // sum_{k=0}^M g(q^{k-1}) D_{q^{-1}} f(q^k) q^k
    Complex rhs_corrected;    // boundary - inner_sum
    Complex rhs_as_printed;   // -boundary - inner_sum
    double residual_corrected = 0.0; // scaled by max(1, |lhs|, |boundary|, |inner_sum|)
    double residual_printed = 0.0;
    SbpVariant matched = SbpVariant::Neither;
};

/// Evaluates both sign variants of the summation-by-parts identity on {q^k : -1 <= k <= M}.
SbpReport sbp_identity_check(const ComplexFn& f, const ComplexFn& g, Complex q, std::size_t M,
                             double tolerance = 1e-12);

enum class QuadratureWeights
{
    Gauss,     // C / (U_{N-1}(x_s) U_N'(x_s)): Christoffel numbers of the N-point rule
    AsPrinted, // C / U_{N-1}(x_s)^2
};

const char* to_string(QuadratureWeights weights) noexcept;

struct RootOfUnityReport
{
    std::size_t N = 0;
    std::size_t level = 0;
    QuadratureWeights weights = QuadratureWeights::Gauss;
    std::vector<Complex> nodes;
    Complex scale;                         // C = prod_{k=1}^{N-1} gamma_k
    GramReport gram;                       // Gram of (U_n)_{n < level N}; diag_expected empty
    std::vector<std::size_t> null_diagonal; // n with |G_nn| < tolerance * max_k |G_kk|
};

/// Level-j bilinear form <p,r>_j = sum_{i<j} <v, (D_q^{iN} p)(D_q^{iN} r)> at q^N = 1, where
/// <v, p> = C sum_s p(x_s) * weight_s over the zeros x_s of U_N.
RootOfUnityReport rootofunity_gram(std::size_t N, Complex a, Complex q, std::size_t level,
                                   QuadratureWeights weights = QuadratureWeights::Gauss, double tolerance = 1e-8);

} // namespace ascq
