#pragma once

#include "ascq/core.hpp"
#include "ascq/qkernel.hpp"

#include <iosfwd>
#include <vector>

namespace ascq
{

/// Parameters of w(x;a;q) = (qx;q)_inf (qx/a;q)_inf.
struct WeightSpec
{
    Complex a;
    Complex q;
    SeriesTruncation trunc{};

    /// Throws Regime unless |q| < 1 and Parameter if a = 0.
    void validate() const;
};

Complex weight_eval(Complex x, const WeightSpec& spec);

/// Smallest M with |q|^M max(1, |a|) < tol.
std::size_t adaptive_order(Complex a, Complex q, double tol = 1e-18);

/// c (1-q) sum_{n=0}^{M} f(c q^n) q^n.
Complex jackson_0_to_c(const ComplexFn& f, Complex c, Complex q, std::size_t M);

/// int_a^b f d_q x = int_0^b - int_0^a.
Complex jackson_a_to_b(const ComplexFn& f, Complex a, Complex b, Complex q, std::size_t M);

enum class Branch
{
    S1, // q^k, from 1 toward 0
    S2, // a q^k, from a toward 0
};

const char* to_string(Branch branch) noexcept;

struct LatticePoint
{
    Branch branch;
    std::size_t k;
    Complex point;
};

/// The truncated spiral point set {q^k} u {a q^k}, 0 <= k <= M.
struct SpiralLattice
{
    Complex a;
    Complex q;
    std::size_t M;

    void validate() const;
};

/// All 2(M+1) points: the S1 branch then the S2 branch, each in order of decreasing magnitude.
/// Point k+1 is computed as q times point k.
std::vector<LatticePoint> lattice_points(const SpiralLattice& lattice);

/// CSV with header `branch,k,re,im` and 17 significant digits.
void write_lattice_csv(std::ostream& out, const std::vector<LatticePoint>& points);

} // namespace ascq
