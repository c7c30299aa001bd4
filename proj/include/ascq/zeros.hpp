#pragma once

#include "ascq/ascpoly.hpp"
#include "ascq/core.hpp"
#include "ascq/poly.hpp"

#include <iosfwd>
#include <span>
#include <vector>

namespace ascq
{

/// Non-symmetric tridiagonal matrix whose characteristic polynomial is U_N:
/// diag alpha_k = (a+1) q^k, sub-diagonal ones, super-diagonal beta_k = -a q^{k-1} (1 - q^k).
struct TridiagonalJacobi
{
    std::vector<Complex> diag;  // N entries
    std::vector<Complex> sub;   // N-1 entries, J(k+1, k)
    std::vector<Complex> super; // N-1 entries, J(k, k+1) = beta_{k+1}

    std::size_t size() const noexcept { return diag.size(); }
};

TridiagonalJacobi jacobi_matrix(std::size_t N, Complex a, Complex q);

/// det(xI - J) by the continuant recurrence.
Poly characteristic_poly(const TridiagonalJacobi& J);

struct ZeroSet
{
    std::vector<Complex> zeros;
    std::vector<double> residuals;           // |U_N(z) / U_N'(z)|, or |U_N(z)| where U_N'(z) = 0
    std::vector<std::size_t> multiplicity;   // size of the cluster (distance < 1e-8) each zero belongs to
    std::size_t iterations = 0;              // Aberth sweeps used

    double max_residual() const noexcept;
    bool has_clusters() const noexcept;
};

class ZeroFindingError : public Error
{
  public:
    ZeroFindingError(const std::string& what, ZeroSet partial)
        : Error(ErrorKind::Convergence, what), partial_(std::move(partial))
    {}
    const ZeroSet& partial() const noexcept { return partial_; }

  private:
    ZeroSet partial_;
};

struct ZeroOptions
{
    double tol = 1e-8;               // bound on every scaled residual
    std::size_t max_sweeps = 500;    // Aberth sweep budget
    std::size_t newton_steps = 8;    // polishing steps on the recurrence
};

/// Zeros of U_N^{(a)}(x;q): Aberth-Ehrlich on the monic coefficients, started on a circle of
/// radius max(1, |a|+1), then Newton-polished on the recurrence evaluation. Throws
/// ZeroFindingError (carrying the unrefined set) when a residual stays above tol.
ZeroSet find_zeros(std::size_t N, Complex a, Complex q, const ZeroOptions& options = {});

/// Eigenvalues of the tridiagonal matrix by a dense complex eigensolver; the cross-check route.
std::vector<Complex> eigen_zeros(const TridiagonalJacobi& J);

/// Largest distance between greedily nearest-neighbour matched elements of two equal-size sets.
/// Throws Parameter on a size mismatch.
double match_distance(std::span<const Complex> lhs, std::span<const Complex> rhs);

/// CSV with header `index,re,im,residual`.
void write_zeros_csv(std::ostream& out, const ZeroSet& set);

} // namespace ascq
