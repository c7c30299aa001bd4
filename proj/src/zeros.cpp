#include "ascq/zeros.hpp"

#include "ascq/complex_io.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

namespace ascq
{

TridiagonalJacobi jacobi_matrix(std::size_t N, Complex a, Complex q)
{
    if (N < 1)
        throw Error(ErrorKind::Parameter, "Jacobi matrix needs N >= 1");
    const FamilyParams params(a, q);
    TridiagonalJacobi J;
    J.diag.resize(N);
    for (std::size_t k = 0; k < N; ++k)
        J.diag[k] = recurrence_alpha(params, k);
    J.sub.assign(N - 1, Complex(1.0));
    J.super.resize(N - 1);
    for (std::size_t k = 1; k < N; ++k)
        J.super[k - 1] = recurrence_beta(params, k);
    return J;
}

Poly characteristic_poly(const TridiagonalJacobi& J)
{
    Poly prev = Poly::constant(1.0);
    if (J.size() == 0)
        return prev;
    Poly cur = prev;
    cur.mul_linear(J.diag[0]);
    for (std::size_t k = 1; k < J.size(); ++k) {
        Poly next = cur;
        next.mul_linear(J.diag[k]);
        next -= prev * (J.sub[k - 1] * J.super[k - 1]);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

double ZeroSet::max_residual() const noexcept
{
    double worst = 0.0;
    for (double r : residuals)
        worst = std::max(worst, r);
    return worst;
}

bool ZeroSet::has_clusters() const noexcept
{
    return std::any_of(multiplicity.begin(), multiplicity.end(), [](std::size_t m) { return m > 1; });
}

namespace
{

constexpr double kClusterDistance = 1e-8;

struct HornerPair
{
    Complex value;
    Complex derivative;
};

HornerPair horner(const Poly& p, Complex x)
{
    Complex value(0.0), deriv(0.0);
    const auto c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        deriv = deriv * x + value;
        value = value * x + c[k];
    }
    return {value, deriv};
}

double scaled_residual(const ValueAndDerivative& vd)
{
    const double d = std::abs(vd.derivative);
    return d > 0.0 ? std::abs(vd.value) / d : std::abs(vd.value);
}

std::size_t aberth(const Poly& monic, std::vector<Complex>& z, std::size_t max_sweeps)
{
    const std::size_t n = z.size();
    for (std::size_t sweep = 1; sweep <= max_sweeps; ++sweep) {
        double largest_step = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const auto [value, deriv] = horner(monic, z[i]);
            if (value == Complex(0.0))
                continue;
            const Complex ratio = value / deriv;
            Complex repulsion(0.0);
            for (std::size_t j = 0; j < n; ++j)
                if (j != i)
                    repulsion += 1.0 / (z[i] - z[j]);
            const Complex step = ratio / (1.0 - ratio * repulsion);
            if (!is_finite(step))
                continue;
            z[i] -= step;
            largest_step = std::max(largest_step, std::abs(step) / std::max(1.0, std::abs(z[i])));
        }
        if (largest_step < 4 * std::numeric_limits<double>::epsilon())
            return sweep;
    }
    return max_sweeps;
}

} // namespace

ZeroSet find_zeros(std::size_t N, Complex a, Complex q, const ZeroOptions& options)
{
    if (N < 1)
        throw Error(ErrorKind::Parameter, "find_zeros needs N >= 1");
    const FamilyParams params(a, q);
    const Poly monic = u_recurrence(N, params);

    ZeroSet set;
    set.zeros.resize(N);
    const double radius = std::max(1.0, std::abs(a) + 1.0);
    // Offset angle keeps the start circle off the real axis and off symmetric configurations.
    for (std::size_t k = 0; k < N; ++k) {
        const double theta = 2.0 * std::numbers::pi * (static_cast<double>(k) + 0.25) / static_cast<double>(N) + 0.4;
        set.zeros[k] = std::polar(radius, theta);
    }
    set.iterations = aberth(monic, set.zeros, options.max_sweeps);

    set.residuals.resize(N);
    for (std::size_t i = 0; i < N; ++i) {
        Complex z = set.zeros[i];
        ValueAndDerivative vd = u_eval_with_derivative(N, params, z);
        double res = scaled_residual(vd);
        for (std::size_t step = 0; step < options.newton_steps && res > 0.0; ++step) {
            if (vd.derivative == Complex(0.0))
                break;
            const Complex candidate = z - vd.value / vd.derivative;
            const ValueAndDerivative cvd = u_eval_with_derivative(N, params, candidate);
            const double cres = scaled_residual(cvd);
            if (!(cres < res))
                break;
            z = candidate;
            vd = cvd;
            res = cres;
        }
        set.zeros[i] = z;
        set.residuals[i] = res;
    }

    set.multiplicity.assign(N, 1);
    for (std::size_t i = 0; i < N; ++i) {
        std::size_t count = 0;
        for (std::size_t j = 0; j < N; ++j)
            if (std::abs(set.zeros[i] - set.zeros[j]) < kClusterDistance)
                ++count;
        set.multiplicity[i] = count;
    }

    // Clustered zeros are flagged rather than failed; their Newton residuals are not meaningful.
    for (std::size_t i = 0; i < N; ++i) {
        if (set.multiplicity[i] == 1 && !(set.residuals[i] < options.tol))
            throw ZeroFindingError("zero refinement did not reach the residual tolerance", set);
    }
    return set;
}

std::vector<Complex> eigen_zeros(const TridiagonalJacobi& J)
{
    const auto n = static_cast<Eigen::Index>(J.size());
    Eigen::MatrixXcd dense = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        dense(k, k) = J.diag[static_cast<std::size_t>(k)];
        if (k + 1 < n) {
            dense(k + 1, k) = J.sub[static_cast<std::size_t>(k)];
            dense(k, k + 1) = J.super[static_cast<std::size_t>(k)];
        }
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(dense, false);
    if (solver.info() != Eigen::Success)
        throw Error(ErrorKind::Convergence, "complex eigensolver failed");
    const auto& values = solver.eigenvalues();
    return {values.data(), values.data() + values.size()};
}

double match_distance(std::span<const Complex> lhs, std::span<const Complex> rhs)
{
    if (lhs.size() != rhs.size())
        throw Error(ErrorKind::Parameter, "zero sets differ in size");
    std::vector<bool> used(rhs.size(), false);
    double worst = 0.0;
    for (Complex z : lhs) {
        std::size_t best = rhs.size();
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < rhs.size(); ++j) {
            if (used[j])
                continue;
            const double d = std::abs(z - rhs[j]);
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        used[best] = true;
        worst = std::max(worst, best_d);
    }
    return worst;
}

void write_zeros_csv(std::ostream& out, const ZeroSet& set)
{
    out << "index,re,im,residual\n";
    for (std::size_t i = 0; i < set.zeros.size(); ++i)
        out << i << ',' << format_real(set.zeros[i].real()) << ',' << format_real(set.zeros[i].imag()) << ','
            << format_real(set.residuals[i]) << '\n';
}

} // namespace ascq
