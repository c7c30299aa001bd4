#include "ascq/qlattice.hpp"

#include "ascq/complex_io.hpp"

#include <cmath>
#include <ostream>

namespace ascq
{

void WeightSpec::validate() const
{
    if (!(std::abs(q) < 1.0))
        throw Error(ErrorKind::Regime, "w(x;a;q) requires |q| < 1");
    if (a == Complex(0.0))
        throw Error(ErrorKind::Parameter, "w(x;a;q) requires a != 0");
}

Complex weight_eval(Complex x, const WeightSpec& spec)
{
    spec.validate();
    return qpoch_inf(spec.q * x, spec.q, spec.trunc) * qpoch_inf(spec.q * x / spec.a, spec.q, spec.trunc);
}

std::size_t adaptive_order(Complex a, Complex q, double tol)
{
    const double r = std::abs(q);
    if (!(r < 1.0) || r == 0.0)
        throw Error(ErrorKind::Regime, "adaptive lattice order requires 0 < |q| < 1");
    const double scale = std::max(1.0, std::abs(a));
    std::size_t M = 0;
    double mag = scale;
    while (!(mag < tol)) {
        mag *= r;
        ++M;
    }
    return M;
}

namespace
{

void require_jackson_base(Complex q)
{
    if (!(std::abs(q) < 1.0))
        throw Error(ErrorKind::Regime, "q-Jackson integral requires |q| < 1");
}

} // namespace

Complex jackson_0_to_c(const ComplexFn& f, Complex c, Complex q, std::size_t M)
{
    require_jackson_base(q);
    CompensatedSum sum;
    Complex qn(1.0);
    for (std::size_t n = 0; n <= M; ++n) {
        sum += f(c * qn) * qn;
        qn *= q;
    }
    return c * (1.0 - q) * sum.value();
}

Complex jackson_a_to_b(const ComplexFn& f, Complex a, Complex b, Complex q, std::size_t M)
{
    return jackson_0_to_c(f, b, q, M) - jackson_0_to_c(f, a, q, M);
}

const char* to_string(Branch branch) noexcept
{
    return branch == Branch::S1 ? "S1" : "S2";
}

void SpiralLattice::validate() const
{
    if (!(std::abs(q) < 1.0))
        throw Error(ErrorKind::Regime, "spiral lattice requires |q| < 1");
    if (a == Complex(0.0))
        throw Error(ErrorKind::Parameter, "spiral lattice requires a != 0");
}

std::vector<LatticePoint> lattice_points(const SpiralLattice& lattice)
{
    lattice.validate();
    std::vector<LatticePoint> points;
    points.reserve(2 * (lattice.M + 1));
    for (Branch branch : {Branch::S1, Branch::S2}) {
        Complex z = branch == Branch::S1 ? Complex(1.0) : lattice.a;
        for (std::size_t k = 0; k <= lattice.M; ++k) {
            points.push_back({branch, k, z});
            z *= lattice.q;
        }
    }
    return points;
}

void write_lattice_csv(std::ostream& out, const std::vector<LatticePoint>& points)
{
    out << "branch,k,re,im\n";
    for (const auto& p : points)
        out << to_string(p.branch) << ',' << p.k << ',' << format_real(p.point.real()) << ','
            << format_real(p.point.imag()) << '\n';
}

} // namespace ascq
