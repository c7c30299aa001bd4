#include "ascq/core.hpp"

#include <string>

namespace ascq
{

const char* to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::Parameter: return "parameter";
    case ErrorKind::Regime: return "regime";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Truncation: return "truncation";
    case ErrorKind::Divergence: return "divergence";
    case ErrorKind::SingularWeight: return "singular_weight";
    case ErrorKind::Convergence: return "convergence";
    case ErrorKind::Degeneracy: return "degeneracy";
    }
    return "unknown";
}

const char* to_string(Regime regime) noexcept
{
    switch (regime) {
    case Regime::InsideDisk: return "inside_disk";
    case Regime::OutsideDisk: return "outside_disk";
    case Regime::RootOfUnity: return "root_of_unity";
    case Regime::OnCircleGeneric: return "on_circle_generic";
    }
    return "unknown";
}

void require_finite(Complex z, const char* what)
{
    if (!is_finite(z))
        throw Error(ErrorKind::Parameter, std::string(what) + " must be finite");
}

void SeriesTruncation::validate() const
{
    if (max_terms < 1)
        throw Error(ErrorKind::Parameter, "max_terms must be >= 1");
    if (!(tail_tol > 0.0))
        throw Error(ErrorKind::Parameter, "tail_tol must be > 0");
}

QBase::QBase(Complex q) : q_(q)
{
    require_finite(q, "q");
    if (q == Complex(0.0))
        throw Error(ErrorKind::Parameter, "q=0 excluded");
    if (std::abs(q - 1.0) < kCircleTol)
        throw Error(ErrorKind::Parameter, "q=1 excluded");

    const double r = std::abs(q);
    if (r < 1.0 - kCircleTol) {
        regime_ = Regime::InsideDisk;
    } else if (r > 1.0 + kCircleTol) {
        regime_ = Regime::OutsideDisk;
    } else {
        regime_ = Regime::OnCircleGeneric;
        Complex power = q;
        for (int n = 1; n <= kMaxRootOrder; ++n) {
            if (std::abs(power - 1.0) < kRootTol) {
                regime_ = Regime::RootOfUnity;
                order_ = n;
                break;
            }
            power *= q;
        }
    }
}

void QBase::require_inside(const char* operation) const
{
    if (regime_ != Regime::InsideDisk)
        throw Error(ErrorKind::Regime, std::string(operation) + " requires |q| < 1");
}

Complex ipow(Complex z, long n)
{
    if (n < 0)
        return 1.0 / ipow(z, -n);
    // Repeated multiplication so that ipow(q, k+1) == q * ipow(q, k) bit for bit.
    Complex result(1.0);
    for (long k = 0; k < n; ++k)
        result *= z;
    return result;
}

} // namespace ascq
