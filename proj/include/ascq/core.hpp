#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace ascq
{

using Complex = std::complex<double>;

enum class ErrorKind
{
    Parameter,      // excluded or ill-conditioned parameter values
    Regime,         // |q| on the wrong side of the unit circle for the operation
    Domain,         // evaluation point outside the operation's domain
    Truncation,     // infinite product/series did not reach its tail bound
    Divergence,     // series terms failed to decay
    SingularWeight, // weight function vanishes at the evaluation point
    Convergence,    // iterative solver ran out of budget
    Degeneracy,     // coincident quadrature nodes
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error
{
  public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// True for errors caused by the caller's inputs rather than by a numerical failure.
    bool is_input_error() const noexcept
    {
        return kind_ == ErrorKind::Parameter || kind_ == ErrorKind::Regime || kind_ == ErrorKind::Domain;
    }

  private:
    ErrorKind kind_;
};

inline bool is_finite(Complex z) noexcept
{
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Throws a Parameter error naming `what` if `z` has a NaN or infinite component.
void require_finite(Complex z, const char* what);

/// Controls every infinite product and series in the library.
struct SeriesTruncation
{
    std::size_t max_terms = 10000;
    double tail_tol = 1e-16;

    void validate() const;
};

enum class Regime
{
    InsideDisk,
    OutsideDisk,
    RootOfUnity,
    OnCircleGeneric,
};

/// The base q of a q-family, classified by where it sits relative to the unit circle.
class QBase
{
  public:
    static constexpr double kCircleTol = 1e-12;
    static constexpr double kRootTol = 1e-10;
    static constexpr int kMaxRootOrder = 1024;

    explicit QBase(Complex q);

    Complex value() const noexcept { return q_; }
    Regime regime() const noexcept { return regime_; }
    /// Order N with q^N = 1; zero unless regime() == RootOfUnity.
    int root_order() const noexcept { return order_; }
    /// The reciprocal base p = 1/q.
    QBase inverse() const { return QBase(1.0 / q_); }

    /// Throws a Regime error unless |q| < 1.
    void require_inside(const char* operation) const;

  private:
    Complex q_;
    Regime regime_;
    int order_ = 0;
};

const char* to_string(Regime regime) noexcept;

/// Neumaier-compensated accumulator for complex terms.
class CompensatedSum
{
  public:
    void add(Complex term) noexcept
    {
        add_part(term.real(), re_, re_c_);
        add_part(term.imag(), im_, im_c_);
    }
    CompensatedSum& operator+=(Complex term) noexcept
    {
        add(term);
        return *this;
    }
    Complex value() const noexcept { return {re_ + re_c_, im_ + im_c_}; }

  private:
    static void add_part(double x, double& sum, double& comp) noexcept
    {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }

    double re_ = 0.0, re_c_ = 0.0;
    double im_ = 0.0, im_c_ = 0.0;
};

/// n choose 2.
constexpr long binom2(long n) noexcept
{
    return n * (n - 1) / 2;
}

/// Integer power by repeated multiplication; exact for the lattice constructions that need q^k.
Complex ipow(Complex z, long n);

} // namespace ascq
