#include "ascq/qkernel.hpp"

#include <vector>

namespace ascq
{

Complex qpoch(Complex z, Complex q, std::size_t n)
{
    Complex result(1.0);
    Complex zq = z;
    for (std::size_t k = 0; k < n; ++k) {
        result *= 1.0 - zq;
        zq *= q;
    }
    return result;
}

Complex qpoch_inf(Complex z, Complex q, const SeriesTruncation& trunc)
{
    trunc.validate();
    if (!(std::abs(q) < 1.0))
        throw Error(ErrorKind::Regime, "(z;q)_inf requires |q| < 1");

    Complex result(1.0);
    Complex zq = z;
    for (std::size_t k = 0; k < trunc.max_terms; ++k) {
        if (std::abs(zq) < trunc.tail_tol)
            return result;
        result *= 1.0 - zq;
        zq *= q;
    }
    if (std::abs(zq) < trunc.tail_tol)
        return result;
    throw Error(ErrorKind::Truncation, "(z;q)_inf tail bound not reached within max_terms factors");
}

Complex qpoch_inf(std::span<const Complex> zs, Complex q, const SeriesTruncation& trunc)
{
    Complex result(1.0);
    for (Complex z : zs)
        result *= qpoch_inf(z, q, trunc);
    return result;
}

Complex qnumber(Complex q, std::size_t n)
{
    Complex sum(0.0);
    Complex qk(1.0);
    for (std::size_t k = 0; k < n; ++k) {
        sum += qk;
        qk *= q;
    }
    return sum;
}

Complex qderiv(const ComplexFn& f, Complex z, Complex q)
{
    if (z == Complex(0.0))
        throw Error(ErrorKind::Domain, "q-derivative of a callable at z=0 needs the analytic limit");
    if (q == Complex(1.0))
        throw Error(ErrorKind::Domain, "q-derivative with q=1");
    return (f(q * z) - f(z)) / ((q - 1.0) * z);
}

Poly qderiv(const Poly& f, Complex q)
{
    if (q == Complex(1.0))
        throw Error(ErrorKind::Domain, "q-derivative with q=1");
    if (f.degree() < 1)
        return {};
    std::vector<Complex> out(static_cast<std::size_t>(f.degree()));
    Complex qn(1.0); // [n]_q built incrementally
    Complex qpow(1.0);
    for (std::size_t n = 1; n <= out.size(); ++n) {
        out[n - 1] = qn * f[n];
        qpow *= q;
        qn += qpow;
    }
    return Poly(std::move(out));
}

Complex qderiv_pinv_iterated(const ComplexFn& f, Complex z, Complex q, std::size_t n)
{
    if (z == Complex(0.0))
        throw Error(ErrorKind::Domain, "iterated q^{-1}-derivative at z=0");
    if (q == Complex(0.0) || q == Complex(1.0))
        throw Error(ErrorKind::Domain, "iterated q^{-1}-derivative needs q != 0, 1");

    const Complex p = 1.0 / q;
    // points[j] = z p^j; values[j] holds the level-l derivative at points[j].
    std::vector<Complex> points(n + 1);
    std::vector<Complex> values(n + 1);
    points[0] = z;
    for (std::size_t j = 1; j <= n; ++j)
        points[j] = points[j - 1] * p;
    for (std::size_t j = 0; j <= n; ++j)
        values[j] = f(points[j]);

    for (std::size_t level = 0; level < n; ++level)
        for (std::size_t j = 0; j + level < n; ++j)
            values[j] = (values[j + 1] - values[j]) / ((p - 1.0) * points[j]);
    return values[0];
}

Complex rphis(std::span<const Complex> numerators, std::span<const Complex> denominators, Complex q, Complex z,
              const SeriesTruncation& trunc)
{
    trunc.validate();
    if (!(std::abs(q) < 1.0))
        throw Error(ErrorKind::Regime, "r phi s requires |q| < 1");

    const long excess = 1 + static_cast<long>(denominators.size()) - static_cast<long>(numerators.size());

    CompensatedSum sum;
    Complex term(1.0);
    Complex qk(1.0); // q^k
    int small_run = 0;
    for (std::size_t k = 0; k < trunc.max_terms; ++k) {
        sum += term;
        const double partial = std::abs(sum.value());
        if (std::abs(term) <= trunc.tail_tol * partial) {
            if (++small_run == 2)
                return sum.value();
        } else {
            small_run = 0;
        }

        // term_{k+1} / term_k
        Complex ratio = z / (1.0 - qk * q);
        bool terminated = false;
        for (Complex a : numerators) {
            const Complex factor = 1.0 - a * qk;
            if (factor == Complex(0.0))
                terminated = true;
            ratio *= factor;
        }
        if (terminated)
            return sum.value();
        for (Complex b : denominators) {
            const Complex factor = 1.0 - b * qk;
            if (factor == Complex(0.0))
                throw Error(ErrorKind::Domain, "r phi s denominator parameter annihilates (b;q)_k");
            ratio /= factor;
        }
        // ((-1)^k q^{binom(k,2)})^{excess}: the k -> k+1 step multiplies by (-q^k)^{excess}.
        for (long e = 0; e < excess; ++e)
            ratio *= -qk;
        for (long e = excess; e < 0; ++e)
            ratio /= -qk;

        term *= ratio;
        qk *= q;
        if (term == Complex(0.0))
            return sum.value();
        if (!is_finite(term))
            throw Error(ErrorKind::Divergence, "r phi s terms overflowed");
    }
    throw Error(ErrorKind::Divergence, "r phi s did not converge within max_terms");
}

Complex phi11(Complex a, Complex b, Complex q, Complex z, const SeriesTruncation& trunc)
{
    const Complex num[] = {a};
    const Complex den[] = {b};
    return rphis(num, den, q, z, trunc);
}

} // namespace ascq
