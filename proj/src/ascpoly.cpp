#include "ascq/ascpoly.hpp"

#include "ascq/qkernel.hpp"
#include "ascq/qlattice.hpp"

namespace ascq
{

void FamilyParams::require_orthogonality_params() const
{
    if (a == Complex(0.0))
        throw Error(ErrorKind::Parameter, "a=0 excluded");
    if (a == Complex(1.0))
        throw Error(ErrorKind::Parameter, "a=1 excluded");
}

Complex recurrence_alpha(const FamilyParams& params, std::size_t n)
{
    return (params.a + 1.0) * ipow(params.q.value(), static_cast<long>(n));
}

Complex recurrence_beta(const FamilyParams& params, std::size_t n)
{
    if (n == 0)
        return 0.0;
    const Complex q = params.q.value();
    return -params.a * ipow(q, static_cast<long>(n) - 1) * (1.0 - ipow(q, static_cast<long>(n)));
}

Poly u_explicit(std::size_t n, const FamilyParams& params)
{
    if (params.a == Complex(0.0))
        throw Error(ErrorKind::Parameter, "explicit construction divides by a^k; a=0 excluded");

    const Complex q = params.q.value();
    const Complex a = params.a;
    const Complex q_minus_n = ipow(q, -static_cast<long>(n));

    // sum_k [(q^{-n};q)_k q^k / ((q;q)_k a^k)] prod_{j<k} (x - q^j)
    Poly sum;
    Poly basis = Poly::constant(1.0);
    Complex numer(1.0); // (q^{-n};q)_k
    Complex denom(1.0); // (q;q)_k a^k
    Complex qk(1.0);
    for (std::size_t k = 0; k <= n; ++k) {
        sum += basis * (numer * qk / denom);
        numer *= 1.0 - q_minus_n * qk;
        denom *= (1.0 - qk * q) * a;
        basis.mul_linear(qk);
        qk *= q;
    }

    const Complex prefactor = ipow(-a, static_cast<long>(n)) * ipow(q, binom2(static_cast<long>(n)));
    return sum * prefactor;
}

std::vector<Poly> u_recurrence_all(std::size_t nmax, const FamilyParams& params)
{
    std::vector<Poly> out;
    out.reserve(nmax + 1);
    out.push_back(Poly::constant(1.0));
    for (std::size_t n = 0; n < nmax; ++n) {
        Poly next = out[n];
        next.mul_linear(recurrence_alpha(params, n));
        if (n >= 1)
            next -= out[n - 1] * recurrence_beta(params, n);
        out.push_back(std::move(next));
    }
    return out;
}

Poly u_recurrence(std::size_t n, const FamilyParams& params)
{
    return u_recurrence_all(n, params).back();
}

std::vector<Complex> u_eval_all(std::size_t nmax, const FamilyParams& params, Complex x)
{
    std::vector<Complex> values(nmax + 1);
    values[0] = 1.0;
    for (std::size_t n = 0; n < nmax; ++n) {
        values[n + 1] = (x - recurrence_alpha(params, n)) * values[n];
        if (n >= 1)
            values[n + 1] -= recurrence_beta(params, n) * values[n - 1];
    }
    return values;
}

Complex u_eval(std::size_t n, const FamilyParams& params, Complex x)
{
    Complex prev(0.0);
    Complex cur(1.0);
    for (std::size_t k = 0; k < n; ++k) {
        const Complex next = (x - recurrence_alpha(params, k)) * cur - recurrence_beta(params, k) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

ValueAndDerivative u_eval_with_derivative(std::size_t n, const FamilyParams& params, Complex x)
{
    Complex prev(0.0), cur(1.0);
    Complex dprev(0.0), dcur(0.0);
    for (std::size_t k = 0; k < n; ++k) {
        const Complex alpha = recurrence_alpha(params, k);
        const Complex beta = recurrence_beta(params, k);
        const Complex next = (x - alpha) * cur - beta * prev;
        const Complex dnext = cur + (x - alpha) * dcur - beta * dprev;
        prev = cur;
        cur = next;
        dprev = dcur;
        dcur = dnext;
    }
    return {cur, dcur};
}

Complex rodrigues_eval(std::size_t n, const FamilyParams& params, Complex x, const SeriesTruncation& trunc)
{
    params.q.require_inside("Rodrigues evaluation");
    if (x == Complex(0.0))
        throw Error(ErrorKind::Domain, "Rodrigues evaluation needs x != 0");

    const WeightSpec spec{params.a, params.q.value(), trunc};
    const Complex wx = weight_eval(x, spec);
    if (std::abs(wx) < 1e-14)
        throw Error(ErrorKind::SingularWeight, "weight vanishes at the evaluation point");

    const Complex q = params.q.value();
    const long nl = static_cast<long>(n);
    const Complex dn = qderiv_pinv_iterated([&](Complex z) { return weight_eval(z, spec); }, x, q, n);
    const Complex prefactor = ipow(params.a, nl) * ipow(q, binom2(nl)) * ipow(1.0 - q, nl) / (ipow(q, nl) * wx);
    return prefactor * dn;
}

Poly u_asc2(std::size_t n, Complex a, Complex q)
{
    return u_recurrence(n, FamilyParams(a, 1.0 / q));
}

} // namespace ascq
