#include "ascq/poly.hpp"

#include <algorithm>

namespace ascq
{

Poly::Poly(std::initializer_list<Complex> coeffs) : coeffs_(coeffs)
{
    trim();
}

Poly::Poly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

Poly Poly::constant(Complex c)
{
    return Poly({c});
}

Poly Poly::monomial(std::size_t degree, Complex c)
{
    std::vector<Complex> coeffs(degree + 1, Complex(0.0));
    coeffs.back() = c;
    return Poly(std::move(coeffs));
}

Poly Poly::from_roots(std::span<const Complex> roots)
{
    Poly result = constant(1.0);
    for (Complex r : roots)
        result.mul_linear(r);
    return result;
}

Complex Poly::operator()(Complex x) const noexcept
{
    Complex acc(0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Poly& Poly::operator+=(const Poly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size(), Complex(0.0));
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
        coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size(), Complex(0.0));
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
        coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(Complex s)
{
    for (auto& c : coeffs_)
        c *= s;
    trim();
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs)
{
    if (lhs.is_zero() || rhs.is_zero())
        return {};
    std::vector<Complex> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Complex(0.0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return Poly(std::move(out));
}

void Poly::mul_linear(Complex root)
{
    if (is_zero())
        return;
    coeffs_.push_back(Complex(0.0));
    for (std::size_t k = coeffs_.size() - 1; k > 0; --k)
        coeffs_[k] = coeffs_[k - 1] - root * coeffs_[k];
    coeffs_[0] = -root * coeffs_[0];
    trim();
}

Poly Poly::derivative() const
{
    if (coeffs_.size() <= 1)
        return {};
    std::vector<Complex> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        out[k - 1] = static_cast<double>(k) * coeffs_[k];
    return Poly(std::move(out));
}

void Poly::trim() noexcept
{
    while (!coeffs_.empty() && coeffs_.back() == Complex(0.0))
        coeffs_.pop_back();
}

double max_abs_diff(const Poly& lhs, const Poly& rhs)
{
    const std::size_t n = static_cast<std::size_t>(std::max(lhs.degree(), rhs.degree()) + 1);
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k)
        worst = std::max(worst, std::abs(lhs[k] - rhs[k]));
    return worst;
}

double max_scaled_diff(const Poly& lhs, const Poly& rhs)
{
    const std::size_t n = static_cast<std::size_t>(std::max(lhs.degree(), rhs.degree()) + 1);
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k)
        worst = std::max(worst, std::abs(lhs[k] - rhs[k]) / std::max(1.0, std::abs(rhs[k])));
    return worst;
}

} // namespace ascq
