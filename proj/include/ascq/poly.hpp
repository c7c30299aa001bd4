#pragma once

#include "ascq/core.hpp"

#include <initializer_list>
#include <span>
#include <vector>

namespace ascq
{

/// Dense polynomial with complex coefficients in ascending degree order.
///
/// Trailing exact zeros are trimmed, so the zero polynomial has no coefficients
/// and reports degree() == -1 (standing in for the conventional -infinity).
class Poly
{
  public:
    Poly() = default;
    Poly(std::initializer_list<Complex> coeffs);
    explicit Poly(std::vector<Complex> coeffs);

    static Poly constant(Complex c);
    static Poly monomial(std::size_t degree, Complex c = 1.0);
    /// Monic polynomial with the given roots.
    static Poly from_roots(std::span<const Complex> roots);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }
    /// Coefficient of x^k; zero past the degree.
    Complex operator[](std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : Complex(0.0); }
    Complex leading() const noexcept { return coeffs_.empty() ? Complex(0.0) : coeffs_.back(); }

    Complex operator()(Complex x) const noexcept;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(Complex s);

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(Poly lhs, Complex s) { return lhs *= s; }
    friend Poly operator*(Complex s, Poly rhs) { return rhs *= s; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);

    /// Multiplies in place by (x - root); the incremental step of product expansion.
    void mul_linear(Complex root);

    /// Ordinary derivative.
    Poly derivative() const;

  private:
    void trim() noexcept;

    std::vector<Complex> coeffs_;
};

/// max_k |lhs_k - rhs_k| over the union of supports.
double max_abs_diff(const Poly& lhs, const Poly& rhs);

/// max_k |lhs_k - rhs_k| / max(1, |rhs_k|): absolute for small coefficients, relative for large ones.
double max_scaled_diff(const Poly& lhs, const Poly& rhs);

} // namespace ascq
