#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ascq/zeros.hpp"
#include "support.hpp"

#include <algorithm>
#include <sstream>

using namespace ascq;
using test::Gen;
using test::pi;

TEST_CASE("Jacobi matrix examples")
{
    const TridiagonalJacobi J = jacobi_matrix(2, 1.0, 0.5);
    CHECK(J.diag == std::vector<Complex>{2.0, 1.0});
    CHECK(J.sub == std::vector<Complex>{1.0});
    CHECK(J.super == std::vector<Complex>{-0.5});

    const TridiagonalJacobi one = jacobi_matrix(1, Complex(0.5, 2.0), 0.3);
    CHECK(one.diag == std::vector<Complex>{Complex(1.5, 2.0)});
    CHECK(one.super.empty());

    const TridiagonalJacobi zero = jacobi_matrix(4, 0.0, 0.5);
    for (Complex b : zero.super)
        CHECK(b == Complex(0.0));
    auto ev = eigen_zeros(zero);
    std::sort(ev.begin(), ev.end(), [](Complex x, Complex y) { return x.real() > y.real(); });
    for (std::size_t k = 0; k < 4; ++k)
        CHECK(std::abs(ev[k] - std::pow(0.5, k)) < 1e-14);

    CHECK_THROWS_AS(jacobi_matrix(0, 1.0, 0.5), Error);
}

TEST_CASE("characteristic polynomial equals U_N (property)")
{
    Gen gen(501);
    for (int trial = 0; trial < 40; ++trial) {
        const Complex a = gen.annulus(0.1, 3.0), q = gen.annulus(0.2, 1.2);
        const std::size_t N = gen.index(1, 10);
        CHECK(max_abs_diff(characteristic_poly(jacobi_matrix(N, a, q)), u_recurrence(N, FamilyParams(a, q))) < 1e-10);
    }
}

TEST_CASE("find_zeros small cases")
{
    const ZeroSet one = find_zeros(1, Complex(1.0, -2.0), 0.3);
    REQUIRE(one.zeros.size() == 1);
    CHECK(std::abs(one.zeros[0] - Complex(2.0, -2.0)) < 1e-14);

    ZeroSet two = find_zeros(2, 1.0, 0.5);
    std::sort(two.zeros.begin(), two.zeros.end(), [](Complex x, Complex y) { return x.imag() > y.imag(); });
    CHECK(std::abs(two.zeros[0] - Complex(1.5, 0.5)) < 1e-14);
    CHECK(std::abs(two.zeros[1] - Complex(1.5, -0.5)) < 1e-14);

    CHECK_THROWS_AS(find_zeros(0, 1.0, 0.5), Error);
}

TEST_CASE("zeros of U_30 with a = 1+i, q = 0.8 e^{i pi/6}")
{
    const Complex a(1.0, 1.0), q = std::polar(0.8, pi / 6);
    const ZeroSet set = find_zeros(30, a, q);
    REQUIRE(set.zeros.size() == 30);
    CHECK(set.max_residual() < 1e-8);
    Complex sum(0.0);
    for (Complex z : set.zeros) {
        CHECK(z.real() >= -0.8);
        CHECK(z.real() <= 1.2);
        CHECK(z.imag() >= -0.4);
        CHECK(z.imag() <= 1.2);
        sum += z;
    }
    const Complex trace = (a + 1.0) * (1.0 - ipow(q, 30)) / (1.0 - q);
    CHECK(std::abs(sum - trace) < 1e-10);
}

TEST_CASE("zeros reconstruct the monic coefficients (property)")
{
    Gen gen(502);
    for (int trial = 0; trial < 30; ++trial) {
        const Complex a = gen.annulus(0.2, 2.0), q = gen.annulus(0.3, 0.95);
        const std::size_t N = gen.index(1, 10);
        const ZeroSet set = find_zeros(N, a, q);
        CHECK(max_abs_diff(Poly::from_roots(set.zeros), u_recurrence(N, FamilyParams(a, q))) < 1e-8);
        Complex sum(0.0);
        for (Complex z : set.zeros)
            sum += z;
        CHECK(std::abs(sum - (a + 1.0) * (1.0 - ipow(q, static_cast<long>(N))) / (1.0 - q)) < 1e-10);
    }
}

TEST_CASE("zero set is stable across routes (property)")
{
    Gen gen(503);
    for (int trial = 0; trial < 20; ++trial) {
        const Complex a = gen.annulus(0.2, 2.0), q = gen.annulus(0.3, 0.9);
        const std::size_t N = gen.index(2, 12);
        const ZeroSet set = find_zeros(N, a, q);
        ZeroOptions tighter;
        tighter.max_sweeps = 1000;
        tighter.newton_steps = 16;
        const ZeroSet again = find_zeros(N, a, q, tighter);
        std::vector<Complex> reversed(again.zeros.rbegin(), again.zeros.rend());
        CHECK(match_distance(set.zeros, reversed) < 1e-8);
        if (!set.has_clusters())
            CHECK(match_distance(set.zeros, eigen_zeros(jacobi_matrix(N, a, q))) < 1e-8);
    }
}

TEST_CASE("classical parameters give real simple zeros in [a, 1]")
{
    for (double a : {-1.0, -0.5}) {
        for (double q : {0.3, 0.7}) {
            for (std::size_t N = 1; N <= 15; ++N) {
                const ZeroSet set = find_zeros(N, a, q);
                std::vector<double> xs;
                for (Complex z : set.zeros) {
                    CHECK(std::abs(z.imag()) < 1e-8);
                    CHECK(z.real() >= a - 1e-8);
                    CHECK(z.real() <= 1.0 + 1e-8);
                    xs.push_back(z.real());
                }
                std::sort(xs.begin(), xs.end());
                for (std::size_t i = 1; i < xs.size(); ++i)
                    CHECK(xs[i] - xs[i - 1] > 1e-8);
            }
        }
    }
}

TEST_CASE("U_N(1) never vanishes")
{
    Gen gen(504);
    for (int trial = 0; trial < 30; ++trial) {
        const Complex a = gen.annulus(0.2, 2.0), q = gen.annulus(0.3, 0.95);
        const std::size_t N = gen.index(1, 30);
        CHECK(std::abs(u_eval(N, FamilyParams(a, q), 1.0)) > 0.0);
    }
}

TEST_CASE("match_distance and CSV")
{
    const Complex x[] = {1.0, 2.0};
    const Complex y[] = {2.0, 1.0 + 1e-9};
    CHECK(match_distance(x, y) == doctest::Approx(1e-9));
    const Complex z[] = {1.0};
    CHECK_THROWS_AS(match_distance(x, z), Error);

    std::ostringstream out;
    write_zeros_csv(out, find_zeros(1, 2.0, 0.5));
    CHECK(out.str() == "index,re,im,residual\n0,3,0,0\n");
}
