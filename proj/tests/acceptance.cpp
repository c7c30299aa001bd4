// One line per acceptance criterion; exit status is nonzero if any line fails.

#include "ascq/ascpoly.hpp"
#include "ascq/genfun.hpp"
#include "ascq/orthocheck.hpp"
#include "ascq/zeros.hpp"
#include "support.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

using namespace ascq;
using test::Gen;
using test::pi;

namespace
{

struct Outcome
{
    bool pass = false;
    std::string detail;
};

std::string sci(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome complex_orthogonality()
{
    bool pass = true;
    double off = 0.0, diag = 0.0, slowest = 0.0;
    for (const auto& [a, q] : test::gram_sets()) {
        const auto t0 = std::chrono::steady_clock::now();
        const GramReport r = gram(10, a, q);
        const double dt = seconds_since(t0);
        pass = pass && r.max_offdiag_rel < 1e-8 && r.max_diag_rel_err < 1e-8 && dt < 5.0;
        off = std::max(off, r.max_offdiag_rel);
        diag = std::max(diag, r.max_diag_rel_err);
        slowest = std::max(slowest, dt);
    }
    return {pass, "3 sets, nmax=10: max offdiag_rel " + sci(off) + ", max diag_rel_err " + sci(diag) +
                      " (tol 1e-8), slowest " + sci(slowest) + " s (limit 5 s)"};
}

Outcome asc2_orthogonality()
{
    const std::pair<Complex, Complex> sets[] = {{0.4, 2.0}, {Complex(0.0, 2.0), std::polar(1.25, -pi / 6)}};
    bool pass = true;
    double off = 0.0, diag = 0.0;
    for (const auto& [a, q] : sets) {
        const GramReport r = verify_asc2(8, a, q);
        pass = pass && r.max_offdiag_rel < 1e-8 && r.max_diag_rel_err < 1e-8;
        off = std::max(off, r.max_offdiag_rel);
        diag = std::max(diag, r.max_diag_rel_err);
    }
    return {pass, "2 sets, nmax=8, base 1/q: max offdiag_rel " + sci(off) + ", max diag_rel_err " + sci(diag) +
                      " (tol 1e-8)"};
}

Outcome corollary()
{
    const std::pair<Complex, Complex> grid[] = {
        {Complex(1.0, 1.0), std::polar(0.8, pi / 6)},  {-2.0, std::polar(0.85, 1.0)},
        {Complex(0.0, 0.5), std::polar(0.7, -pi / 4)}, {Complex(0.3, -0.7), std::polar(0.5, 2.0)},
        {2.0, std::polar(0.85, -2.5)},                 {Complex(-0.4, 0.2), std::polar(0.3, 0.5)},
        {Complex(0.0, 1.5), std::polar(0.6, pi)},      {Complex(-1.0, -1.0), std::polar(0.75, -1.2)},
        {0.7, std::polar(0.4, 3.0)},                   {Complex(3.0, -1.0), std::polar(0.85, 0.3)},
    };
    double worst = 0.0;
    for (const auto& [a, q] : grid) {
        const CorollarySum s = corollary_sum(a, q, 400);
        worst = std::max(worst, std::abs(s.lhs - s.rhs));
    }
    const std::pair<double, double> classical[] = {{-1.0, 0.5}, {-0.5, 0.3}, {-0.7, 0.6}, {-2.0, 0.8}};
    double worst_real = 0.0;
    for (const auto& [a, q] : classical) {
        const CorollarySum s = corollary_sum(a, q, 400);
        worst_real = std::max(worst_real, std::abs(s.lhs - s.rhs));
    }
    return {worst < 1e-8 && worst_real < 1e-10,
            "10-point complex grid max |lhs-rhs| " + sci(worst) + " (tol 1e-8); real classical max " +
                sci(worst_real) + " (tol 1e-10)"};
}

Outcome route_equivalence()
{
    double scaled = 0.0, absolute = 0.0;
    for (Complex a : {Complex(1.0, 1.0), Complex(-2.0), Complex(0.0, 0.5), Complex(3.0)}) {
        for (double r : {0.2, 0.45, 0.7, 0.9}) {
            for (double theta : {0.0, pi / 6, -pi / 4, 2.0}) {
                const FamilyParams p(a, std::polar(r, theta));
                for (std::size_t n = 0; n <= 12; ++n) {
                    const Poly e = u_explicit(n, p), rec = u_recurrence(n, p);
                    scaled = std::max(scaled, max_scaled_diff(e, rec));
                    absolute = std::max(absolute, max_abs_diff(e, rec));
                }
            }
        }
    }
    Gen gen(4);
    double rodrigues = 0.0;
    for (const auto& [a, q] : test::gram_sets()) {
        const FamilyParams p(a, q);
        for (int i = 0; i < 10; ++i) {
            const Complex x = gen.annulus(0.15, 0.95);
            for (std::size_t n = 1; n <= 8; ++n)
                rodrigues = std::max(rodrigues, std::abs(rodrigues_eval(n, p, x) - u_eval(n, p, x)));
        }
    }
    return {scaled < 1e-10 && rodrigues < 1e-7,
            "explicit vs recurrence n<=12: max |d|/max(1,|c|) " + sci(scaled) + " (tol 1e-10; raw abs " +
                sci(absolute) + "); Rodrigues vs recurrence n<=8 at 10 random points x 3 sets: max abs " +
                sci(rodrigues) + " (tol 1e-7)"};
}

Outcome summation_by_parts()
{
    Gen gen(5);
    double worst = 0.0, printed_best = std::numeric_limits<double>::infinity();
    int trials = 0;
    for (Complex q : {Complex(0.5), std::polar(0.8, pi / 6), std::polar(0.3, -2.0), std::polar(0.95, 1.0)}) {
        for (std::size_t M : {0, 5, 20, 50}) {
            for (int i = 0; i < 5; ++i) {
                const Poly f = gen.poly(gen.index(0, 5)), g = gen.poly(gen.index(1, 5));
                const SbpReport r =
                    sbp_identity_check([&](Complex x) { return f(x); }, [&](Complex x) { return g(x); }, q, M);
                worst = std::max(worst, r.residual_corrected);
                printed_best = std::min(printed_best, r.residual_printed);
                ++trials;
            }
        }
    }
    return {worst < 1e-12, std::to_string(trials) + " random polynomial pairs (deg<=5, M<=50): corrected-sign max residual " +
                               sci(worst) + " (tol 1e-12); printed-sign variant smallest residual " +
                               sci(printed_best) + " (does not balance; documented finding)"};
}

Outcome connection()
{
    struct Triple
    {
        Complex a, b, p;
    };
    const Triple triples[] = {
        {Complex(1.0, 1.0), -2.0, 0.5},
        {Complex(0.0, 2.0), 0.5, std::polar(0.6, pi / 8)},
        {Complex(-0.5, 0.3), Complex(1.5, -1.0), std::polar(0.7, -1.0)},
        {3.0, Complex(0.0, -0.8), std::polar(0.4, 2.5)},
        {Complex(0.2, 0.9), Complex(-1.2, -0.4), std::polar(0.8, 0.2)},
    };
    double scaled = 0.0, absolute = 0.0, transit = 0.0;
    for (std::size_t i = 0; i < 5; ++i) {
        const Triple& t = triples[i];
        const Complex c = triples[(i + 1) % 5].b;
        for (std::size_t n = 0; n <= 8; ++n) {
            const ConnectionResidual r = verify_connection(n, t.a, t.b, t.p);
            scaled = std::max(scaled, r.scaled);
            absolute = std::max(absolute, r.absolute);
            transit = std::max(transit, connection_transitivity(n, t.a, t.b, c, t.p));
        }
    }
    return {scaled < 1e-9 && transit < 1e-9,
            "5 triples, n<=8: reconstruction max |d|/max(1,|c|) " + sci(scaled) + " (raw abs " + sci(absolute) +
                "), transitivity " + sci(transit) + " (tol 1e-9)"};
}

Outcome generating_functions()
{
    Gen gen(7);
    double classic = 0.0, general = 0.0;
    for (int i = 0; i < 30; ++i) {
        const Complex p = gen.annulus(0.2, 0.8);
        const Complex t = gen.annulus(0.0, 0.2);
        Complex a, b;
        do
            a = gen.annulus(0.2, 3.0);
        while (std::abs(a - 1.0) < 0.1 || std::abs(a * t) >= 1.0);
        do
            b = gen.annulus(0.2, 3.0);
        while (std::abs(b - 1.0) < 0.1);
        const Complex x = gen.box(1.0);
        classic = std::max(classic, genfun_classic_check(x, t, a, p, 40).residual());
        general = std::max(general, genfun_generalized_check(x, t, a, b, p, 40).residual());
    }
    classic = std::max(classic, genfun_classic_check(0.3, 0.2, -1.0, 0.5, 40).residual());
    general = std::max(general, genfun_generalized_check(0.5, 0.15, Complex(1.0, 1.0), -2.0, 0.5, 40).residual());

    double reduction = 0.0, other = std::numeric_limits<double>::infinity();
    bool consistent = true;
    for (int i = 0; i < 10; ++i) {
        Complex a;
        do
            a = gen.annulus(0.2, 3.0);
        while (std::abs(a - 1.0) < 0.1);
        const ReductionReport r = genfun_reduction_check(gen.box(1.0), gen.annulus(0.01, 0.2), a, gen.annulus(0.2, 0.8));
        consistent = consistent && r.matched == GenfunExponent::KTimesKMinus1;
        reduction = std::max(reduction, r.residual_k_times_k_minus_1);
        other = std::min(other, r.residual_binomial);
    }
    return {classic < 1e-9 && general < 1e-8 && reduction < 1e-10 && consistent,
            "K=40, |t|<=0.2: classical max " + sci(classic) + " (tol 1e-9), generalized max " + sci(general) +
                " (tol 1e-8); b=a reduction max " + sci(reduction) + " (tol 1e-10), exponent k(k-1) recorded" +
                " (binom(k,2) min residual " + sci(other) + ")"};
}

Outcome integral_identity()
{
    struct Point
    {
        std::size_t m;
        Complex t, a, b, p;
    };
    std::vector<Point> grid;
    for (std::size_t m : {1, 2, 3})
        for (Complex t : {Complex(0.1), Complex(0.0, 0.15)}) {
            grid.push_back({m, t, -2.0, Complex(1.0, 1.0), 0.5});
            grid.push_back({m, t, Complex(0.0, 0.5), -1.5, std::polar(0.6, pi / 7)});
        }

    std::map<std::string, std::pair<double, double>> range; // label -> (min, max) residual
    double discrete = 0.0;
    for (const Point& g : grid) {
        const Thm33Report r = thm33_check(g.m, g.t, g.a, g.b, g.p);
        discrete = std::max(discrete, r.discrete_residual);
        for (const auto& v : r.variants) {
            auto [it, fresh] = range.try_emplace(v.label, v.residual, v.residual);
            if (!fresh) {
                it->second.first = std::min(it->second.first, v.residual);
                it->second.second = std::max(it->second.second, v.residual);
            }
        }
    }
    int matching = 0;
    bool any_near = false;
    std::string matched, table;
    for (const auto& [label, mm] : range) {
        if (mm.second < 1e-6) {
            ++matching;
            matched = label;
        }
        any_near = any_near || mm.first < 1e-3;
        table += " [" + label + ": " + sci(mm.first) + ".." + sci(mm.second) + "]";
    }
    if (matching == 1)
        return {true, std::to_string(grid.size()) + " grid points: unique match " + matched + ";" + table};
    const bool documented = !any_near;
    return {documented, std::to_string(grid.size()) + " grid points, m=1..3: " +
                            (documented ? "no reading below 1e-3, all residuals documented:"
                                        : "ambiguous or near-miss readings:") +
                            table + "; discrete lattice reading max residual " + sci(discrete)};
}

Outcome zeros_spirals()
{
    const Complex a(1.0, 1.0), q = std::polar(0.8, pi / 6);
    const auto t0 = std::chrono::steady_clock::now();
    const ZeroSet set = find_zeros(30, a, q);
    const double dt = seconds_since(t0);

    bool in_window = true;
    Complex sum(0.0);
    for (Complex z : set.zeros) {
        in_window = in_window && z.real() >= -0.8 && z.real() <= 1.2 && z.imag() >= -0.4 && z.imag() <= 1.2;
        sum += z;
    }
    const double trace = std::abs(sum - (a + 1.0) * (1.0 - ipow(q, 30)) / (1.0 - q));

    // Follow each spiral q^k, a q^k while a zero sits within 5% of the lattice point.
    std::vector<bool> tracked(set.zeros.size(), false);
    bool decreasing = true;
    std::size_t counts[2] = {0, 0};
    for (int branch = 0; branch < 2; ++branch) {
        Complex point = branch == 0 ? Complex(1.0) : a;
        double previous = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < set.zeros.size(); ++k, point *= q) {
            std::size_t best = 0;
            for (std::size_t i = 1; i < set.zeros.size(); ++i)
                if (std::abs(set.zeros[i] - point) < std::abs(set.zeros[best] - point))
                    best = i;
            if (std::abs(set.zeros[best] - point) > 0.05 * std::abs(point) || tracked[best])
                break;
            tracked[best] = true;
            const double modulus = std::abs(set.zeros[best]);
            decreasing = decreasing && modulus < previous;
            previous = modulus;
            ++counts[branch];
        }
    }
    const double inner = std::pow(std::abs(q), 10);
    bool inner_cluster = true;
    for (std::size_t i = 0; i < set.zeros.size(); ++i)
        if (!tracked[i])
            inner_cluster = inner_cluster && std::abs(set.zeros[i]) < inner;

    const bool pass = set.max_residual() < 1e-8 && in_window && decreasing && counts[0] >= 10 && counts[1] >= 10 &&
                      inner_cluster && trace < 1e-10 && dt < 1.0;
    return {pass, "N=30: max scaled residual " + sci(set.max_residual()) + " (tol 1e-8), window " +
                      (in_window ? "ok" : "VIOLATED") + ", spiral tracking S1=" + std::to_string(counts[0]) +
                      " S2=" + std::to_string(counts[1]) + " zeros with decreasing moduli " +
                      (decreasing ? "ok" : "VIOLATED") + ", rest inside |z|<|q|^10 " +
                      (inner_cluster ? "ok" : "VIOLATED") + ", trace " + sci(trace) + " (tol 1e-10), " + sci(dt) +
                      " s (limit 1 s)"};
}

Outcome root_of_unity()
{
    bool pass = true;
    double worst = 0.0;
    std::string nulls;
    for (std::size_t N : {3, 4, 5}) {
        const Complex q = std::polar(1.0, 2 * pi / static_cast<double>(N));
        for (std::size_t level : {1, 2}) {
            const RootOfUnityReport r = rootofunity_gram(N, 2.0, q, level);
            pass = pass && r.gram.max_offdiag_rel < 1e-8;
            worst = std::max(worst, r.gram.max_offdiag_rel);
            if (level == 2)
                nulls += " N=" + std::to_string(N) + ":" + std::to_string(r.null_diagonal.size());
        }
    }
    return {pass, "N in {3,4,5}, a=2, levels 1 and 2: max offdiag_rel " + sci(worst) +
                      " (tol 1e-8, Gauss node weights); level-2 null diagonal entries" + nulls};
}

Outcome classical()
{
    bool zeros_ok = true;
    for (std::size_t N = 1; N <= 15; ++N) {
        const ZeroSet set = find_zeros(N, -1.0, 0.5);
        std::vector<double> xs;
        for (Complex z : set.zeros) {
            zeros_ok = zeros_ok && std::abs(z.imag()) < 1e-8 && z.real() >= -1.0 - 1e-8 && z.real() <= 1.0 + 1e-8;
            xs.push_back(z.real());
        }
        std::sort(xs.begin(), xs.end());
        for (std::size_t i = 1; i < xs.size(); ++i)
            zeros_ok = zeros_ok && xs[i] - xs[i - 1] > 1e-8;
    }
    const GramReport r = gram(10, -1.0, 0.5);
    const bool pass = zeros_ok && r.max_offdiag_rel < 1e-10 && r.max_diag_rel_err < 1e-10;
    return {pass, std::string("a=-1, q=0.5: zeros N<=15 real, simple, in [a,1] ") + (zeros_ok ? "ok" : "VIOLATED") +
                      "; Gram nmax=10 offdiag_rel " + sci(r.max_offdiag_rel) + ", diag_rel_err " +
                      sci(r.max_diag_rel_err) + " (tol 1e-10)"};
}

} // namespace

int main()
{
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"complex orthogonality", complex_orthogonality},
        {"ASC II orthogonality", asc2_orthogonality},
        {"corollary sum identity", corollary},
        {"route equivalence", route_equivalence},
        {"summation by parts", summation_by_parts},
        {"connection relation", connection},
        {"generating functions", generating_functions},
        {"integral identity readings", integral_identity},
        {"zeros of U_30", zeros_spirals},
        {"root-of-unity forms", root_of_unity},
        {"classical sanity", classical},
    };
    int failures = 0;
    int index = 1;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        failures += !o.pass;
        std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", index++, name, o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", 11 - failures, std::size(criteria));
    return failures == 0 ? 0 : 1;
}
