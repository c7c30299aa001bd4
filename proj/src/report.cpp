#include "ascq/report.hpp"

#include <cmath>

namespace ascq
{

namespace
{

Json real_json(double x)
{
    if (!std::isfinite(x))
        return nullptr;
    return x;
}

} // namespace

Json to_json(Complex z)
{
    return Json{{"re", real_json(z.real())}, {"im", real_json(z.imag())}};
}

Json gram_json(const GramReport& report)
{
    Json entries = Json::array();
    const std::size_t n = report.entries.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Json entry{{"n", i}, {"m", j}, {"value", to_json(report.entries(i, j))}};
            if (i == j && i < report.diag_expected.size()) {
                const Complex expected = report.diag_expected[i];
                entry["expected"] = to_json(expected);
                entry["rel_err"] = real_json(std::abs(report.entries(i, i) - expected) / std::abs(expected));
            }
            entries.push_back(std::move(entry));
        }
    }
    return Json{
        {"params", {{"a", to_json(report.a)}, {"q", to_json(report.q)}, {"nmax", report.nmax}, {"M", report.M}}},
        {"max_offdiag_rel", real_json(report.max_offdiag_rel)},
        {"max_diag_rel_err", real_json(report.max_diag_rel_err)},
        {"max_asymmetry", real_json(report.max_asymmetry)},
        {"per_entry", std::move(entries)},
        {"verdict", verdict(report.passed())},
        {"tolerance", report.tolerance},
    };
}

Json rootofunity_json(const RootOfUnityReport& report, Complex a, Complex q)
{
    Json nodes = Json::array();
    for (Complex z : report.nodes)
        nodes.push_back(to_json(z));
    Json gram = gram_json(report.gram);
    gram["params"] = Json{{"a", to_json(a)}, {"q", to_json(q)}, {"N", report.N}, {"level", report.level}};
    gram["verdict"] = verdict(report.gram.max_offdiag_rel < report.gram.tolerance);
    gram["weights"] = to_string(report.weights);
    gram["scale"] = to_json(report.scale);
    gram["nodes"] = std::move(nodes);
    gram["null_diagonal"] = report.null_diagonal;
    return gram;
}

Json corollary_json(const CorollarySum& sum, Complex a, Complex q, std::size_t K, double tolerance)
{
    const double residual = std::abs(sum.lhs - sum.rhs);
    return Json{
        {"params", {{"a", to_json(a)}, {"q", to_json(q)}, {"K", K}}},
        {"lhs", to_json(sum.lhs)},
        {"rhs", to_json(sum.rhs)},
        {"residual", real_json(residual)},
        {"verdict", verdict(residual < tolerance)},
        {"tolerance", tolerance},
    };
}

Json sbp_json(const SbpReport& report, Complex q, std::size_t M, double tolerance)
{
    return Json{
        {"params", {{"q", to_json(q)}, {"M", M}}},
        {"lhs", to_json(report.lhs)},
        {"boundary", to_json(report.boundary)},
        {"inner_sum", to_json(report.inner_sum)},
        {"rhs_corrected", to_json(report.rhs_corrected)},
        {"rhs_as_printed", to_json(report.rhs_as_printed)},
        {"residual_corrected", real_json(report.residual_corrected)},
        {"residual_printed", real_json(report.residual_printed)},
        {"matched", to_string(report.matched)},
        {"verdict", verdict(report.residual_corrected < tolerance)},
        {"tolerance", tolerance},
    };
}

Json series_json(const SeriesCheck& check, double tolerance)
{
    const double residual = check.residual();
    return Json{
        {"lhs", to_json(check.lhs)},
        {"rhs", to_json(check.rhs)},
        {"residual", real_json(residual)},
        {"terms", check.term_magnitudes.size()},
        {"verdict", verdict(residual < tolerance)},
        {"tolerance", tolerance},
    };
}

Json reduction_json(const ReductionReport& report, double tolerance)
{
    return Json{
        {"lhs", to_json(report.lhs)},
        {"rhs_variants",
         Json::array({
             {{"exponent", to_string(GenfunExponent::KTimesKMinus1)},
              {"value", to_json(report.rhs_k_times_k_minus_1)},
              {"residual", real_json(report.residual_k_times_k_minus_1)}},
             {{"exponent", to_string(GenfunExponent::Binomial)},
              {"value", to_json(report.rhs_binomial)},
              {"residual", real_json(report.residual_binomial)}},
         })},
        {"collapse_residual", real_json(report.collapse_residual)},
        {"matched_exponent", report.matched ? Json(to_string(*report.matched)) : Json(nullptr)},
        {"verdict", verdict(report.matched.has_value())},
        {"tolerance", tolerance},
    };
}

Json thm33_json(const Thm33Report& report)
{
    Json variants = Json::array();
    for (const auto& v : report.variants) {
        variants.push_back(Json{
            {"base", v.label},
            {"lhs", to_json(v.lhs)},
            {"value", v.value ? to_json(*v.value) : Json(nullptr)},
            {"residual", real_json(v.residual)},
            {"note", v.value ? "" : "series diverges for |base| > 1"},
        });
    }
    return Json{
        {"params",
         {{"m", report.m},
          {"t", to_json(report.t)},
          {"a", to_json(report.a)},
          {"b", to_json(report.b)},
          {"p", to_json(report.p)},
          {"M", report.M}}},
        {"lhs", {{"weight_b", to_json(report.normalization * report.lhs_raw_b)},
                 {"weight_a", to_json(report.normalization * report.lhs_raw_a)}}},
        {"normalization", to_json(report.normalization)},
        {"rhs_variants", std::move(variants)},
        {"matched_variant", report.matched_variant ? Json(*report.matched_variant) : Json(nullptr)},
        {"tolerance", report.tolerance},
        {"discrete_reading",
         {{"lhs", to_json(report.discrete_lhs)},
          {"rhs", to_json(report.discrete_rhs)},
          {"residual", real_json(report.discrete_residual)},
          {"term_max", real_json(report.discrete_term_max)}}},
    };
}

Json zeros_json(const ZeroSet& set)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < set.zeros.size(); ++i)
        rows.push_back(Json{{"index", i},
                            {"z", to_json(set.zeros[i])},
                            {"residual", real_json(set.residuals[i])},
                            {"multiplicity", set.multiplicity.empty() ? 1 : set.multiplicity[i]}});
    return Json{{"zeros", std::move(rows)}, {"max_residual", real_json(set.max_residual())}};
}

Json error_json(const Error& error)
{
    return Json{{"error", {{"kind", to_string(error.kind())}, {"message", error.what()}}}};
}

} // namespace ascq
