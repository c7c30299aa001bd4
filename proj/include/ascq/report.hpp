#pragma once

#include "ascq/core.hpp"
#include "ascq/genfun.hpp"
#include "ascq/orthocheck.hpp"
#include "ascq/zeros.hpp"

#include "json.hpp"

namespace ascq
{

using Json = nlohmann::ordered_json;

/// {"re": .., "im": ..}; non-finite parts become null.
Json to_json(Complex z);

/// {params: {a, q, nmax, M}, max_offdiag_rel, max_diag_rel_err, per_entry: [...], verdict, tolerance}
Json gram_json(const GramReport& report);

Json rootofunity_json(const RootOfUnityReport& report, Complex a, Complex q);
Json corollary_json(const CorollarySum& sum, Complex a, Complex q, std::size_t K, double tolerance);
Json sbp_json(const SbpReport& report, Complex q, std::size_t M, double tolerance);
Json series_json(const SeriesCheck& check, double tolerance);
Json reduction_json(const ReductionReport& report, double tolerance);

/// {params, lhs, rhs_variants: [{base, value, residual}], matched_variant, ...}
Json thm33_json(const Thm33Report& report);

Json zeros_json(const ZeroSet& set);

/// {"error": {"kind": .., "message": ..}}
Json error_json(const Error& error);

inline const char* verdict(bool pass) noexcept { return pass ? "pass" : "fail"; }

} // namespace ascq
