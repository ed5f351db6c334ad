#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "binform/rational.hpp"
#include "binform/tpoly.hpp"

namespace binform {

// Exponent multiset {2, 4, ..., 2n} of the factored product
// prod_{i=1..n} (1 - t^(2i)); empty for n = 0.
std::vector<int> qpochhammer_exponents(int n);

// One summand of the residue-sum construction of the series for degree d,
// indexed by 0 <= k < d/2:
//
//   transport_(d-2k) of
//     (-1)^k t^(k(k+1)) (1 - t^2) / (prod(1-t^(2i), i<=k) prod(1-t^(2i), i<=d-k))
//   divided by (1 - z t^(d-2k)).
//
// The (1 - t^2) in the numerator is carried as the removal of one exponent-2
// factor from the denominator multiset, so the numerator stays monomial.
struct ResidueTerm {
    int k = 0;
    int sign = 1;                       // (-1)^k
    int tshift = 0;                     // k(k+1)
    TPoly numerator;                    // sign * t^tshift
    std::vector<int> denom_exponents;   // sorted, one 2 removed
    int order = 0;                      // d - 2k, the transport index
    BinomFactor cov_factor{1, 1, 1};    // (1 - z t^(d-2k))
};

// Throws std::invalid_argument unless d >= 1 and 0 <= k < d/2.
ResidueTerm residue_term(int d, int k);

// Sum of factored rational functions over the least common denominator of
// their factor multisets. The result is not normalized.
FactoredRational sum_over_common_denominator(const std::vector<FactoredRational>& terms);

// The bivariate series for the covariant algebra of the degree-d binary
// form, as a normalized factored rational function. Deterministic: equal
// inputs give structurally equal results.
FactoredRational poincare_series(int d);

struct Mismatch {
    int i = 0;
    int j = 0;               // -1 for whole-row checks
    Int expected;
    Int got;
    std::string context;     // empty for plain coefficient mismatches
};

struct VerificationReport {
    bool passed = true;
    long cells_checked = 0;
    std::vector<Mismatch> mismatches;
};

// Compares the truncated expansion of f against the dimension table of
// degree d on the box i <= imax, j <= jmax.
VerificationReport verify_expansion(const FactoredRational& f, int d, int imax, int jmax);

// verify_expansion on a freshly computed series, plus the internal
// consistency checks dim_cov(d, i, 0) == dim_inv(d, i) and, for rows whose
// full order range fits in the box, sum_j dim_cov(d, i, j) == dim_cov_graded(d, i).
VerificationReport verify_dimensions(int d, int imax, int jmax);

// --- series cache -----------------------------------------------------
//
// One json file per degree. The file is the interchange schema of
// render(..., json) plus a small header: d, generator tag and the box the
// series was verified on when written. Loading re-verifies a fixed corner
// (imax = 4, jmax = 8) before trusting the file.

std::string cache_filename(int d);  // "poincare_d<D>.json"

void write_cache_file(const std::filesystem::path& path, const FactoredRational& f,
                      int d, int verified_imax, int verified_jmax);

// nullopt when the file is missing, malformed, has the wrong header, or
// fails the corner re-verification.
std::optional<FactoredRational> load_cache_file(const std::filesystem::path& path, int d);

}  // namespace binform
