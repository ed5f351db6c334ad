#include "binform/series.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "binform/dims.hpp"
#include "binform/psi.hpp"

namespace binform {

std::vector<int> qpochhammer_exponents(int n) {
    if (n < 0) throw std::invalid_argument("qpochhammer_exponents: n must be >= 0");
    std::vector<int> e;
    e.reserve(n);
    for (int i = 1; i <= n; ++i) e.push_back(2 * i);
    return e;
}

ResidueTerm residue_term(int d, int k) {
    if (d < 1) throw std::invalid_argument("residue_term: d must be >= 1");
    if (k < 0 || 2 * k >= d)
        throw std::invalid_argument("residue_term: k must satisfy 0 <= k < d/2");
    ResidueTerm rt;
    rt.k = k;
    rt.sign = (k % 2 == 0) ? 1 : -1;
    rt.tshift = k * (k + 1);
    rt.numerator = TPoly::monomial(rt.tshift, Int(rt.sign));
    std::vector<int> lo = qpochhammer_exponents(k);
    std::vector<int> hi = qpochhammer_exponents(d - k);
    std::merge(lo.begin(), lo.end(), hi.begin(), hi.end(),
               std::back_inserter(rt.denom_exponents));
    // The (1 - t^2) prefactor of the summand cancels one exponent-2 factor;
    // d - k >= 1 guarantees one is present.
    rt.denom_exponents.erase(
        std::find(rt.denom_exponents.begin(), rt.denom_exponents.end(), 2));
    rt.order = d - 2 * k;
    rt.cov_factor = BinomFactor(1, rt.order, 1);
    return rt;
}

FactoredRational sum_over_common_denominator(const std::vector<FactoredRational>& terms) {
    if (terms.empty()) return FactoredRational(ZTPoly::zero());
    std::map<std::pair<int, int>, int> lcd;
    for (const auto& t : terms)
        for (const auto& f : t.denominator())
            lcd[{f.a, f.b}] = std::max(lcd[{f.a, f.b}], f.m);
    ZTPoly num = ZTPoly::zero();
    for (const auto& t : terms) {
        ZTPoly scaled = t.numerator();
        for (const auto& [key, m] : lcd) {
            int have = 0;
            for (const auto& f : t.denominator())
                if (f.a == key.first && f.b == key.second) have = f.m;
            for (int i = have; i < m; ++i) scaled = scaled.mul_binomial(key.first, key.second);
        }
        num = num + scaled;
    }
    std::vector<BinomFactor> den;
    den.reserve(lcd.size());
    for (const auto& [key, m] : lcd) den.emplace_back(key.first, key.second, m);
    return FactoredRational(std::move(num), std::move(den));
}

FactoredRational poincare_series(int d) {
    if (d < 1) throw std::invalid_argument("poincare_series: d must be >= 1");
    std::vector<FactoredRational> terms;
    for (int k = 0; 2 * k < d; ++k) {
        ResidueTerm rt = residue_term(d, k);
        FactoredRational fr =
            psi_rational(rt.order, rt.numerator, rt.denom_exponents).with_factor(rt.cov_factor);
        terms.push_back(std::move(fr));
    }
    return normalize(sum_over_common_denominator(terms));
}

namespace {

void compare_grid(const FactoredRational& f, const DimTable& table, VerificationReport& rep) {
    ZTPoly expansion = expand_truncated(f, table.imax, table.jmax);
    for (int i = 0; i <= table.imax; ++i) {
        for (int j = 0; j <= table.jmax; ++j) {
            ++rep.cells_checked;
            Int got = expansion.coeff(i, j);
            const Int& expected = table.at(i, j);
            if (got != expected)
                rep.mismatches.push_back({i, j, expected, std::move(got), ""});
        }
    }
    rep.passed = rep.mismatches.empty();
}

}  // namespace

VerificationReport verify_expansion(const FactoredRational& f, int d, int imax, int jmax) {
    VerificationReport rep;
    compare_grid(f, dim_table(d, imax, jmax), rep);
    return rep;
}

VerificationReport verify_dimensions(int d, int imax, int jmax) {
    VerificationReport rep;
    DimTable table = dim_table(d, imax, jmax);
    compare_grid(poincare_series(d), table, rep);
    for (int i = 0; i <= imax; ++i) {
        ++rep.cells_checked;
        Int expected = dim_inv(d, i);
        const Int& got = table.at(i, 0);
        if (got != expected)
            rep.mismatches.push_back({i, 0, std::move(expected), got, "invariant"});
    }
    for (int i = 0; i <= imax && static_cast<long>(d) * i <= jmax; ++i) {
        ++rep.cells_checked;
        Int expected = dim_cov_graded(d, i);
        Int got = 0;
        for (int j = 0; j <= jmax; ++j) got += table.at(i, j);
        if (got != expected)
            rep.mismatches.push_back({i, -1, std::move(expected), std::move(got), "row-sum"});
    }
    rep.passed = rep.mismatches.empty();
    return rep;
}

std::string cache_filename(int d) { return "poincare_d" + std::to_string(d) + ".json"; }

namespace {

constexpr const char* kGeneratorTag = "theorem3";
constexpr int kCornerImax = 4;
constexpr int kCornerJmax = 8;

}  // namespace

void write_cache_file(const std::filesystem::path& path, const FactoredRational& f,
                      int d, int verified_imax, int verified_jmax) {
    nlohmann::ordered_json doc;
    doc["d"] = d;
    doc["generator"] = kGeneratorTag;
    doc["verified_to"] = {{"imax", verified_imax}, {"jmax", verified_jmax}};
    nlohmann::ordered_json series = nlohmann::ordered_json::parse(render(f, RenderFormat::json));
    doc["numerator"] = series["numerator"];
    doc["denominator"] = series["denominator"];
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_cache_file: cannot open " + path.string());
    out << doc.dump() << "\n";
    if (!out) throw std::runtime_error("write_cache_file: write failed for " + path.string());
}

std::optional<FactoredRational> load_cache_file(const std::filesystem::path& path, int d) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    try {
        nlohmann::json header = nlohmann::json::parse(text);
        if (!header.is_object()) return std::nullopt;
        if (!header.contains("d") || header["d"].get<int>() != d) return std::nullopt;
        if (!header.contains("generator") ||
            header["generator"].get<std::string>() != kGeneratorTag)
            return std::nullopt;
        FactoredRational f = parse_json(text);
        VerificationReport rep = verify_expansion(f, d, kCornerImax, kCornerJmax);
        if (!rep.passed) return std::nullopt;
        return f;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace binform
