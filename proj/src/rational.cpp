#include "binform/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace binform {

BinomFactor::BinomFactor(int a_, int b_, int m_) : a(a_), b(b_), m(m_) {
    if (a < 0 || b < 0 || (a == 0 && b == 0))
        throw std::invalid_argument("BinomFactor: exponent pair must be nonnegative and not (0,0)");
    if (m < 1) throw std::invalid_argument("BinomFactor: multiplicity must be >= 1");
}

bool operator==(const BinomFactor& x, const BinomFactor& y) {
    return x.a == y.a && x.b == y.b && x.m == y.m;
}

bool operator<(const BinomFactor& x, const BinomFactor& y) {
    return std::pair{x.a, x.b} < std::pair{y.a, y.b};
}

FactoredRational::FactoredRational(ZTPoly num, std::vector<BinomFactor> den)
    : num_(std::move(num)) {
    if (num_.is_zero()) return;  // canonical zero has an empty denominator
    std::sort(den.begin(), den.end());
    for (auto& f : den) {
        if (!den_.empty() && den_.back().a == f.a && den_.back().b == f.b)
            den_.back().m += f.m;
        else
            den_.push_back(f);
    }
}

FactoredRational FactoredRational::with_factor(const BinomFactor& f) const {
    std::vector<BinomFactor> den = den_;
    den.push_back(f);
    return FactoredRational(num_, std::move(den));
}

bool operator==(const FactoredRational& x, const FactoredRational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
}

ZTPoly denominator_poly(const FactoredRational& f) {
    ZTPoly d = ZTPoly::one();
    for (const auto& fac : f.denominator())
        for (int i = 0; i < fac.m; ++i) d = d.mul_binomial(fac.a, fac.b);
    return d;
}

std::optional<ZTPoly> exact_div_factor(const ZTPoly& n, const BinomFactor& f) {
    return exact_div_binomial(n, f.a, f.b);
}

namespace {

// Largest-first divisors r >= 2 of the gcd of the exponent pair (gcd(x, 0)
// is x): the candidate lowerings (1 - u^r) -> (1 - u) for u = z^(a/r) t^(b/r).
std::vector<int> lowering_divisors(int a, int b) {
    int g = b == 0 ? a : (a == 0 ? b : std::gcd(a, b));
    std::vector<int> rs;
    for (int r = g; r >= 2; --r)
        if (g % r == 0) rs.push_back(r);
    return rs;
}

}  // namespace

FactoredRational normalize(const FactoredRational& f) {
    ZTPoly num = f.numerator();
    if (num.is_zero()) return FactoredRational(ZTPoly::zero());
    std::map<std::pair<int, int>, int> den;
    for (const auto& fac : f.denominator()) den[{fac.a, fac.b}] += fac.m;

    // Each successful move strictly shrinks the numerator degree or removes
    // a factor, so the loop terminates.
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::pair<int, int>> keys;
        keys.reserve(den.size());
        for (const auto& [k, m] : den) keys.push_back(k);
        for (const auto& key : keys) {
            auto it = den.find(key);
            if (it == den.end()) continue;
            const auto [a, b] = key;
            // Whole-factor cancellation while it goes through.
            bool erased = false;
            while (true) {
                auto q = exact_div_binomial(num, a, b);
                if (!q) break;
                num = std::move(*q);
                changed = true;
                if (--it->second == 0) {
                    den.erase(it);
                    erased = true;
                    break;
                }
            }
            if (erased) continue;
            // Lowering: (1 - u^r) = (1 - u)(1 + u + ... + u^(r-1)). When the
            // cofactor divides the numerator, replace one copy of the factor
            // by (1 - u). The cofactor test is done without expanding it:
            // num * (1 - u) must be divisible by (1 - u^r).
            for (int r : lowering_divisors(a, b)) {
                int a2 = a / r, b2 = b / r;
                auto q = exact_div_binomial(num.mul_binomial(a2, b2), a, b);
                if (!q) continue;
                num = std::move(*q);
                if (--it->second == 0) den.erase(it);
                den[{a2, b2}] += 1;
                changed = true;
                break;
            }
        }
    }

    std::vector<BinomFactor> out;
    out.reserve(den.size());
    for (const auto& [k, m] : den) out.emplace_back(k.first, k.second, m);
    return FactoredRational(std::move(num), std::move(out));
}

bool equal_rational(const FactoredRational& x, const FactoredRational& y) {
    return x.numerator() * denominator_poly(y) == y.numerator() * denominator_poly(x);
}

ZTPoly expand_truncated(const FactoredRational& f, int imax, int jmax) {
    if (imax < 0 || jmax < 0)
        throw std::invalid_argument("expand_truncated: box bounds must be nonnegative");
    ZTPoly p = f.numerator().truncated(imax, jmax);
    for (const auto& fac : f.denominator())
        for (int i = 0; i < fac.m; ++i)
            p = mul_truncated_geometric(p, fac.a, fac.b, imax, jmax);
    return p;
}

namespace {

std::string factor_text(const BinomFactor& f) {
    std::string s = "(1-" + ZTPoly::monomial(f.a, f.b).to_text() + ")";
    if (f.m > 1) s += "^" + std::to_string(f.m);
    return s;
}

std::string factor_latex(const BinomFactor& f) {
    std::string s = "(1-" + ZTPoly::monomial(f.a, f.b).to_latex() + ")";
    if (f.m > 1) s += "^{" + std::to_string(f.m) + "}";
    return s;
}

std::string render_text(const FactoredRational& f) {
    const ZTPoly& num = f.numerator();
    if (f.denominator().empty()) return num.to_text();
    std::string ns = num.to_text();
    if (num.size() > 1) ns = "(" + ns + ")";
    std::string ds;
    if (f.denominator().size() == 1 && f.denominator()[0].m == 1) {
        ds = factor_text(f.denominator()[0]);
    } else {
        ds = "(";
        for (std::size_t i = 0; i < f.denominator().size(); ++i) {
            if (i) ds += "*";
            ds += factor_text(f.denominator()[i]);
        }
        ds += ")";
    }
    return ns + "/" + ds;
}

std::string render_latex(const FactoredRational& f) {
    const ZTPoly& num = f.numerator();
    if (f.denominator().empty()) return num.to_latex();
    std::string ds;
    for (const auto& fac : f.denominator()) ds += factor_latex(fac);
    return "\\frac{" + num.to_latex() + "}{" + ds + "}";
}

std::string render_json(const FactoredRational& f) {
    nlohmann::ordered_json j;
    j["numerator"] = nlohmann::ordered_json::array();
    for (const auto& t : f.numerator().terms())
        j["numerator"].push_back({{"z", t.z}, {"t", t.t}, {"c", t.c.get_str()}});
    j["denominator"] = nlohmann::ordered_json::array();
    for (const auto& fac : f.denominator())
        j["denominator"].push_back({{"z", fac.a}, {"t", fac.b}, {"m", fac.m}});
    return j.dump();
}

}  // namespace

std::string render(const FactoredRational& f, RenderFormat format) {
    switch (format) {
        case RenderFormat::text:
            return render_text(f);
        case RenderFormat::latex:
            return render_latex(f);
        case RenderFormat::json:
            return render_json(f);
    }
    throw std::logic_error("render: unknown format");
}

FactoredRational parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("parse_json: ") + e.what());
    }
    try {
        if (!j.is_object() || !j.contains("numerator") || !j.contains("denominator"))
            throw std::runtime_error("missing numerator/denominator");
        std::vector<ZTPoly::Term> terms;
        for (const auto& item : j.at("numerator")) {
            Int c;
            try {
                c = Int(item.at("c").get<std::string>());
            } catch (const std::invalid_argument&) {
                throw std::runtime_error("bad coefficient string");
            }
            terms.push_back({item.at("z").get<int>(), item.at("t").get<int>(), std::move(c)});
        }
        std::vector<BinomFactor> den;
        for (const auto& item : j.at("denominator"))
            den.emplace_back(item.at("z").get<int>(), item.at("t").get<int>(),
                             item.at("m").get<int>());
        return FactoredRational(ZTPoly::from_terms(std::move(terms)), std::move(den));
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("parse_json: ") + e.what());
    }
}

}  // namespace binform
