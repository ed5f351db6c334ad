#include "binform/tpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace binform {

TPoly TPoly::monomial(int exp, Int coeff) {
    if (exp < 0) throw std::invalid_argument("TPoly::monomial: negative exponent");
    TPoly p;
    if (coeff != 0) p.terms_.push_back({exp, std::move(coeff)});
    return p;
}

TPoly TPoly::one_minus_tk(int k) {
    if (k < 0) throw std::invalid_argument("TPoly::one_minus_tk: negative exponent");
    return from_terms({{0, Int(1)}, {k, Int(-1)}});
}

TPoly TPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return x.exp < y.exp; });
    TPoly p;
    for (auto& t : terms) {
        if (t.exp < 0) throw std::invalid_argument("TPoly: negative exponent");
        if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff == 0) p.terms_.pop_back();
        } else if (t.coeff != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

Int TPoly::coeff(int exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, int e) { return t.exp < e; });
    if (it != terms_.end() && it->exp == exp) return it->coeff;
    return Int(0);
}

TPoly TPoly::operator-() const {
    TPoly p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

TPoly TPoly::scaled(const Int& c) const {
    if (c == 0) return zero();
    TPoly p = *this;
    for (auto& t : p.terms_) t.coeff *= c;
    return p;
}

TPoly TPoly::shifted(int dexp) const {
    TPoly p = *this;
    for (auto& t : p.terms_) {
        t.exp += dexp;
        if (t.exp < 0) throw std::invalid_argument("TPoly::shifted: negative exponent");
    }
    return p;
}

TPoly TPoly::substituted_power(int s) const {
    if (s < 1) throw std::invalid_argument("TPoly::substituted_power: s must be >= 1");
    TPoly p = *this;
    for (auto& t : p.terms_) t.exp *= s;
    return p;
}

TPoly operator+(const TPoly& p, const TPoly& q) {
    TPoly r;
    r.terms_.reserve(p.terms_.size() + q.terms_.size());
    auto a = p.terms_.begin(), b = q.terms_.begin();
    while (a != p.terms_.end() || b != q.terms_.end()) {
        if (b == q.terms_.end() || (a != p.terms_.end() && a->exp < b->exp)) {
            r.terms_.push_back(*a++);
        } else if (a == p.terms_.end() || b->exp < a->exp) {
            r.terms_.push_back(*b++);
        } else {
            Int c = a->coeff + b->coeff;
            if (c != 0) r.terms_.push_back({a->exp, std::move(c)});
            ++a;
            ++b;
        }
    }
    return r;
}

TPoly operator-(const TPoly& p, const TPoly& q) { return p + (-q); }

bool operator==(const TPoly& p, const TPoly& q) {
    if (p.terms_.size() != q.terms_.size()) return false;
    for (std::size_t i = 0; i < p.terms_.size(); ++i)
        if (p.terms_[i].exp != q.terms_[i].exp || p.terms_[i].coeff != q.terms_[i].coeff)
            return false;
    return true;
}

TPoly mul_t(const TPoly& p, const TPoly& q) {
    if (p.is_zero() || q.is_zero()) return TPoly::zero();
    // Dense accumulator: the degrees seen here stay well within a few
    // thousand, so this beats a map-based schoolbook product.
    std::vector<Int> acc(static_cast<std::size_t>(p.degree() + q.degree()) + 1);
    for (const auto& a : p.terms())
        for (const auto& b : q.terms())
            acc[static_cast<std::size_t>(a.exp) + static_cast<std::size_t>(b.exp)] +=
                a.coeff * b.coeff;
    std::vector<TPoly::Term> out;
    for (std::size_t e = 0; e < acc.size(); ++e)
        if (acc[e] != 0) out.push_back({static_cast<int>(e), std::move(acc[e])});
    return TPoly::from_terms(std::move(out));
}

std::optional<TPoly> exact_div_t(const TPoly& p, const TPoly& q) {
    if (q.is_zero()) return std::nullopt;
    if (p.is_zero()) return TPoly::zero();
    std::map<int, Int> rem;
    for (const auto& t : p.terms()) rem.emplace(t.exp, t.coeff);
    const auto& qt = q.terms();
    const int qdeg = q.degree();
    const Int& qlc = qt.back().coeff;
    std::vector<TPoly::Term> quot;
    while (!rem.empty()) {
        auto lead = std::prev(rem.end());
        if (lead->second == 0) {
            rem.erase(lead);
            continue;
        }
        if (lead->first < qdeg) return std::nullopt;
        if (!mpz_divisible_p(lead->second.get_mpz_t(), qlc.get_mpz_t())) return std::nullopt;
        Int f = lead->second / qlc;
        int fe = lead->first - qdeg;
        for (const auto& t : qt) rem[fe + t.exp] -= f * t.coeff;
        quot.push_back({fe, std::move(f)});
    }
    return TPoly::from_terms(std::move(quot));
}

std::string TPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Int mag = abs(t.coeff);
        bool neg = t.coeff < 0;
        std::string vars;
        if (t.exp == 1)
            vars = "t";
        else if (t.exp > 1)
            vars = "t^" + std::to_string(t.exp);
        std::string piece;
        if (vars.empty())
            piece = mag.get_str();
        else if (mag == 1)
            piece = vars;
        else
            piece = mag.get_str() + "*" + vars;
        if (first)
            os << (neg ? "-" : "") << piece;
        else
            os << (neg ? " - " : " + ") << piece;
        first = false;
    }
    return os.str();
}

}  // namespace binform
