#include "binform/ztpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace binform {

namespace {

using Key = std::pair<int, int>;  // (z, t), compared lexicographically

bool term_less(const ZTPoly::Term& x, const ZTPoly::Term& y) {
    return Key{x.z, x.t} < Key{y.z, y.t};
}

void check_exponents(int z, int t) {
    if (z < 0 || t < 0) throw std::invalid_argument("ZTPoly: negative exponent");
}

}  // namespace

ZTPoly ZTPoly::monomial(int z, int t, Int c) {
    check_exponents(z, t);
    ZTPoly p;
    if (c != 0) p.terms_.push_back({z, t, std::move(c)});
    return p;
}

ZTPoly ZTPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), term_less);
    ZTPoly p;
    for (auto& t : terms) {
        check_exponents(t.z, t.t);
        if (!p.terms_.empty() && p.terms_.back().z == t.z && p.terms_.back().t == t.t) {
            p.terms_.back().c += t.c;
            if (p.terms_.back().c == 0) p.terms_.pop_back();
        } else if (t.c != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

ZTPoly ZTPoly::from_tpoly_t(const TPoly& p) {
    ZTPoly r;
    for (const auto& t : p.terms()) r.terms_.push_back({0, t.exp, t.coeff});
    return r;  // already sorted: z constant, t increasing
}

ZTPoly ZTPoly::from_tpoly_z(const TPoly& p) {
    ZTPoly r;
    for (const auto& t : p.terms()) r.terms_.push_back({t.exp, 0, t.coeff});
    return r;
}

Int ZTPoly::coeff(int z, int t) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), Key{z, t},
                               [](const Term& x, const Key& k) { return Key{x.z, x.t} < k; });
    if (it != terms_.end() && it->z == z && it->t == t) return it->c;
    return Int(0);
}

int ZTPoly::max_z() const { return terms_.empty() ? -1 : terms_.back().z; }

int ZTPoly::max_t() const {
    int m = -1;
    for (const auto& t : terms_) m = std::max(m, t.t);
    return m;
}

ZTPoly ZTPoly::operator-() const {
    ZTPoly p = *this;
    for (auto& t : p.terms_) t.c = -t.c;
    return p;
}

ZTPoly ZTPoly::mul_monomial(int dz, int dt, const Int& c) const {
    if (c == 0) return zero();
    ZTPoly p = *this;
    for (auto& t : p.terms_) {
        t.z += dz;
        t.t += dt;
        check_exponents(t.z, t.t);
        t.c *= c;
    }
    return p;
}

ZTPoly ZTPoly::mul_binomial(int a, int b) const {
    check_exponents(a, b);
    if (a == 0 && b == 0) throw std::invalid_argument("ZTPoly::mul_binomial: (0,0)");
    return *this - mul_monomial(a, b, Int(1));
}

ZTPoly ZTPoly::truncated(int imax, int jmax) const {
    ZTPoly p;
    for (const auto& t : terms_)
        if (t.z <= imax && t.t <= jmax) p.terms_.push_back(t);
    return p;
}

ZTPoly operator+(const ZTPoly& p, const ZTPoly& q) {
    ZTPoly r;
    r.terms_.reserve(p.terms_.size() + q.terms_.size());
    auto a = p.terms_.begin(), b = q.terms_.begin();
    while (a != p.terms_.end() || b != q.terms_.end()) {
        if (b == q.terms_.end() ||
            (a != p.terms_.end() && Key{a->z, a->t} < Key{b->z, b->t})) {
            r.terms_.push_back(*a++);
        } else if (a == p.terms_.end() || Key{b->z, b->t} < Key{a->z, a->t}) {
            r.terms_.push_back(*b++);
        } else {
            Int c = a->c + b->c;
            if (c != 0) r.terms_.push_back({a->z, a->t, std::move(c)});
            ++a;
            ++b;
        }
    }
    return r;
}

ZTPoly operator-(const ZTPoly& p, const ZTPoly& q) { return p + (-q); }

ZTPoly operator*(const ZTPoly& p, const ZTPoly& q) {
    if (p.is_zero() || q.is_zero()) return ZTPoly::zero();
    std::map<Key, Int> acc;
    for (const auto& a : p.terms_)
        for (const auto& b : q.terms_)
            acc[{a.z + b.z, a.t + b.t}] += a.c * b.c;
    ZTPoly r;
    for (auto& [k, c] : acc)
        if (c != 0) r.terms_.push_back({k.first, k.second, std::move(c)});
    return r;
}

bool operator==(const ZTPoly& p, const ZTPoly& q) {
    if (p.terms_.size() != q.terms_.size()) return false;
    for (std::size_t i = 0; i < p.terms_.size(); ++i) {
        const auto &x = p.terms_[i], &y = q.terms_[i];
        if (x.z != y.z || x.t != y.t || x.c != y.c) return false;
    }
    return true;
}

std::optional<ZTPoly> exact_div_binomial(const ZTPoly& n, int a, int b) {
    check_exponents(a, b);
    if (a == 0 && b == 0) throw std::invalid_argument("exact_div_binomial: (0,0)");
    if (n.is_zero()) return ZTPoly::zero();
    // Quotient degree bounds. Division by (1 - z^a t^b) cannot raise the
    // degree in a variable the binomial actually involves, so a quotient
    // term outside these bounds proves non-divisibility.
    const int zbound = a > 0 ? n.max_z() - a : n.max_z();
    const int tbound = b > 0 ? n.max_t() - b : n.max_t();
    if (zbound < 0 || tbound < 0) return std::nullopt;
    // Worklist for the recurrence Q[e] = N[e] + Q[e - (a,b)], processed in
    // ascending lexicographic order; propagation only inserts strictly
    // larger keys, so each key is finalized when popped.
    std::map<Key, Int> work;
    for (const auto& t : n.terms()) work.emplace(Key{t.z, t.t}, t.c);
    std::vector<ZTPoly::Term> out;
    while (!work.empty()) {
        auto it = work.begin();
        Key key = it->first;
        Int c = std::move(it->second);
        work.erase(it);
        if (c == 0) continue;
        if (key.first > zbound || key.second > tbound) return std::nullopt;
        work[{key.first + a, key.second + b}] += c;
        out.push_back({key.first, key.second, std::move(c)});
    }
    return ZTPoly::from_terms(std::move(out));
}

ZTPoly mul_truncated_geometric(const ZTPoly& p, int a, int b, int imax, int jmax) {
    check_exponents(a, b);
    if (a == 0 && b == 0) throw std::invalid_argument("mul_truncated_geometric: (0,0)");
    // Same worklist as exact_div_binomial, but confined to the box: the
    // geometric series satisfies R[e] = P[e] + R[e - (a,b)], and terms
    // leaving the box can never flow back in.
    std::map<Key, Int> work;
    for (const auto& t : p.terms())
        if (t.z <= imax && t.t <= jmax) work.emplace(Key{t.z, t.t}, t.c);
    std::vector<ZTPoly::Term> out;
    while (!work.empty()) {
        auto it = work.begin();
        Key key = it->first;
        Int c = std::move(it->second);
        work.erase(it);
        if (c == 0) continue;
        if (key.first + a <= imax && key.second + b <= jmax)
            work[{key.first + a, key.second + b}] += c;
        out.push_back({key.first, key.second, std::move(c)});
    }
    return ZTPoly::from_terms(std::move(out));
}

namespace {

std::string vars_text(int z, int t) {
    std::string s;
    if (z == 1)
        s += "z";
    else if (z > 1)
        s += "z^" + std::to_string(z);
    if (t >= 1 && !s.empty()) s += "*";
    if (t == 1)
        s += "t";
    else if (t > 1)
        s += "t^" + std::to_string(t);
    return s;
}

std::string vars_latex(int z, int t) {
    std::string s;
    if (z == 1)
        s += "z";
    else if (z > 1)
        s += "z^{" + std::to_string(z) + "}";
    if (t == 1)
        s += "t";
    else if (t > 1)
        s += "t^{" + std::to_string(t) + "}";
    return s;
}

std::string poly_string(const ZTPoly& p, bool latex) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& term : p.terms()) {
        Int mag = abs(term.c);
        bool neg = term.c < 0;
        std::string vars = latex ? vars_latex(term.z, term.t) : vars_text(term.z, term.t);
        std::string piece;
        if (vars.empty())
            piece = mag.get_str();
        else if (mag == 1)
            piece = vars;
        else
            piece = mag.get_str() + (latex ? "" : "*") + vars;
        if (first)
            os << (neg ? "-" : "") << piece;
        else
            os << (neg ? (latex ? "-" : " - ") : (latex ? "+" : " + ")) << piece;
        first = false;
    }
    return os.str();
}

}  // namespace

std::string ZTPoly::to_text() const { return poly_string(*this, false); }

std::string ZTPoly::to_latex() const { return poly_string(*this, true); }

}  // namespace binform
