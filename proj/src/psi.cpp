#include "binform/psi.hpp"

#include <stdexcept>

namespace binform {

bool operator==(const PsiImage& x, const PsiImage& y) { return x.i == y.i && x.j == y.j; }

PsiImage psi_image(int n, int m) {
    if (n < 1) throw std::invalid_argument("psi_image: n must be >= 1");
    if (m < 0) throw std::invalid_argument("psi_image: m must be >= 0");
    // The unique (i, j) with m = n*i - j and 0 <= j < n.
    const int i = (m + n - 1) / n;
    return PsiImage{i, n * i - m};
}

ZTPoly psi_monomial(int n, int m, const Int& c) {
    if (n < 0) return ZTPoly::zero();
    if (n == 0) return ZTPoly::monomial(0, 0, c);
    PsiImage im = psi_image(n, m);
    return ZTPoly::monomial(im.i, im.j, c);
}

ZTPoly psi_poly(int n, const TPoly& p) {
    if (n < 0) return ZTPoly::zero();
    std::vector<ZTPoly::Term> terms;
    terms.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        if (n == 0) {
            terms.push_back({0, 0, t.coeff});
        } else {
            PsiImage im = psi_image(n, t.exp);
            terms.push_back({im.i, im.j, t.coeff});
        }
    }
    return ZTPoly::from_terms(std::move(terms));
}

TPoly qgeom(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("qgeom: n and k must be >= 1");
    std::vector<TPoly::Term> terms;
    terms.reserve(n);
    for (int e = 0; e < n; ++e) terms.push_back({e * k, Int(1)});
    return TPoly::from_terms(std::move(terms));
}

FactoredRational psi_rational(int n, const TPoly& numerator,
                              const std::vector<int>& denom_exponents) {
    if (n < 1) throw std::invalid_argument("psi_rational: n must be >= 1");
    // 1/(1 - t^k) = (1 + t^k + ... + t^((n-1)k)) / (1 - t^(nk)), and the
    // transport turns (1 - t^(nk)) in the denominator into (1 - z^k). So:
    // absorb one geometric block per denominator factor into the numerator,
    // transport term by term, and reattach the factors in z.
    TPoly r = numerator;
    std::vector<BinomFactor> den;
    den.reserve(denom_exponents.size());
    for (int k : denom_exponents) {
        if (k < 1) throw std::invalid_argument("psi_rational: denominator exponents must be >= 1");
        r = r * qgeom(n, k);
        den.emplace_back(k, 0);
    }
    return FactoredRational(psi_poly(n, r), std::move(den));
}

ZTPoly big_psi_truncated(int n, const ZTPoly& s, int imax, int jmax) {
    if (n < 1) throw std::invalid_argument("big_psi_truncated: n must be >= 1");
    std::vector<ZTPoly::Term> terms;
    for (const auto& t : s.terms()) {
        if (t.z > imax) continue;
        const int j = n * t.z - t.t;
        if (j >= 0 && j <= jmax) terms.push_back({t.z, j, t.c});
    }
    return ZTPoly::from_terms(std::move(terms));
}

}  // namespace binform
