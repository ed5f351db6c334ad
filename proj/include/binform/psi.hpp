#pragma once

#include <vector>

#include "binform/rational.hpp"
#include "binform/tpoly.hpp"
#include "binform/ztpoly.hpp"

namespace binform {

// Exponent pair of the bivariate monomial z^i t^j a univariate monomial is
// sent to.
struct PsiImage {
    int i = 0;
    int j = 0;
};

bool operator==(const PsiImage& x, const PsiImage& y);

// The monomial transport for n >= 1 sends t^m to z^i t^j where
// m = n*i - j and 0 <= j < n; the pair (i, j) is unique (i = ceil(m/n)).
// Requires n >= 1 and m >= 0.
PsiImage psi_image(int n, int m);

// Transport of a single monomial c*t^m. For n = 0 the image is the constant
// c; for n < 0 it is zero.
ZTPoly psi_monomial(int n, int m, const Int& c = Int(1));

// Linear extension of psi_monomial to polynomials.
ZTPoly psi_poly(int n, const TPoly& p);

// The truncated geometric block 1 + t^k + t^(2k) + ... + t^((n-1)k).
// Requires n >= 1, k >= 1.
TPoly qgeom(int n, int k);

// Transport of the rational function numerator / prod (1 - t^k_i) for
// n >= 1: multiplies the numerator by one block qgeom(n, k_i) per
// denominator factor, transports the resulting polynomial term by term, and
// reattaches each factor as (1 - z^k_i). The result is returned as built,
// without normalization.
FactoredRational psi_rational(int n, const TPoly& numerator,
                              const std::vector<int>& denom_exponents);

// The section going the other way: z^i t^j -> z^i t^(n*i - j) when
// n*i - j >= 0, and 0 otherwise; applied term by term to s and truncated to
// the box z-degree <= imax, t-degree <= jmax. Requires n >= 1.
ZTPoly big_psi_truncated(int n, const ZTPoly& s, int imax, int jmax);

}  // namespace binform
