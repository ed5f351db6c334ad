#pragma once

#include <optional>
#include <string>
#include <vector>

#include "binform/bigint.hpp"
#include "binform/tpoly.hpp"

namespace binform {

// Sparse bivariate polynomial in z and t over arbitrary-precision integers.
// Invariant: terms are kept in lexicographic order by (z, t) exponent pair,
// with no zero coefficients; the zero polynomial is the empty list.
class ZTPoly {
public:
    struct Term {
        int z;
        int t;
        Int c;
    };

    ZTPoly() = default;

    static ZTPoly zero() { return ZTPoly{}; }
    static ZTPoly one() { return monomial(0, 0); }
    static ZTPoly monomial(int z, int t, Int c = Int(1));
    // Sorts, merges equal exponent pairs, drops zero coefficients.
    static ZTPoly from_terms(std::vector<Term> terms);
    static ZTPoly from_tpoly_t(const TPoly& p);  // p(t), z-free
    static ZTPoly from_tpoly_z(const TPoly& p);  // p with its variable read as z

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Int coeff(int z, int t) const;
    int max_z() const;  // -1 for the zero polynomial
    int max_t() const;

    ZTPoly operator-() const;
    ZTPoly mul_monomial(int dz, int dt, const Int& c) const;
    ZTPoly mul_binomial(int a, int b) const;  // multiply by (1 - z^a t^b)
    ZTPoly truncated(int imax, int jmax) const;

    std::string to_text() const;   // e.g. "1 - z*t + z^2*t^2"
    std::string to_latex() const;  // e.g. "1-zt+z^{2}t^{2}"

    friend ZTPoly operator+(const ZTPoly& p, const ZTPoly& q);
    friend ZTPoly operator-(const ZTPoly& p, const ZTPoly& q);
    friend ZTPoly operator*(const ZTPoly& p, const ZTPoly& q);
    friend bool operator==(const ZTPoly& p, const ZTPoly& q);

private:
    std::vector<Term> terms_;
};

// Exact quotient of n by the binomial (1 - z^a t^b), or nullopt when n is
// not divisible. Requires a, b >= 0 and (a, b) != (0, 0).
std::optional<ZTPoly> exact_div_binomial(const ZTPoly& n, int a, int b);

// p / (1 - z^a t^b) expanded as a geometric series and truncated to the box
// z-degree <= imax, t-degree <= jmax. Requires a >= 0, b >= 0, a + b > 0.
ZTPoly mul_truncated_geometric(const ZTPoly& p, int a, int b, int imax, int jmax);

}  // namespace binform
