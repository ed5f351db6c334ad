#pragma once

#include <optional>
#include <string>
#include <vector>

#include "binform/bigint.hpp"

namespace binform {

// Univariate polynomial in t with arbitrary-precision integer coefficients.
// Invariant: terms are stored with strictly increasing exponents and no zero
// coefficients; the zero polynomial is the empty term list.
class TPoly {
public:
    struct Term {
        int exp;
        Int coeff;
    };

    TPoly() = default;

    static TPoly zero() { return TPoly{}; }
    static TPoly one() { return monomial(0); }
    static TPoly monomial(int exp, Int coeff = Int(1));
    static TPoly one_minus_tk(int k);  // 1 - t^k
    // Sorts, merges equal exponents, drops zero coefficients.
    static TPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const { return terms_.empty() ? -1 : terms_.back().exp; }
    Int coeff(int exp) const;

    TPoly operator-() const;
    TPoly scaled(const Int& c) const;
    TPoly shifted(int dexp) const;         // multiply by t^dexp
    TPoly substituted_power(int s) const;  // t -> t^s, s >= 1

    std::string str() const;

    friend TPoly operator+(const TPoly& p, const TPoly& q);
    friend TPoly operator-(const TPoly& p, const TPoly& q);
    friend bool operator==(const TPoly& p, const TPoly& q);

private:
    std::vector<Term> terms_;
};

TPoly mul_t(const TPoly& p, const TPoly& q);
inline TPoly operator*(const TPoly& p, const TPoly& q) { return mul_t(p, q); }

// Exact quotient r with r*q == p, over the integers. Returns nullopt when p
// is not divisible by q (callers decide whether that is an error).
std::optional<TPoly> exact_div_t(const TPoly& p, const TPoly& q);

}  // namespace binform
