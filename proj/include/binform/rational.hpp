#pragma once

#include <string>
#include <vector>

#include "binform/ztpoly.hpp"

namespace binform {

// One denominator atom (1 - z^a t^b)^m. The exponent pair is never (0, 0)
// and the multiplicity is at least 1.
struct BinomFactor {
    int a;
    int b;
    int m;

    BinomFactor(int a, int b, int m = 1);  // throws std::invalid_argument
};

bool operator==(const BinomFactor& x, const BinomFactor& y);
// Orders by exponent pair; within a FactoredRational the pairs are unique.
bool operator<(const BinomFactor& x, const BinomFactor& y);

// A rational function numerator / prod (1 - z^a t^b)^m with the denominator
// kept in factored form. Factors are sorted by (a, b) and factors with the
// same exponent pair are merged by adding multiplicities. A zero numerator
// is stored with an empty denominator.
class FactoredRational {
public:
    FactoredRational() : num_(ZTPoly::one()) {}
    explicit FactoredRational(ZTPoly num) : num_(std::move(num)) {}
    FactoredRational(ZTPoly num, std::vector<BinomFactor> den);

    const ZTPoly& numerator() const { return num_; }
    const std::vector<BinomFactor>& denominator() const { return den_; }

    // Same value with one more denominator atom merged in.
    FactoredRational with_factor(const BinomFactor& f) const;

    friend bool operator==(const FactoredRational& x, const FactoredRational& y);

private:
    ZTPoly num_;
    std::vector<BinomFactor> den_;
};

// The denominator expanded to a polynomial.
ZTPoly denominator_poly(const FactoredRational& f);

// Exact quotient of n by one copy of (1 - z^a t^b), ignoring f.m.
std::optional<ZTPoly> exact_div_factor(const ZTPoly& n, const BinomFactor& f);

// Cancels denominator factors into the numerator where division is exact.
// Beyond whole-factor cancellation this also lowers factor exponents: when
// the cofactor (1 + u + ... + u^(r-1)) of (1 - u^r) divides the numerator,
// the factor (1 - u^r) is replaced by (1 - u). The result is equal as a
// rational function and has no denominator factor whose cancellation or
// lowering would still go through.
FactoredRational normalize(const FactoredRational& f);

// Equality as rational functions: cross-multiplies numerators with the
// expanded denominators and compares polynomials.
bool equal_rational(const FactoredRational& x, const FactoredRational& y);

// Power series expansion of f truncated to z-degree <= imax and
// t-degree <= jmax. Exact: no coefficient inside the box is approximated.
ZTPoly expand_truncated(const FactoredRational& f, int imax, int jmax);

enum class RenderFormat { text, latex, json };

// Deterministic rendering; terms and factors appear in their stored
// (lexicographic) order. The json form is the interchange schema used by
// the CLI and the cache files.
std::string render(const FactoredRational& f, RenderFormat format);

// Parses the json rendering back. Extra keys in the top-level object are
// ignored (cache files carry a small header next to the series fields).
// Throws std::runtime_error on malformed input.
FactoredRational parse_json(const std::string& text);

}  // namespace binform
