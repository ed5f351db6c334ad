#pragma once

#include <string>
#include <vector>

#include "binform/bigint.hpp"
#include "binform/tpoly.hpp"

namespace binform {

// omega(d, n, m): number of solutions of a_1 + 2*a_2 + ... + d*a_d = m with
// a_i >= 0 and a_1 + ... + a_d <= n; equivalently the number of partitions
// of m into at most n parts, each part at most d. Zero for m < 0 or m > d*n.
// Requires d >= 1, n >= 0.
Int omega(int d, int n, long m);

// The whole row omega(d, n, 0..mmax) from a single dynamic-programming
// sweep; much cheaper than mmax independent calls.
std::vector<Int> omega_row(int d, int n, int mmax);

// Dimension of the degree-i, order-j slice of the covariant algebra of a
// binary form of degree d: omega(d,i,(d*i-j)/2) - omega(d,i,(d*i-j-2)/2),
// and 0 when d*i - j is odd or negative. Requires d >= 1, i, j >= 0.
Int dim_cov(int d, int i, int j);

// Dimension of the degree-n invariants: the j = 0 column of dim_cov.
Int dim_inv(int d, int n);

// Total dimension of the degree-n slice across all orders j.
Int dim_cov_graded(int d, int n);

// Gaussian binomial [d+n choose n]_q as a polynomial in q (here rendered in
// t). Computed multiplying one cyclotomic-style factor at a time and
// dividing exactly after each step; every prefix is again a Gaussian
// binomial, so the division cannot fail.
TPoly qbinomial(int d, int n);

// dim_cov computed through the Gaussian binomial route instead of the
// partition recurrence; used to cross-check dim_cov.
Int dim_cov_qbin(int d, int i, int j);

// Rectangular table of dim_cov(d, i, j) for 0 <= i <= imax, 0 <= j <= jmax.
struct DimTable {
    int d = 0;
    int imax = 0;
    int jmax = 0;
    std::vector<std::vector<Int>> rows;  // rows[i][j]

    const Int& at(int i, int j) const { return rows[i][j]; }
    std::string to_csv() const;  // header "i\j,0,...,jmax", one row per i
};

DimTable dim_table(int d, int imax, int jmax);

}  // namespace binform
