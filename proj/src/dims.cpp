#include "binform/dims.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace binform {

namespace {

void check_dn(int d, int n) {
    if (d < 1) throw std::invalid_argument("omega: d must be >= 1");
    if (n < 0) throw std::invalid_argument("omega: n must be >= 0");
}

}  // namespace

std::vector<Int> omega_row(int d, int n, int mmax) {
    check_dn(d, n);
    if (mmax < 0) return {};
    // dp[c][r] = number of partitions of r into exactly c parts, each part
    // at most s, after the outer loop has processed part sizes 1..s.
    // Processing c in increasing order lets a part size repeat while still
    // consuming one of the n part slots per copy.
    const int rmax = mmax;
    std::vector<std::vector<Int>> dp(n + 1, std::vector<Int>(rmax + 1));
    dp[0][0] = 1;
    for (int s = 1; s <= d; ++s)
        for (int c = 1; c <= n; ++c)
            for (int r = s; r <= rmax; ++r)
                dp[c][r] += dp[c - 1][r - s];
    std::vector<Int> row(rmax + 1);
    for (int r = 0; r <= rmax; ++r)
        for (int c = 0; c <= n; ++c) row[r] += dp[c][r];
    return row;
}

Int omega(int d, int n, long m) {
    check_dn(d, n);
    if (m < 0 || m > static_cast<long>(d) * n) return Int(0);
    return omega_row(d, n, static_cast<int>(m))[static_cast<std::size_t>(m)];
}

Int dim_cov(int d, int i, int j) {
    check_dn(d, i);
    if (j < 0) throw std::invalid_argument("dim_cov: j must be >= 0");
    const long w = static_cast<long>(d) * i - j;
    if (w < 0 || w % 2 != 0) return Int(0);
    const long m = w / 2;
    if (m > static_cast<long>(d) * i) return Int(0);
    auto row = omega_row(d, i, static_cast<int>(m));
    Int r = row[static_cast<std::size_t>(m)];
    if (m >= 1) r -= row[static_cast<std::size_t>(m - 1)];
    return r;
}

Int dim_inv(int d, int n) {
    check_dn(d, n);
    const long w = static_cast<long>(d) * n;
    if (w % 2 != 0) return Int(0);
    const long m = w / 2;
    auto row = omega_row(d, n, static_cast<int>(m));
    Int r = row[static_cast<std::size_t>(m)];
    if (m >= 1) r -= row[static_cast<std::size_t>(m - 1)];
    return r;
}

Int dim_cov_graded(int d, int n) {
    check_dn(d, n);
    // Of the two candidate arguments d*n/2 and (d*n-1)/2 exactly one is an
    // integer, and it equals floor(d*n/2); the half-integer one counts as 0.
    return omega(d, n, (static_cast<long>(d) * n) / 2);
}

TPoly qbinomial(int d, int n) {
    if (d < 0 || n < 0) throw std::invalid_argument("qbinomial: negative argument");
    TPoly p = TPoly::one();
    for (int i = 1; i <= n; ++i) {
        p = p * TPoly::one_minus_tk(d + i);
        auto q = exact_div_t(p, TPoly::one_minus_tk(i));
        if (!q) throw std::logic_error("qbinomial: interleaved division failed");
        p = std::move(*q);
    }
    return p;
}

Int dim_cov_qbin(int d, int i, int j) {
    check_dn(d, i);
    if (j < 0) throw std::invalid_argument("dim_cov_qbin: j must be >= 0");
    const long w = static_cast<long>(d) * i - j;
    if (w < 0 || w % 2 != 0) return Int(0);
    const long m = w / 2;
    TPoly qb = qbinomial(d, i);
    Int r = qb.coeff(static_cast<int>(m));
    if (m >= 1) r -= qb.coeff(static_cast<int>(m - 1));
    return r;
}

DimTable dim_table(int d, int imax, int jmax) {
    if (imax < 0 || jmax < 0)
        throw std::invalid_argument("dim_table: box bounds must be nonnegative");
    DimTable t;
    t.d = d;
    t.imax = imax;
    t.jmax = jmax;
    t.rows.resize(imax + 1);
    for (int i = 0; i <= imax; ++i) {
        const long half = (static_cast<long>(d) * i) / 2;
        auto row = omega_row(d, i, static_cast<int>(half));
        t.rows[i].resize(jmax + 1);
        for (int j = 0; j <= jmax; ++j) {
            const long w = static_cast<long>(d) * i - j;
            if (w < 0 || w % 2 != 0) continue;  // entry stays 0
            const long m = w / 2;
            Int v = row[static_cast<std::size_t>(m)];
            if (m >= 1) v -= row[static_cast<std::size_t>(m - 1)];
            if (v < 0) throw std::logic_error("dim_table: negative dimension");
            t.rows[i][j] = std::move(v);
        }
    }
    return t;
}

std::string DimTable::to_csv() const {
    std::ostringstream os;
    os << "i\\j";
    for (int j = 0; j <= jmax; ++j) os << "," << j;
    os << "\n";
    for (int i = 0; i <= imax; ++i) {
        os << i;
        for (int j = 0; j <= jmax; ++j) os << "," << rows[i][j].get_str();
        os << "\n";
    }
    return os.str();
}

}  // namespace binform
