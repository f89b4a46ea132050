#include "concord/signature.hpp"

#include "concord/classical.hpp"

#include <algorithm>
#include <numeric>

namespace concord {

JumpSpectrum torus_jumps(long long r, long long s) {
    if (r <= 1 || s <= 1 || std::gcd(r, s) != 1)
        throw BadParameters("torus_jumps needs coprime parameters > 1");
    JumpSpectrum spectrum;
    spectrum.r = r;
    spectrum.s = s;
    const long long rs = r * s;
    for (long long n = 1; n < rs; ++n) {
        if (n % r == 0 || n % s == 0) continue;
        long long count = 0;
        for (long long j = 0; j <= r; ++j) {
            const long long rem = n - j * s;
            if (rem < 0) break;
            if (rem % r == 0 && rem / r <= s) ++count;
        }
        if (count > 1)
            throw SelfCheckFailed("lattice count " + std::to_string(count) + " at N=" +
                                  std::to_string(n) + " for T(" + std::to_string(r) + "," +
                                  std::to_string(s) + ")");
        spectrum.entries.emplace_back(make_rational(n, rs), count == 1 ? 2 : -2);
    }
    return spectrum;
}

int sigma_at(const JumpSpectrum& spectrum, const Rational& t) {
    if (!(t > 0) || !(t < 1))
        throw OutOfDomain("sigma_at requires t in (0,1), got " + to_string(t));
    int sigma = 0;
    for (const auto& [point, jump] : spectrum.entries) {
        if (point == t)
            throw AtJumpPoint("t = " + to_string(t) + " is a jump point of T(" +
                              std::to_string(spectrum.r) + "," + std::to_string(spectrum.s) + ")");
        if (point < t) sigma += jump;
    }
    return sigma;
}

// ---------------------------------------------------------------------------
// Exact determinants (fraction-free Bareiss).

namespace {

Integer bareiss_det(std::vector<std::vector<Integer>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

Integer seifert_pairing_det(const std::vector<std::vector<long long>>& v) {
    const std::size_t n = v.size();
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = to_integer(v[i][j] - v[j][i]);
    return bareiss_det(std::move(m));
}

LaurentPoly seifert_alexander(const std::vector<std::vector<long long>>& v) {
    // det(tV - V^T) has degree <= n; interpolate from n+1 integer points
    const std::size_t n = v.size();
    std::vector<Integer> xs(n + 1), ys(n + 1);
    for (std::size_t p = 0; p <= n; ++p) {
        const Integer x(static_cast<long>(p));
        std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m[i][j] = x * to_integer(v[i][j]) - to_integer(v[j][i]);
        xs[p] = x;
        ys[p] = bareiss_det(std::move(m));
    }
    // Newton divided differences, then expand
    std::vector<Rational> dd(n + 1);
    for (std::size_t i = 0; i <= n; ++i) dd[i] = Rational(ys[i]);
    std::vector<Rational> newton(n + 1);
    newton[0] = dd[0];
    for (std::size_t order = 1; order <= n; ++order) {
        for (std::size_t i = 0; i + order <= n; ++i)
            dd[i] = (dd[i + 1] - dd[i]) / Rational(xs[i + order] - xs[i]);
        newton[order] = dd[0];
    }
    // expand sum_k newton[k] * prod_{j<k} (x - xs[j])
    std::vector<Rational> poly(n + 1, Rational(0));
    std::vector<Rational> basis(n + 1, Rational(0));
    basis[0] = Rational(1);
    std::size_t basis_deg = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        for (std::size_t j = 0; j <= basis_deg; ++j) poly[j] += newton[k] * basis[j];
        if (k < n) {
            // basis *= (x - xs[k])
            for (std::size_t j = basis_deg + 1; j > 0; --j)
                basis[j] = basis[j - 1] - basis[j] * Rational(xs[k]);
            basis[0] = -basis[0] * Rational(xs[k]);
            ++basis_deg;
        }
    }
    LaurentPoly result;
    for (std::size_t j = 0; j <= n; ++j) {
        if (poly[j] == 0) continue;
        if (poly[j].get_den() != 1)
            throw SelfCheckFailed("interpolated determinant has a non-integer coefficient");
        result = result + LaurentPoly::term(static_cast<LaurentPoly::Exponent>(j),
                                            Integer(poly[j].get_num()));
    }
    return result;
}

// ---------------------------------------------------------------------------
// Seifert matrix of the positive braid closure (s1 ... s_{r-1})^s.
//
// Basis: one generator per pair of consecutive crossings in the same braid
// column ("fence" generators). Within a column the loops chain with linking
// (-1 on the diagonal, 1 just above it). Loops in adjacent columns link only
// when their time spans interleave; the orientation convention below is
// validated on construction by the two self-checks.

SeifertMatrix braid_seifert_matrix(long long r, long long s) {
    if (r <= 1 || s <= 1 || std::gcd(r, s) != 1)
        throw BadParameters("braid_seifert_matrix needs coprime parameters > 1");

    const long long cols = r - 1;        // braid columns
    const long long per_col = s - 1;     // generators per column
    const auto index = [per_col](long long col, long long k) { return col * per_col + k; };
    const std::size_t n = static_cast<std::size_t>(cols * per_col);

    SeifertMatrix sm;
    sm.r = r;
    sm.s = s;
    sm.v.assign(n, std::vector<long long>(n, 0));

    // crossing times of column i (0-based): i, i + (r-1), ..., i + (s-1)(r-1);
    // generator (i,k) spans times [i + k(r-1), i + (k+1)(r-1)]
    for (long long i = 0; i < cols; ++i) {
        for (long long k = 0; k < per_col; ++k) {
            const auto g = index(i, k);
            sm.v[g][g] = -1;
            if (k + 1 < per_col) sm.v[g][index(i, k + 1)] = 1;
            if (i + 1 < cols) {
                // same k: spans offset by +1, interleaved with (i,k) first
                sm.v[index(i + 1, k)][g] = -1;
                // k-1 in the next column starts earlier, interleaved the other way
                if (k > 0) sm.v[index(i + 1, k - 1)][g] = 1;
            }
        }
    }

    if (seifert_pairing_det(sm.v) != 1)
        throw SelfCheckFailed("Seifert pairing determinant check failed for T(" +
                              std::to_string(r) + "," + std::to_string(s) + ")");
    const LaurentPoly delta = seifert_alexander(sm.v).canonical_unit();
    if (delta != torus_alexander(r, s))
        throw SelfCheckFailed("Alexander self-check failed for T(" + std::to_string(r) + "," +
                              std::to_string(s) + "): got " + delta.to_string());
    return sm;
}

int sigma_oracle(const SeifertMatrix& v, const Rational& t) {
    if (!(t > 0) || !(t < 1))
        throw OutOfDomain("sigma_oracle requires t in (0,1), got " + to_string(t));
    const JumpSpectrum spectrum = torus_jumps(v.r, v.s);
    for (const auto& [point, jump] : spectrum.entries)
        if (point == t)
            throw AtJumpPoint("t = " + to_string(t) + " is a root of the Alexander polynomial");
    return hermitian_signature_at(v.v, t);
}

}  // namespace concord
