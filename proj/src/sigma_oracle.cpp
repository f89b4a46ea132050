#include <optional>
#include <vector>

#include "concord/signature.hpp"
#include "interval.hpp"

namespace concord {

namespace detail {

void enclose_cos_sin(const Rational& t, mpfr_prec_t prec, RInterval& cos_out, RInterval& sin_out) {
    mpfr_t pi_lo, pi_hi, th_lo, th_hi, a, b, width, tmp;
    mpfr_inits2(prec, pi_lo, pi_hi, th_lo, th_hi, a, b, width, tmp, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(pi_lo, MPFR_RNDD);
    mpfr_const_pi(pi_hi, MPFR_RNDU);

    // theta = 2 pi t with t = num/den > 0
    const Integer num = t.get_num(), den = t.get_den();
    mpfr_mul_z(th_lo, pi_lo, num.get_mpz_t(), MPFR_RNDD);
    mpfr_mul_ui(th_lo, th_lo, 2, MPFR_RNDD);
    mpfr_div_z(th_lo, th_lo, den.get_mpz_t(), MPFR_RNDD);
    mpfr_mul_z(th_hi, pi_hi, num.get_mpz_t(), MPFR_RNDU);
    mpfr_mul_ui(th_hi, th_hi, 2, MPFR_RNDU);
    mpfr_div_z(th_hi, th_hi, den.get_mpz_t(), MPFR_RNDU);

    mpfr_sub(width, th_hi, th_lo, MPFR_RNDU);

    const auto enclose = [&](int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t), RInterval& out) {
        // min/max of fn over both endpoints, padded by the argument width
        mpfr_t lo, hi;
        mpfr_inits2(prec, lo, hi, static_cast<mpfr_ptr>(nullptr));
        fn(a, th_lo, MPFR_RNDD);
        fn(b, th_hi, MPFR_RNDD);
        mpfr_min(lo, a, b, MPFR_RNDD);
        mpfr_sub(lo, lo, width, MPFR_RNDD);
        fn(a, th_lo, MPFR_RNDU);
        fn(b, th_hi, MPFR_RNDU);
        mpfr_max(hi, a, b, MPFR_RNDU);
        mpfr_add(hi, hi, width, MPFR_RNDU);
        out = RInterval::from_endpoints(lo, hi, prec);
        mpfr_clears(lo, hi, static_cast<mpfr_ptr>(nullptr));
    };
    enclose(mpfr_cos, cos_out);
    enclose(mpfr_sin, sin_out);

    mpfr_clears(pi_lo, pi_hi, th_lo, th_hi, a, b, width, tmp, static_cast<mpfr_ptr>(nullptr));
}

namespace {

// Hermitian elimination with certified pivot signs. Returns the signature,
// or nullopt when some pivot sign cannot be decided at this precision.
std::optional<int> try_signature(const std::vector<std::vector<long long>>& v, const Rational& t,
                                 mpfr_prec_t prec) {
    const std::size_t n = v.size();
    RInterval c(prec), s(prec);
    enclose_cos_sin(t, prec, c, s);
    const RInterval one = RInterval::from_integer(1, prec);
    const RInterval one_minus_c = one - c;

    // M = (1-c)(V + V^T) + i s (V^T - V); diagonal real by construction
    std::vector<std::vector<CInterval>> m;
    m.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<CInterval> row;
        row.reserve(n);
        for (std::size_t j = 0; j < n; ++j) {
            const RInterval sym = RInterval::from_integer(v[i][j] + v[j][i], prec);
            const RInterval skew = RInterval::from_integer(v[j][i] - v[i][j], prec);
            row.emplace_back(one_minus_c * sym, s * skew);
        }
        m.push_back(std::move(row));
    }

    std::vector<std::size_t> remaining(n);
    for (std::size_t i = 0; i < n; ++i) remaining[i] = i;
    int signature = 0;

    while (!remaining.empty()) {
        // best certified 1x1 pivot on the (real) diagonal
        std::size_t best = remaining.size();
        double best_mag = 0.0;
        for (std::size_t idx = 0; idx < remaining.size(); ++idx) {
            const RInterval& d = m[remaining[idx]][remaining[idx]].re;
            if (d.certain_sign() == 0) continue;
            const double mag = d.magnitude_lower_bound();
            if (best == remaining.size() || mag > best_mag) {
                best = idx;
                best_mag = mag;
            }
        }
        if (best < remaining.size()) {
            const std::size_t p = remaining[best];
            const RInterval pivot = m[p][p].re;
            signature += pivot.certain_sign();
            remaining.erase(remaining.begin() + best);
            for (const std::size_t i : remaining) {
                const CInterval li = m[i][p] / pivot;
                for (const std::size_t j : remaining) m[i][j] = m[i][j] - li * m[p][j];
            }
            continue;
        }

        // all remaining diagonals straddle zero; look for a 2x2 block pivot
        // [[d_i, u],[conj(u), d_j]] with certainly negative determinant
        // (one positive and one negative eigenvalue)
        bool used_block = false;
        for (std::size_t a_idx = 0; a_idx < remaining.size() && !used_block; ++a_idx) {
            for (std::size_t b_idx = a_idx + 1; b_idx < remaining.size() && !used_block; ++b_idx) {
                const std::size_t p = remaining[a_idx], q = remaining[b_idx];
                const RInterval det = m[p][p].re * m[q][q].re - m[p][q].norm2();
                if (det.certain_sign() >= 0) continue;
                // eliminate with the 2x2 block: signature contribution 0
                used_block = true;
                std::vector<std::size_t> rest;
                for (const std::size_t i : remaining)
                    if (i != p && i != q) rest.push_back(i);
                for (const std::size_t i : rest) {
                    // solve [x y] * block = [m_ip m_iq]
                    const CInterval mip = m[i][p], miq = m[i][q];
                    const CInterval x = (mip * m[q][q].re - miq * m[q][p]) / det;
                    const CInterval y = (miq * m[p][p].re - mip * m[p][q]) / det;
                    for (const std::size_t j : rest)
                        m[i][j] = m[i][j] - x * m[p][j] - y * m[q][j];
                }
                remaining = std::move(rest);
            }
        }
        if (!used_block) return std::nullopt;
    }
    return signature;
}

}  // namespace

}  // namespace detail

int hermitian_signature_at(const std::vector<std::vector<long long>>& v, const Rational& t) {
    if (!(t > 0) || !(t < 1))
        throw OutOfDomain("hermitian_signature_at requires t in (0,1), got " + to_string(t));
    for (mpfr_prec_t prec = 128; prec <= 16384; prec *= 2) {
        const auto sig = detail::try_signature(v, t, prec);
        if (sig) return *sig;
    }
    throw PrecisionExhausted("pivot signs undecided at 16384 bits for t = " + to_string(t));
}

}  // namespace concord
