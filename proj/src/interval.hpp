#pragma once

// Directed-rounding interval scalars on MPFR, internal to the signature
// oracle. Only the operations the pivoting elimination needs.

#include <mpfr.h>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "concord/rational.hpp"

namespace concord::detail {

// Free list of mpfr handles per precision; elimination loops churn through
// temporaries and per-value init/clear dominates otherwise.
class MpfrPool {
public:
    static mpfr_ptr get(mpfr_prec_t prec) {
        auto& bucket = buckets()[prec];
        if (!bucket.empty()) {
            mpfr_ptr x = bucket.back();
            bucket.pop_back();
            return x;
        }
        auto* x = new __mpfr_struct;
        mpfr_init2(x, prec);
        return x;
    }
    static void put(mpfr_ptr x, mpfr_prec_t prec) { buckets()[prec].push_back(x); }

private:
    static std::map<mpfr_prec_t, std::vector<mpfr_ptr>>& buckets() {
        thread_local std::map<mpfr_prec_t, std::vector<mpfr_ptr>> pool;
        return pool;
    }
};

class RInterval {
public:
    explicit RInterval(mpfr_prec_t prec)
        : prec_(prec), lo_(MpfrPool::get(prec)), hi_(MpfrPool::get(prec)) {
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }
    RInterval(const RInterval& o)
        : prec_(o.prec_), lo_(MpfrPool::get(o.prec_)), hi_(MpfrPool::get(o.prec_)) {
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    RInterval(RInterval&& o) noexcept : prec_(o.prec_), lo_(o.lo_), hi_(o.hi_) {
        o.lo_ = nullptr;
        o.hi_ = nullptr;
    }
    RInterval& operator=(const RInterval& o) {
        if (this != &o) {
            if (prec_ != o.prec_ || lo_ == nullptr) {
                release();
                prec_ = o.prec_;
                lo_ = MpfrPool::get(prec_);
                hi_ = MpfrPool::get(prec_);
            }
            mpfr_set(lo_, o.lo_, MPFR_RNDD);
            mpfr_set(hi_, o.hi_, MPFR_RNDU);
        }
        return *this;
    }
    RInterval& operator=(RInterval&& o) noexcept {
        if (this != &o) {
            release();
            prec_ = o.prec_;
            lo_ = o.lo_;
            hi_ = o.hi_;
            o.lo_ = nullptr;
            o.hi_ = nullptr;
        }
        return *this;
    }
    ~RInterval() { release(); }

    static RInterval from_integer(long long v, mpfr_prec_t prec) {
        RInterval r(prec);
        mpfr_set_sj(r.lo_, v, MPFR_RNDD);
        mpfr_set_sj(r.hi_, v, MPFR_RNDU);
        return r;
    }

    static RInterval from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, mpfr_prec_t prec) {
        RInterval r(prec);
        mpfr_set(r.lo_, lo, MPFR_RNDD);
        mpfr_set(r.hi_, hi, MPFR_RNDU);
        return r;
    }

    mpfr_prec_t prec() const { return prec_; }
    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }

    RInterval operator+(const RInterval& o) const {
        RInterval r(prec_);
        mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
        mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
        return r;
    }
    RInterval operator-(const RInterval& o) const {
        RInterval r(prec_);
        mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
        mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
        return r;
    }
    RInterval operator-() const {
        RInterval r(prec_);
        mpfr_neg(r.lo_, hi_, MPFR_RNDD);
        mpfr_neg(r.hi_, lo_, MPFR_RNDU);
        return r;
    }
    bool is_exact_zero() const { return mpfr_zero_p(lo_) && mpfr_zero_p(hi_); }

    // endpoint case split: two rounded products except when both straddle zero
    RInterval operator*(const RInterval& o) const {
        RInterval r(prec_);
        if (is_exact_zero() || o.is_exact_zero()) {
            mpfr_set_zero(r.lo_, 1);
            mpfr_set_zero(r.hi_, 1);
            return r;
        }
        const bool a_nonneg = mpfr_sgn(lo_) >= 0, a_nonpos = mpfr_sgn(hi_) <= 0;
        const bool b_nonneg = mpfr_sgn(o.lo_) >= 0, b_nonpos = mpfr_sgn(o.hi_) <= 0;
        if (a_nonneg && b_nonneg) {
            mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
            mpfr_mul(r.hi_, hi_, o.hi_, MPFR_RNDU);
        } else if (a_nonneg && b_nonpos) {
            mpfr_mul(r.lo_, hi_, o.lo_, MPFR_RNDD);
            mpfr_mul(r.hi_, lo_, o.hi_, MPFR_RNDU);
        } else if (a_nonneg) {
            mpfr_mul(r.lo_, hi_, o.lo_, MPFR_RNDD);
            mpfr_mul(r.hi_, hi_, o.hi_, MPFR_RNDU);
        } else if (a_nonpos && b_nonneg) {
            mpfr_mul(r.lo_, lo_, o.hi_, MPFR_RNDD);
            mpfr_mul(r.hi_, hi_, o.lo_, MPFR_RNDU);
        } else if (a_nonpos && b_nonpos) {
            mpfr_mul(r.lo_, hi_, o.hi_, MPFR_RNDD);
            mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
        } else if (a_nonpos) {
            mpfr_mul(r.lo_, lo_, o.hi_, MPFR_RNDD);
            mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
        } else if (b_nonneg) {
            mpfr_mul(r.lo_, lo_, o.hi_, MPFR_RNDD);
            mpfr_mul(r.hi_, hi_, o.hi_, MPFR_RNDU);
        } else if (b_nonpos) {
            mpfr_mul(r.lo_, hi_, o.lo_, MPFR_RNDD);
            mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
        } else {
            mpfr_ptr p = MpfrPool::get(prec_);
            mpfr_mul(r.lo_, lo_, o.hi_, MPFR_RNDD);
            mpfr_mul(p, hi_, o.lo_, MPFR_RNDD);
            if (mpfr_cmp(p, r.lo_) < 0) mpfr_set(r.lo_, p, MPFR_RNDD);
            mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
            mpfr_mul(p, hi_, o.hi_, MPFR_RNDU);
            if (mpfr_cmp(p, r.hi_) > 0) mpfr_set(r.hi_, p, MPFR_RNDU);
            MpfrPool::put(p, prec_);
        }
        return r;
    }
    // requires a divisor of certified sign
    RInterval operator/(const RInterval& o) const {
        RInterval r(prec_);
        const int dsign = o.certain_sign();
        if (dsign == 0) throw SelfCheckFailed("interval division by a sign-uncertain divisor");
        if (is_exact_zero()) {
            mpfr_set_zero(r.lo_, 1);
            mpfr_set_zero(r.hi_, 1);
            return r;
        }
        const bool a_nonneg = mpfr_sgn(lo_) >= 0, a_nonpos = mpfr_sgn(hi_) <= 0;
        if (dsign > 0) {
            if (a_nonneg) {
                mpfr_div(r.lo_, lo_, o.hi_, MPFR_RNDD);
                mpfr_div(r.hi_, hi_, o.lo_, MPFR_RNDU);
            } else if (a_nonpos) {
                mpfr_div(r.lo_, lo_, o.lo_, MPFR_RNDD);
                mpfr_div(r.hi_, hi_, o.hi_, MPFR_RNDU);
            } else {
                mpfr_div(r.lo_, lo_, o.lo_, MPFR_RNDD);
                mpfr_div(r.hi_, hi_, o.lo_, MPFR_RNDU);
            }
        } else {
            if (a_nonneg) {
                mpfr_div(r.lo_, hi_, o.hi_, MPFR_RNDD);
                mpfr_div(r.hi_, lo_, o.lo_, MPFR_RNDU);
            } else if (a_nonpos) {
                mpfr_div(r.lo_, hi_, o.lo_, MPFR_RNDD);
                mpfr_div(r.hi_, lo_, o.hi_, MPFR_RNDU);
            } else {
                mpfr_div(r.lo_, hi_, o.hi_, MPFR_RNDD);
                mpfr_div(r.hi_, lo_, o.hi_, MPFR_RNDU);
            }
        }
        return r;
    }

    // +1 / -1 when the sign is certain, 0 when the interval straddles zero
    int certain_sign() const {
        if (mpfr_sgn(lo_) > 0) return 1;
        if (mpfr_sgn(hi_) < 0) return -1;
        return 0;
    }

    // lower bound on |x| over the interval, as a double (for pivot choice)
    double magnitude_lower_bound() const {
        if (certain_sign() == 0) return 0.0;
        const double a = std::abs(mpfr_get_d(lo_, MPFR_RNDZ));
        const double b = std::abs(mpfr_get_d(hi_, MPFR_RNDZ));
        return std::min(a, b);
    }

private:
    mpfr_prec_t prec_;
    mpfr_ptr lo_ = nullptr;
    mpfr_ptr hi_ = nullptr;

    void release() {
        if (lo_ != nullptr) {
            MpfrPool::put(lo_, prec_);
            MpfrPool::put(hi_, prec_);
            lo_ = nullptr;
            hi_ = nullptr;
        }
    }
};

struct CInterval {
    RInterval re, im;

    CInterval(RInterval r, RInterval i) : re(std::move(r)), im(std::move(i)) {}

    CInterval operator+(const CInterval& o) const { return {re + o.re, im + o.im}; }
    CInterval operator-(const CInterval& o) const { return {re - o.re, im - o.im}; }
    CInterval operator*(const CInterval& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    CInterval operator*(const RInterval& o) const { return {re * o, im * o}; }
    CInterval conj() const { return {re, -im}; }
    // divide by a real interval of certified sign
    CInterval operator/(const RInterval& d) const { return {re / d, im / d}; }
    RInterval norm2() const { return re * re + im * im; }
};

// Enclosures of cos(2 pi t) and sin(2 pi t) for rational t in (0,1), padded
// by the argument width (|cos'|, |sin'| <= 1 makes that rigorous).
void enclose_cos_sin(const Rational& t, mpfr_prec_t prec, RInterval& cos_out, RInterval& sin_out);

}  // namespace concord::detail
