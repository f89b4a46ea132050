#include "concord/laurent.hpp"

#include <sstream>

namespace concord {

LaurentPoly LaurentPoly::term(Exponent e, Integer c) {
    LaurentPoly p;
    if (c != 0) p.terms_[e] = std::move(c);
    return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<Exponent, long long>>& terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p.add_term(e, to_integer(c));
    return p;
}

void LaurentPoly::add_term(Exponent e, const Integer& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

LaurentPoly::Exponent LaurentPoly::min_exponent() const {
    if (is_zero()) throw BadParameters("min_exponent of zero polynomial");
    return terms_.begin()->first;
}

LaurentPoly::Exponent LaurentPoly::max_exponent() const {
    if (is_zero()) throw BadParameters("max_exponent of zero polynomial");
    return terms_.rbegin()->first;
}

Integer LaurentPoly::coeff(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r.symmetrized_ = false;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r.symmetrized_ = false;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::shifted(Exponent k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
    return r;
}

LaurentPoly LaurentPoly::substituted_power(Exponent r) const {
    if (r == 0) throw BadParameters("substituted_power with exponent 0");
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_[e * r] = c;
    return out;
}

Integer LaurentPoly::evaluated_at_one() const {
    Integer s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

bool LaurentPoly::is_palindromic() const {
    if (is_zero()) return true;
    const Exponent lo = min_exponent(), hi = max_exponent();
    for (const auto& [e, c] : terms_)
        if (coeff(lo + (hi - e)) != c) return false;
    return true;
}

LaurentPoly LaurentPoly::symmetrize() const {
    if (is_zero()) throw NotPalindromic("cannot symmetrize the zero polynomial");
    const Exponent lo = min_exponent(), hi = max_exponent();
    if (((lo + hi) % 2 + 2) % 2 != 0)
        throw OddSpan("exponent span midpoint is not an integer for " + to_string());
    if (!is_palindromic()) throw NotPalindromic("polynomial is not palindromic: " + to_string());
    LaurentPoly r = shifted(-(lo + hi) / 2);
    r.symmetrized_ = true;
    return r;
}

LaurentPoly LaurentPoly::canonical_unit() const {
    if (is_zero()) return *this;
    LaurentPoly r = shifted(-min_exponent());
    if (r.terms_.rbegin()->second < 0) r = -r;
    return r;
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Integer a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (e == 0) {
            os << concord::to_string(a);
        } else {
            if (a != 1) os << concord::to_string(a) << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b) {
    return a * b;
}

LaurentPoly poly_divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw NotDivisible("division by the zero polynomial");
    if (num.is_zero()) return LaurentPoly::zero();

    const auto q_lo = num.min_exponent() - den.min_exponent();
    const auto q_hi = num.max_exponent() - den.max_exponent();
    if (q_hi < q_lo) throw NotDivisible(num.to_string() + " not divisible by " + den.to_string());

    LaurentPoly quotient;
    LaurentPoly rem = num;
    const Integer den_low = den.coeff(den.min_exponent());
    while (!rem.is_zero()) {
        const auto e = rem.min_exponent() - den.min_exponent();
        if (e < q_lo || e > q_hi)
            throw NotDivisible(num.to_string() + " not divisible by " + den.to_string());
        const Integer c = rem.coeff(rem.min_exponent());
        if (!mpz_divisible_p(c.get_mpz_t(), den_low.get_mpz_t()))
            throw NotDivisible(num.to_string() + " not divisible by " + den.to_string());
        const LaurentPoly factor = LaurentPoly::term(e, c / den_low);
        quotient = quotient + factor;
        rem = rem - factor * den;
    }
    return quotient;
}

}  // namespace concord
