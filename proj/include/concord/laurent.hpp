#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "concord/rational.hpp"

namespace concord {

// Exact integer Laurent polynomial in one variable t.
//
// Terms are stored sparsely; no zero coefficient is ever kept, and the zero
// polynomial is the empty map. Exponents are machine integers (they stay
// tiny at desk scale), coefficients arbitrary precision. A polynomial
// carries a `symmetrized` flag once it has been balanced around exponent 0;
// arithmetic results are always unflagged.
class LaurentPoly {
public:
    using Exponent = std::int64_t;
    using Terms = std::map<Exponent, Integer>;

    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return term(0, 1); }
    static LaurentPoly variable() { return term(1, 1); }
    static LaurentPoly term(Exponent e, Integer c);
    static LaurentPoly from_terms(const std::vector<std::pair<Exponent, long long>>& terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    // min/max exponent require a nonzero polynomial.
    Exponent min_exponent() const;
    Exponent max_exponent() const;
    Integer coeff(Exponent e) const;
    std::size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }
    bool symmetrized() const { return symmetrized_; }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly shifted(Exponent k) const;            // multiply by t^k
    LaurentPoly substituted_power(Exponent r) const;  // t -> t^r, r nonzero
    Integer evaluated_at_one() const;

    // coeff(min + i) == coeff(max - i) for all i.
    bool is_palindromic() const;

    // Balance a palindromic polynomial around exponent 0 by shifting with
    // t^(-(max+min)/2). Throws NotPalindromic / OddSpan.
    LaurentPoly symmetrize() const;

    // Representative of the unit class {±t^k · p}: minimal exponent 0 and
    // positive leading coefficient.
    LaurentPoly canonical_unit() const;

    std::string to_string() const;

private:
    Terms terms_;
    bool symmetrized_ = false;

    void add_term(Exponent e, const Integer& c);
};

LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b);

// Exact quotient in the Laurent ring; throws NotDivisible when the divisor
// does not divide (a caller bug in this codebase, never user input).
LaurentPoly poly_divide_exact(const LaurentPoly& num, const LaurentPoly& den);

}  // namespace concord
