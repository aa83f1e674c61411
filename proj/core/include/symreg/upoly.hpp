#pragma once

// Dense univariate polynomials with arbitrary-precision integer coefficients,
// cyclotomic polynomials, and the Hilbert-series quotient
//
//     prod_i (1 - t^{d_i}) / prod_{i=1..n} (1 - t^i),
//
// whose integrality is equivalent to the divisor-count condition on the
// degree multiset (beta_i >= floor(n/i) for every i).

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace symreg::upoly {

using Int = mpz_class;

// Coefficient vector indexed by exponent; highest stored coefficient nonzero
// (the zero polynomial has an empty vector).
struct IntPoly {
    std::vector<Int> c;

    static IntPoly zero() { return {}; }
    static IntPoly one() { return IntPoly{{Int(1)}}; }
    // 1 - t^k
    static IntPoly one_minus_power(int k);

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    Int coeff(int k) const;
    void normalize();  // strip leading zeros

    bool operator==(const IntPoly&) const = default;
};

IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);

// Exact division: returns q with num = q * den, or nullopt if the remainder
// is nonzero or the quotient is not integral.  Division is carried out over
// the rationals and the result is checked for integrality, so no assumption
// on leading coefficients is needed.  Requires den != 0.
std::optional<IntPoly> poly_exact_div(const IntPoly& num, const IntPoly& den);

// The d-th cyclotomic polynomial, via (t^d - 1) = prod_{e | d} Phi_e(t).
// Memoized; the returned reference stays valid for the process lifetime.
const IntPoly& cyclotomic(int d);

// Outcome of the Hilbert quotient.  When integral == false the quotient does
// not exist as a polynomial (the degree multiset fails the divisor-count
// condition) and the remaining fields are meaningless.  nonnegative is
// advisory only: a nonnegative quotient does NOT certify a regular sequence.
struct HilbertResult {
    bool integral = false;
    IntPoly quotient;
    bool nonnegative = false;
    Int coeff_sum;  // equals prod(d_i) / n! when integral
};

// prod_i (1 - t^{d_i}) / prod_{i=1..n} (1 - t^i) for the n given degrees.
// All degrees must be >= 1.
HilbertResult hilbert_quotient(const std::vector<int>& degrees);

// "1 + t + 2*t^3 - t^4"; "0" for the zero polynomial.
std::string to_string(const IntPoly& p);

}  // namespace symreg::upoly
