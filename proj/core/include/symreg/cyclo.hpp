#pragma once

// Exact arithmetic in the group ring Z[zeta_d].  Elements are kept in
// group-ring form (a length-d integer coefficient vector indexed by the
// exponent of zeta_d), which makes power-sum evaluation pure index
// arithmetic.  The representation is not canonical: equality and zero tests
// reduce modulo the d-th cyclotomic polynomial.

#include <memory>
#include <vector>

namespace symreg::cyclo {

// Element of Z[zeta_d]: coeffs[k] is the coefficient of zeta_d^k, length exactly d.
struct CycElt {
    int d = 1;
    std::vector<long long> coeffs;

    static CycElt zero(int d);
    static CycElt one(int d);
    // zeta_d^k (k taken mod d)
    static CycElt root(int d, long long k);
};

CycElt cyc_add(const CycElt& a, const CycElt& b);  // throws on modulus mismatch
CycElt cyc_mul(const CycElt& a, const CycElt& b);  // exponents add mod d

// True iff the element is 0 in Z[zeta_d] (reduction mod the d-th cyclotomic).
bool cyc_is_zero(const CycElt& a);

// Exact equality in Z[zeta_d].
bool cyc_equal(const CycElt& a, const CycElt& b);

// Reduction table for one modulus: remainders of t^k modulo the d-th
// cyclotomic polynomial, as integer vectors of length phi(d).  Lets callers
// run many zero tests without touching the shared memo table.
class Reducer {
public:
    explicit Reducer(int d);
    int modulus() const { return d_; }
    int phi() const { return static_cast<int>(rows_.empty() ? 0 : rows_[0].size()); }
    // coeffs must have length d (group-ring form).
    bool is_zero(const std::vector<long long>& coeffs) const;

private:
    int d_;
    std::vector<std::vector<long long>> rows_;  // rows_[k] = t^k mod Phi_d
};

// Shared memoized reducer for a modulus (thread-safe lookup).
std::shared_ptr<const Reducer> shared_reducer(int d);

// A point Q = (zeta^{b_1}, ..., zeta^{b_n}) with all coordinates d-th roots
// of unity and at least one coordinate equal to 1.  Exponents are stored
// sorted, so equal multisets compare equal; symmetric polynomials only see
// the multiset.
struct RootPoint {
    int d = 1;
    int n = 0;
    std::vector<int> exponents;  // sorted, each in [0, d), at least one 0

    bool operator==(const RootPoint&) const = default;
};

// Sorts exponents and validates the invariants; throws std::invalid_argument
// on a violation.
RootPoint make_root_point(int d, std::vector<int> exponents);

// P_a(Q) = sum_i zeta^{a * b_i} as an element of Z[zeta_d].
CycElt power_sum_at(long long a, const RootPoint& Q);

// e_j(Q), the j-th elementary symmetric polynomial of the coordinates.
CycElt elementary_at(int j, const RootPoint& Q);

// Galois action gamma_s(zeta^k) = zeta^{sk}; requires gcd(s, d) = 1.
CycElt galois_conj(const CycElt& a, long long s);

}  // namespace symreg::cyclo
