#pragma once

// Sparse multivariate polynomials over Q with an optional per-variable
// weighted grading.  Two gradings appear throughout:
//
//   * x-coordinates: n variables x1..xn, all of weight 1;
//   * e-coordinates: n variables e1..en with weights (1, 2, ..., n), in which
//     a polynomial expression in the elementary symmetric polynomials is
//     weighted-homogeneous exactly when its x-expansion is homogeneous.
//
// A "SymExpr" is by convention an MPoly in e-coordinates; expand_sym
// substitutes e_i -> elementary(n, i) to land back in x-coordinates.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symreg::mpoly {

using Rat = mpq_class;

// Exponent vector, one entry per variable.
using Monomial = std::vector<int>;

int total_degree(const Monomial& m);
long weighted_degree(const Monomial& m, const std::vector<int>& weights);

struct MPoly {
    int nvars = 0;
    std::vector<int> weights;            // per-variable positive weights
    std::map<Monomial, Rat> terms;       // only nonzero coefficients stored

    static MPoly zero(int nvars);
    static MPoly zero_weighted(int nvars, std::vector<int> weights);
    static MPoly constant(int nvars, const Rat& c);
    static MPoly variable(int nvars, int index1);  // 1-based

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const;
    // The weighted degree when all terms agree on it, nullopt otherwise.
    std::optional<long> homogeneous_degree() const;

    bool operator==(const MPoly&) const = default;
};

MPoly operator+(const MPoly& a, const MPoly& b);
MPoly operator-(const MPoly& a, const MPoly& b);
MPoly operator-(const MPoly& a);
MPoly operator*(const MPoly& a, const MPoly& b);
MPoly operator*(const Rat& c, const MPoly& a);
MPoly pow(const MPoly& a, int k);

// --- symmetric generators (x-coordinates, weights all 1) ---

// e_i(x_1..x_n): all C(n, i) squarefree degree-i monomials.
MPoly elementary(int n, int i);

// P_a = x_1^a + ... + x_n^a.
MPoly power_sum_poly(int n, int a);

// prod_{i<j} (x_j - x_i), homogeneous of degree n(n-1)/2, alternating.
MPoly vandermonde(int n);

// --- e-coordinates ---

// Weights (1, 2, ..., n).
std::vector<int> sym_weights(int n);

// The zero / constant / generator e_i as an e-coordinate polynomial.
MPoly sym_zero(int n);
MPoly sym_constant(int n, const Rat& c);
MPoly sym_e(int n, int i);

// Substitute e_i -> elementary(n, i); the result is in x-coordinates and its
// standard degree equals the weighted degree of the input (termwise).
MPoly expand_sym(const MPoly& s, int n);

// --- symmetry tests (x-coordinates) ---

// Checked on the n-1 adjacent transpositions, which generate S_n.
bool is_symmetric(const MPoly& p);
bool is_alternating(const MPoly& p);

// Apply the transposition of variables i and i+1 (1-based) to every monomial.
MPoly swap_adjacent(const MPoly& p, int i);

// --- the S^(2,2) generator pair (n = 4) ---

// For symmetric h (degree a-2) and hp (degree a-4), either possibly zero:
//   g1 = H*(x1-x2)(x3-x4) + H'*(x1^2-x2^2)(x3^2-x4^2)
//   g2 = H*(x1-x3)(x2-x4) + H'*(x1^2-x3^2)(x2^2-x4^2)
// where H, H' are the x-expansions of h, hp.  Both outputs are homogeneous of
// degree a.  Throws std::invalid_argument when the degrees are incompatible.
std::pair<MPoly, MPoly> specht_s22_pair(const MPoly& h, const MPoly& hp);

// --- text format ---

// Canonical rendering, e.g. "3*e2^2*e4 - e3^2" or "x1^2*x3 + 1/2*x2".
// prefix is the variable letter ('x' or 'e').
std::string format_mpoly(const MPoly& p, char prefix);

// Parse the text format (whitespace-insensitive; supports parentheses,
// '^' powers, rational coefficients).  Variables must use the given prefix
// with 1-based indices up to nvars.  e-prefix polynomials get weights
// (1..n), x-prefix all 1.  Throws std::invalid_argument on malformed input.
MPoly parse_mpoly(const std::string& text, int nvars, char prefix);

// Parse with the prefix ('x' or 'e') and the variable count inferred from
// the highest index appearing in the text; returns the polynomial and the
// detected prefix.  Constant input defaults to prefix 'x' with zero
// variables; callers that need a fixed ambient count should use parse_mpoly.
std::pair<MPoly, char> parse_mpoly_auto(const std::string& text);

}  // namespace symreg::mpoly
