#pragma once

// Buchberger-based certification that a homogeneous sequence is regular.
// A length-n homogeneous sequence in n variables is regular exactly when its
// common zero locus is the origin, which is read off a Groebner basis: every
// variable must appear as a pure power among the leading terms.  Shorter
// sequences are regular when the leading-term ideal has codimension equal to
// the sequence length.
//
// Everything runs over Q with a weighted degrevlex order so that the same
// machinery serves both x-coordinates (weights all 1) and e-coordinates
// (weights 1..n).  A step budget turns worst-case blowup into an explicit
// Budget outcome instead of a hang; callers must surface it as "unknown",
// never as a verdict.

#include <vector>

#include "symreg/mpoly.hpp"

namespace symreg::groebner {

using mpoly::Monomial;
using mpoly::MPoly;

// Weighted degree-reverse-lexicographic order.
struct TermOrder {
    std::vector<int> weights;  // one positive weight per variable
};

// a < b in the order (strict).
bool mono_less(const Monomial& a, const Monomial& b, const TermOrder& order);

// Leading monomial of a nonzero polynomial under the order.
Monomial leading_monomial(const MPoly& p, const TermOrder& order);

struct Budget {
    long max_steps = 50000;  // elementary reduction steps across the whole run
    long max_millis = 0;     // wall-clock cap; 0 disables
};

// Three-valued outcome of a certification query.
enum class Cert { No = 0, Yes = 1, Budget = 2 };

struct GBResult {
    bool budget_exceeded = false;
    std::vector<MPoly> basis;  // reduced basis: monic, minimal, tail-reduced, sorted
    long steps = 0;            // reduction steps consumed
};

// Reduced Groebner basis of the ideal generated by gens (zero entries are
// ignored).  Pair selection is the normal strategy: lowest weighted lcm
// degree first, ties broken by creation order; pairs with coprime leading
// terms are skipped.  Deterministic.
GBResult buchberger(const std::vector<MPoly>& gens, const TermOrder& order, const Budget& budget = {});

// True iff the common zero locus of the homogeneous gens is {0} (or empty,
// when the ideal is the whole ring): every variable has a pure power among
// the basis leading terms.
Cert is_zero_dimensional_homogeneous(const std::vector<MPoly>& gens, const TermOrder& order,
                                     const Budget& budget = {});

// Regularity of a maximal (length n = #vars) homogeneous sequence.  Inputs
// must be homogeneous w.r.t. the weights; throws std::invalid_argument on a
// length or homogeneity violation.
Cert verify_regular_maximal(const std::vector<MPoly>& seq, const std::vector<int>& weights,
                            const Budget& budget = {});

// Regularity of a partial (length t < n) homogeneous sequence: true iff the
// ideal has codimension t, computed as n minus the dimension of the
// leading-term ideal.  A zero entry makes the sequence irregular outright.
Cert verify_regular_partial(const std::vector<MPoly>& seq, const std::vector<int>& weights,
                            const Budget& budget = {});

}  // namespace symreg::groebner
