#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "symreg/groebner.hpp"
#include "symreg/mpoly.hpp"

using namespace symreg::groebner;
using symreg::mpoly::MPoly;
using symreg::mpoly::Rat;
using symreg::mpoly::sym_e;
using symreg::mpoly::sym_weights;

namespace {

MPoly var(int n, int i) { return MPoly::variable(n, i); }

MPoly mono(int n, std::vector<int> exps) {
    MPoly p = MPoly::constant(n, 1);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < exps[i]; ++k) p = p * var(n, i + 1);
    return p;
}

bool divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

}  // namespace

TEST_CASE("mono_less: weighted degrevlex basics") {
    TermOrder o{{1, 1}};
    // total degree dominates
    CHECK(mono_less({1, 0}, {1, 1}, o));
    CHECK_FALSE(mono_less({2, 0}, {0, 1}, o));
    // among equal degrees the larger trailing exponent is smaller
    CHECK(mono_less({1, 1}, {2, 0}, o));
    CHECK(mono_less({0, 2}, {1, 1}, o));
    CHECK_FALSE(mono_less({2, 0}, {2, 0}, o));  // strict

    TermOrder w{{1, 2}};
    // weights change the degree comparison: x2 has degree 2, x1^3 degree 3
    CHECK(mono_less({0, 1}, {3, 0}, w));
    CHECK(mono_less({0, 1}, {2, 0}, w));  // degree 2 tie -> larger x2 exponent smaller
    CHECK_FALSE(mono_less({2, 0}, {0, 1}, w));
}

TEST_CASE("leading_monomial") {
    TermOrder o{{1, 1}};
    MPoly p = mono(2, {1, 1}) + mono(2, {2, 0}) + var(2, 2);
    CHECK(leading_monomial(p, o) == Monomial{2, 0});
}

TEST_CASE("buchberger: frozen basis for a small homogeneous ideal") {
    TermOrder o{{1, 1}};
    std::vector<MPoly> gens = {mono(2, {2, 0}) - mono(2, {0, 2}), mono(2, {1, 1})};
    GBResult r = buchberger(gens, o);
    REQUIRE_FALSE(r.budget_exceeded);
    REQUIRE(r.basis.size() == 3);
    // reduced basis: x1*x2, x1^2 - x2^2, x2^3
    CHECK(r.basis[0] == mono(2, {1, 1}));
    CHECK(r.basis[1] == mono(2, {2, 0}) - mono(2, {0, 2}));
    CHECK(r.basis[2] == mono(2, {0, 3}));
}

TEST_CASE("buchberger: reduced-basis invariants and determinism") {
    TermOrder o{{1, 1, 1}};
    std::vector<MPoly> gens = {
        var(3, 1) * var(3, 2) - var(3, 3) * var(3, 3),
        var(3, 2) * var(3, 2) + var(3, 1) * var(3, 3),
        var(3, 1) * var(3, 1) * var(3, 2) - var(3, 2) * var(3, 3) * var(3, 3),
    };
    GBResult r1 = buchberger(gens, o);
    GBResult r2 = buchberger(gens, o);
    REQUIRE_FALSE(r1.budget_exceeded);
    CHECK(r1.basis == r2.basis);  // deterministic
    std::vector<Monomial> lts;
    for (const MPoly& g : r1.basis) {
        Monomial lt = leading_monomial(g, o);
        CHECK(g.terms.at(lt) == Rat(1));  // monic
        lts.push_back(lt);
    }
    for (std::size_t i = 0; i < lts.size(); ++i)
        for (std::size_t j = 0; j < lts.size(); ++j) {
            if (i == j) continue;
            CHECK_FALSE(divides(lts[i], lts[j]));  // minimal
        }
    // tail-reduced: no non-leading term divisible by any leading term
    for (const MPoly& g : r1.basis) {
        Monomial lt = leading_monomial(g, o);
        for (const auto& [m, c] : g.terms) {
            if (m == lt) continue;
            for (const Monomial& other : lts) CHECK_FALSE(divides(other, m));
        }
    }
}

TEST_CASE("buchberger: tiny budget reports exhaustion") {
    TermOrder o{{1, 1, 1}};
    // every pair of leading monomials overlaps, so S-polynomials genuinely reduce
    std::vector<MPoly> gens = {
        var(3, 1) * var(3, 2) + var(3, 3) * var(3, 3),
        var(3, 2) * var(3, 3) + var(3, 1) * var(3, 1),
        var(3, 1) * var(3, 3) + var(3, 2) * var(3, 2),
    };
    GBResult r = buchberger(gens, o, Budget{1, 0});
    CHECK(r.budget_exceeded);
}

TEST_CASE("is_zero_dimensional_homogeneous: pure powers, missing directions, unit ideal") {
    TermOrder o{{1, 1, 1}};
    std::vector<MPoly> pure = {mono(3, {2, 0, 0}), mono(3, {0, 3, 0}), mono(3, {0, 0, 1})};
    CHECK(is_zero_dimensional_homogeneous(pure, o) == Cert::Yes);

    std::vector<MPoly> line = {mono(3, {2, 0, 0}), mono(3, {0, 3, 0})};
    CHECK(is_zero_dimensional_homogeneous(line, o) == Cert::No);

    std::vector<MPoly> unit = {MPoly::constant(3, 1)};
    CHECK(is_zero_dimensional_homogeneous(unit, o) == Cert::Yes);
}

TEST_CASE("verify_regular_maximal: standard examples") {
    std::vector<int> w1{1, 1, 1};
    std::vector<MPoly> pure = {mono(3, {4, 0, 0}), mono(3, {0, 2, 0}), mono(3, {0, 0, 5})};
    CHECK(verify_regular_maximal(pure, w1) == Cert::Yes);

    // repeated generator leaves a line
    std::vector<MPoly> rep = {mono(3, {2, 0, 0}), mono(3, {2, 0, 0}), mono(3, {0, 2, 0})};
    CHECK(verify_regular_maximal(rep, w1) == Cert::No);

    // zero entry cannot be completed
    std::vector<MPoly> withzero = {MPoly::zero(2), mono(2, {0, 2})};
    CHECK(verify_regular_maximal(withzero, {1, 1}) == Cert::No);

    // elementary symmetric polynomials of 4 variables form a regular sequence
    std::vector<MPoly> esys;
    for (int i = 1; i <= 4; ++i) esys.push_back(symreg::mpoly::elementary(4, i));
    CHECK(verify_regular_maximal(esys, {1, 1, 1, 1}) == Cert::Yes);

    // power sums 1..3 likewise
    std::vector<MPoly> psys;
    for (int a = 1; a <= 3; ++a) psys.push_back(symreg::mpoly::power_sum_poly(3, a));
    CHECK(verify_regular_maximal(psys, w1) == Cert::Yes);

    // x1^2, x1*x2 has a common zero line x1 = 0
    std::vector<MPoly> degen = {mono(2, {2, 0}), mono(2, {1, 1})};
    CHECK(verify_regular_maximal(degen, {1, 1}) == Cert::No);
}

TEST_CASE("verify_regular_maximal: weighted coordinates") {
    // free generators in disguise: pure powers of distinct e-variables
    std::vector<MPoly> freeish = {sym_e(4, 1), sym_e(4, 3), sym_e(4, 2) * sym_e(4, 2), sym_e(4, 4)};
    CHECK(verify_regular_maximal(freeish, sym_weights(4)) == Cert::Yes);

    // e2 = -e1^2 on the zero locus forces e1^3 = 0
    std::vector<MPoly> mixed = {sym_e(2, 1) * sym_e(2, 1) + sym_e(2, 2), sym_e(2, 1) * sym_e(2, 2)};
    CHECK(verify_regular_maximal(mixed, sym_weights(2)) == Cert::Yes);

    // both vanish on the coordinate line e1 = 0
    std::vector<MPoly> bad = {sym_e(2, 1) * sym_e(2, 1), sym_e(2, 1) * sym_e(2, 2)};
    CHECK(verify_regular_maximal(bad, sym_weights(2)) == Cert::No);
}

TEST_CASE("verify_regular_maximal: input validation") {
    std::vector<MPoly> tooshort = {mono(2, {2, 0})};
    CHECK_THROWS_AS(verify_regular_maximal(tooshort, {1, 1}), std::invalid_argument);
    std::vector<MPoly> inhom = {var(2, 1) + var(2, 1) * var(2, 2), mono(2, {0, 2})};
    CHECK_THROWS_AS(verify_regular_maximal(inhom, {1, 1}), std::invalid_argument);
}

TEST_CASE("verify_regular_partial: codimension checks") {
    // a single nonzero homogeneous polynomial is always regular
    std::vector<MPoly> one = {mono(3, {1, 1, 0})};
    CHECK(verify_regular_partial(one, {1, 1, 1}) == Cert::Yes);

    // x1*x2, x1*x3 cuts out a codimension-1 set, not 2
    std::vector<MPoly> bad = {mono(3, {1, 1, 0}), mono(3, {1, 0, 1})};
    CHECK(verify_regular_partial(bad, {1, 1, 1}) == Cert::No);

    // x1^2, x2^2 is fine in 3 variables
    std::vector<MPoly> good = {mono(3, {2, 0, 0}), mono(3, {0, 2, 0})};
    CHECK(verify_regular_partial(good, {1, 1, 1}) == Cert::Yes);

    std::vector<MPoly> withzero = {MPoly::zero(3), mono(3, {0, 2, 0})};
    CHECK(verify_regular_partial(withzero, {1, 1, 1}) == Cert::No);

    CHECK(verify_regular_partial({}, {1, 1}) == Cert::Yes);

    std::vector<MPoly> toolong = {mono(2, {2, 0}), mono(2, {0, 2})};
    CHECK_THROWS_AS(verify_regular_partial(toolong, {1, 1}), std::invalid_argument);
}

TEST_CASE("budget exhaustion surfaces as Budget, never a verdict") {
    // the homogeneous cyclic-5 system: cyclic sums of k consecutive
    // variables, degrees 1..5 -- far more reduction work than one step allows
    std::vector<MPoly> sys;
    for (int k = 1; k <= 5; ++k) {
        MPoly ck = MPoly::zero(5);
        for (int s = 0; s < 5; ++s) {
            MPoly term = MPoly::constant(5, 1);
            for (int j = 0; j < k; ++j) term = term * var(5, 1 + (s + j) % 5);
            ck = ck + term;
        }
        sys.push_back(ck);
    }
    CHECK(verify_regular_maximal(sys, {1, 1, 1, 1, 1}, Budget{1, 0}) == Cert::Budget);
}
