#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qforms/forms.hpp>
#include <qforms/hypergeom.hpp>

#include "oracles.hpp"

using namespace qforms;
using namespace qforms::hypergeom;

TEST_CASE("pfq against direct pochhammer oracle") {
    PSeries f = f21(rat(1, 2), rat(1, 2), Rat(1), 8);
    CHECK(f.coeff(0) == 1);
    CHECK(f.coeff(1) == rat(1, 4));
    CHECK(f.coeff(2) == rat(9, 64));
    CHECK(f.coeff(3) == rat(25, 256));
    CHECK(PSeries::agree(f, oracles::pfq_direct({rat(1, 2), rat(1, 2)}, {Rat(1)}, 8)));

    HypergeomParams p{{rat(1, 6), rat(1, 2), rat(5, 6)}, {Rat(1), Rat(1)}};
    CHECK(PSeries::agree(pfq(p, 10), oracles::pfq_direct(p.upper, p.lower, 10)));

    CHECK_THROWS_AS(pfq({{rat(1, 2)}, {Rat(0)}}, 5), std::domain_error);
    CHECK_THROWS_AS(pfq({{rat(1, 2)}, {Rat(-3)}}, 5), std::domain_error);
}

TEST_CASE("3F2(1/6,1/2,5/6;1,1;1728z) has coefficients (6n)!/((3n)!(n!)^3)") {
    PSeries f = pfq({{rat(1, 6), rat(1, 2), rat(5, 6)}, {Rat(1), Rat(1)}}, 6);
    PSeries z = PSeries::monomial(rat(1728), 1);
    PSeries scaled = f.compose(z.truncated_order(6));
    for (long n = 0; n <= 6; ++n) {
        Rat expect(factorial(6 * n), factorial(3 * n) * rat_pow(Rat(factorial(n)), 3).get_num());
        expect.canonicalize();
        CHECK(scaled.coeff(n) == expect);
    }
}

TEST_CASE("hypergeometric ODE residuals") {
    for (auto [a, b] : std::vector<std::pair<Rat, Rat>>{{rat(1, 6), rat(1, 6)},
                                                        {rat(1, 6), rat(1, 3)},
                                                        {rat(1, 2), rat(1, 2)},
                                                        {rat(1, 12), rat(5, 12)}}) {
        PSeries f = f21(a, b, Rat(1), 30);
        PSeries res = hg_ode_residual(a, b, f);
        CHECK(res.is_zero());
        CHECK(Rat(28) < PSeries::agree_prec_exp(res, PSeries::zero()));
    }
    // constant 1 with ab = 0
    CHECK(hg_ode_residual(Rat(0), Rat(0), PSeries::one().truncated_order(10)).is_zero());
}

TEST_CASE("2F1 is symmetric in a and b") {
    CHECK(PSeries::agree(f21(rat(1, 6), rat(1, 3), Rat(1), 20),
                         f21(rat(1, 3), rat(1, 6), Rat(1), 20)));
}

TEST_CASE("transformations") {
    VerificationReport rep;
    transform_check(rep, Transform::euler, rat(1, 6), rat(1, 6), 25);
    transform_check(rep, Transform::kummer_quadratic, rat(1, 12), rat(5, 12), 25);
    transform_check(rep, Transform::quadratic_abm1, rat(1, 3), rat(1, 3), 25);
    transform_check(rep, Transform::clausen, rat(1, 12), rat(5, 12), 30);
    transform_check(rep, Transform::clausen, rat(1, 6), rat(1, 3), 30);
    for (const auto& it : rep.items) {
        INFO(it.id, ": ", it.detail);
        CHECK(it.status == Status::pass);
    }
}

TEST_CASE("clausen cross-checked against squared oracle") {
    // both routes through the oracle: oracle 2F1 squared vs oracle 3F2
    Rat a = rat(1, 4), b = rat(1, 4);
    PSeries lhs = oracles::pfq_direct({a, b}, {a + b + rat(1, 2)}, 15);
    lhs = lhs * lhs;
    PSeries rhs = oracles::pfq_direct({Rat(2) * a, a + b, Rat(2) * b},
                                      {a + b + rat(1, 2), Rat(2) * (a + b)}, 15);
    CHECK(PSeries::agree(lhs, rhs));
}

TEST_CASE("classical E4 identity") {
    VerificationReport rep;
    classical_e4_check(rep, 30);
    for (const auto& it : rep.items) {
        INFO(it.id, ": ", it.detail);
        CHECK(it.status == Status::pass);
    }
    // spot value: coefficient of q in 2F1(...,1728/j)^4 is 240
    PSeries lhs = f21(rat(1, 12), rat(5, 12), Rat(1), 3).compose(forms::haupt(1, 3)).pow(4);
    CHECK(lhs.coeff(1) == 240);
}
