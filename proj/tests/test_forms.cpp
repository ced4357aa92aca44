#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qforms/forms.hpp>

#include "oracles.hpp"

using namespace qforms;

TEST_CASE("Eisenstein series against divisor-sum oracle") {
    for (long k : {2, 4, 6, 8})
        CHECK(PSeries::agree(forms::eisenstein(k, 30), oracles::eisenstein(k, 30)));
    PSeries e4 = forms::eisenstein(4, 5);
    CHECK(e4.coeff(1) == 240);
    CHECK(e4.coeff(2) == 2160);
    CHECK(e4.coeff(3) == 6720);
    PSeries e6 = forms::eisenstein(6, 3);
    CHECK(e6.coeff(1) == -504);
    CHECK(e6.coeff(2) == -16632);
}

TEST_CASE("eta against pentagonal-number oracle") {
    PSeries eta = forms::eta(30);
    CHECK(PSeries::agree(eta, oracles::eta_pentagonal(30)));
    CHECK(eta.val_exp() == rat(1, 24));
    CHECK(eta.coeff(rat(25, 24)) == -1);   // q^{1/24}(1 - q - q^2 + q^5 + q^7 - ...)
    CHECK(eta.coeff(rat(49, 24)) == -1);
    CHECK(eta.coeff(rat(121, 24)) == 1);
    CHECK(eta.coeff(rat(169, 24)) == 1);
}

TEST_CASE("theta series against lattice-sum oracle") {
    for (int w : {2, 3, 4})
        CHECK(PSeries::agree(forms::theta(w, 30), oracles::theta_lattice(w, 30)));
    PSeries t2 = forms::theta(2, 8);
    CHECK(t2.val_exp() == rat(1, 4));
    CHECK(t2.coeff(rat(1, 4)) == 2);
    CHECK(t2.coeff(rat(9, 4)) == 2);
    CHECK(t2.coeff(rat(25, 4)) == 2);
    PSeries t3 = forms::theta(3, 8);
    CHECK(t3.coeff(0) == 1);
    CHECK(t3.coeff(1) == 2);
    CHECK(t3.coeff(4) == 2);
    CHECK(t3.coeff(2) == 0);
}

TEST_CASE("j-invariant") {
    PSeries j = forms::j_invariant(3);
    CHECK(j.coeff(-1) == 1);
    CHECK(j.coeff(0) == 744);
    CHECK(j.coeff(1) == 196884);
    CHECK(j.coeff(2) == 21493760);
    CHECK(j.coeff(3) == 864299970);
    // j from oracle-built ingredients
    PSeries oracle_j = oracles::eisenstein(4, 11).pow(3) /
                       (oracles::eta_pentagonal(11).pow(24));
    CHECK(PSeries::agree(forms::j_invariant(9), oracle_j));
}

TEST_CASE("delta equals eta^24") {
    CHECK(PSeries::agree(forms::delta(20), oracles::eta_pentagonal(21).pow(24)));
}

TEST_CASE("E8 = E4^2") {
    CHECK(PSeries::agree(forms::eisenstein(8, 30), forms::eisenstein(4, 30).pow(2)));
}

TEST_CASE("1 - haupt1 = E6^2/E4^3") {
    long n = 30;
    PSeries lhs = PSeries::one() - forms::haupt(1, n);
    PSeries rhs = forms::eisenstein(6, n).pow(2) / forms::eisenstein(4, n).pow(3);
    CHECK(PSeries::agree(lhs, rhs));
    // and the square root matches E6/E4^{3/2} (principal branch)
    PSeries s = forms::sqrt_one_minus_1728_over_j(20);
    PSeries alt = forms::eisenstein(6, 21) * forms::eisenstein(4, 21).pow(rat(-3, 2));
    CHECK(PSeries::agree(s, alt));
    CHECK(s.coeff(0) == 1);
    CHECK(s.coeff(1) == -864);
}

TEST_CASE("Hauptmoduls have valuation 1") {
    for (int w : {1, 2, 3, 4}) {
        PSeries h = forms::haupt(w, 10);
        CHECK(h.val_exp() == 1);
    }
    PSeries h3 = forms::haupt(3, 6);
    CHECK(h3.coeff(1) == -27);   // s3 = -27q - 324q^2 - ...
    CHECK(h3.coeff(2) == -324);
    PSeries h2 = forms::haupt(2, 4);
    CHECK(h2.coeff(1) == -64);
    PSeries h4 = forms::haupt(4, 4);
    CHECK(h4.coeff(1) == 16);
    // haupt3 from the eta oracle directly
    PSeries eta3 = oracles::eta_pentagonal(25).rescale(3);
    PSeries viaeta = Rat(-27) * eta3.pow(12) / oracles::eta_pentagonal(25).pow(12);
    CHECK(PSeries::agree(forms::haupt(3, 20), viaeta));
}

TEST_CASE("ramanujan system") {
    VerificationReport rep;
    forms::ramanujan_check(rep, 50);
    for (const auto& it : rep.items) CHECK(it.status == Status::pass);
    CHECK(rep.items.size() == 3);
}

TEST_CASE("jacobi quartic and theta sqrt") {
    VerificationReport rep;
    forms::theta_jacobi_check(rep, 40);
    for (const auto& it : rep.items) CHECK(it.status == Status::pass);
}

TEST_CASE("weight-1 pairs") {
    auto pa = forms::weight1_pair('a', 10);
    CHECK(pa.a == rat(1, 2));
    CHECK(PSeries::agree(pa.h, forms::theta(4, 10).pow(2)));
    auto pb = forms::weight1_pair('b', 10);
    CHECK(pb.h.coeff(0) == 1);  // (1 + 12q + ...)^{1/2}
    CHECK(pb.h.coeff(1) == 6);
    auto pc = forms::weight1_pair('c', 10);
    CHECK(pc.h.coeff(0) == 1);
    CHECK(pc.h.coeff(1) == 12);
    auto pd = forms::weight1_pair('d', 10);
    CHECK(pd.t.val_exp() == 1);
    CHECK(pd.t.coeff(1) == -432);
    CHECK(PSeries::agree(pd.h.pow(4), forms::eisenstein(4, 10)));
}

TEST_CASE("build dispatch and determinism") {
    CHECK(PSeries::agree(forms::build("E4", 10), forms::eisenstein(4, 10)));
    CHECK(PSeries::agree(forms::build("haupt3", 10), forms::haupt(3, 10)));
    CHECK_THROWS_AS(forms::build("nope", 10), std::domain_error);
    CHECK_THROWS_AS(forms::build("E4", 0), std::domain_error);
    // same spec, identical coefficients
    CHECK(forms::build("j", 12).dump_str() == forms::build("j", 12).dump_str());
}
