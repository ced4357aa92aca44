#pragma once

// Classical one-variable modular objects as exact q-expansions: Eisenstein
// series, Dedekind eta, Jacobi theta series, the j-invariant and the
// Hauptmodul t-series, plus the weight-1 (h, t) pairs.  Heavy eta/theta
// quotients are assembled from the integer-exponent product tails so only
// the final objects carry fractional exponents.

#include <qforms/pseries.hpp>
#include <qforms/report.hpp>

#include <string>
#include <vector>

namespace qforms::forms {

// E_k = 1 - (2k/B_k) sum_{n>=1} sigma_{k-1}(n) q^n, k in {2,4,6,8}
PSeries eisenstein(long k, long order);
// prod_{n>=1} (1 - q^n)
PSeries euler_tail(long order);
// q^{1/24} prod (1 - q^n)
PSeries eta(long order);
// theta_2 = 2 q^{1/4} prod (1-q^{2n})(1+q^{2n})^2, theta_3, theta_4 likewise
PSeries theta(int which, long order);
// eta^24 = q prod (1-q^n)^24
PSeries delta(long order);
// j = E4^3 / eta^24; valuation -1
PSeries j_invariant(long order);
// 1: 1728/j   2: -64 eta(2t)^24/eta(t)^24   3: -27 eta(3t)^12/eta(t)^12
// 4: theta2^4/theta3^4
PSeries haupt(int n, long order);
// principal branch of sqrt(1 - 1728/j), constant term +1
PSeries sqrt_one_minus_1728_over_j(long order);
// t = (sqrt(1-1728/j) - 1)/(sqrt(1-1728/j) + 1); t = -432q + ...
PSeries t_hauptmodul_ex41(long order);

struct Weight1Pair {
    PSeries h;  // weight-1 q-series, constant term 1 (theta4^2 for case a)
    PSeries t;  // companion Hauptmodul, valuation 1
    Rat a;      // hypergeometric parameter of the case
};
// which in {'a','b','c','d'} for a = 1/2, 1/3, 1/4, 1/6
Weight1Pair weight1_pair(char which, long order);

// name in {E2,E4,E6,E8,eta,theta2,theta3,theta4,delta,j,haupt1..haupt4};
// the pair names w1pair_a..d are handled by the CLI via weight1_pair.
PSeries build(const std::string& name, long order);
std::vector<std::string> form_names();

// Ramanujan system residuals vanish to the given order.
void ramanujan_check(VerificationReport& rep, long order);
// theta3^4 = theta2^4 + theta4^4 and theta3^2 (1 - haupt4)^{1/2} = theta4^2.
void theta_jacobi_check(VerificationReport& rep, long order);

}  // namespace qforms::forms
