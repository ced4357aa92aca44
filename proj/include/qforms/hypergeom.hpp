#pragma once

// Generalized hypergeometric series over the rationals, their defining ODE
// residuals, and the transformation identities checked as exact truncated
// series in the free variable.

#include <qforms/pseries.hpp>
#include <qforms/report.hpp>

#include <vector>

namespace qforms::hypergeom {

struct HypergeomParams {
    std::vector<Rat> upper, lower;
    // throws if some lower parameter is zero or a negative integer
    void validate() const;
};

// sum c_n z^n with c_0 = 1 and c_{n+1}/c_n = prod(upper+n)/(prod(lower+n)(n+1))
PSeries pfq(const HypergeomParams& params, long order);
PSeries f21(const Rat& a, const Rat& b, const Rat& c, long order);

// residual of t(1-t) f'' + [1 - (1+a+b) t] f' - ab f on a series in t
PSeries hg_ode_residual(const Rat& a, const Rat& b, const PSeries& f);

enum class Transform { euler, kummer_quadratic, quadratic_abm1, clausen };

// Checks one transformation identity at the given parameters:
//   euler:            (1-t)^a 2F1(a,b;c;t) = 2F1(a,c-b;c;t/(t-1))
//   kummer_quadratic: ((1+sqrt(1-z))/2)^{2a} 2F1(a,b;a+b+1/2;z)
//                       = 2F1(2a,a-b+1/2;a+b+1/2;(sqrt(1-z)-1)/(sqrt(1-z)+1))
//   quadratic_abm1:   2F1(A,B;A-B+1;x) = (1-x)^{-A} 2F1(A/2,(1+A)/2-B;A-B+1;-4x/(1-x)^2)
//   clausen:          2F1(a,b;a+b+1/2;z)^2 = 3F2(2a,a+b,2b;a+b+1/2,2a+2b;z)
// The euler check uses c = 1 when no c is supplied.
void transform_check(VerificationReport& rep, Transform kind, const Rat& a, const Rat& b,
                     long order, const Rat& c = Rat(1));

// E4 = 2F1(1/12,5/12;1;1728/j)^4 as q-series, plus the derived identity
// (1-t)^{1/6} 2F1(1/6,1/6;1;t) = 2F1(1/6,5/6;1;t/(t-1)).
void classical_e4_check(VerificationReport& rep, long order);

}  // namespace qforms::hypergeom
