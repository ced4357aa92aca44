#pragma once

// Computes the two-variable PDE coefficient set from logarithmic Euler
// derivatives and verifies the system
//   Dx^2 F + a0 DxDy F + a1 Dx F + a2 Dy F + a3 F = 0
//   Dy^2 F + b0 DxDy F + b1 Dx F + b2 Dy F + b3 F = 0
// both on random formal inputs and on the constructed hypergeometric
// families, together with the Schwarzian machinery and the weight-1 cases.
//
// Contexts come in two coordinate systems.  In q-coordinates the box
// variables are (q1, q2) and D_{q_j} is the plain Euler derivative.  In
// t-coordinates the box variables are (t1, t2) and the normalized relation
// D_{q_j} t_j = t_j (1-t_j)^{2a} f(t_j)^2   (resp. (1-t_j)^{a+b})
// turns D_{q_j} into w_j * (Euler in slot j) with w_j a unit series.

#include <qforms/biseries.hpp>
#include <qforms/report.hpp>

#include <cstdint>
#include <utility>

namespace qforms::pde {

struct TwoVarContext {
    BiFrac F, x, y;
    BiSeries w1, w2;  // D_{q_j} = w_j * dq_j
    long order = 0;   // working box
};

// Random polynomial context: F, x, y of total degree <= 4 with unit constant
// terms and independent linear parts (nonsingular Jacobian at the origin).
TwoVarContext random_context(std::uint64_t seed, long order);
TwoVarContext thm31_context(const Rat& a, long order);
TwoVarContext thm51_context(const Rat& a, const Rat& b, long order);

BiFrac ctx_dq1(const TwoVarContext& ctx, const BiFrac& h);
BiFrac ctx_dq2(const TwoVarContext& ctx, const BiFrac& h);

struct GSet {
    BiFrac gx1, gx2, gy1, gy2, gf1, gf2;
};
GSet logderivs(const TwoVarContext& ctx);

struct CoefficientSet {
    BiFrac a0, a1, a2, a3, b0, b1, b2, b3;
};
// The eight displayed formulas of the main theorem.
CoefficientSet coefficients_thm21(const TwoVarContext& ctx, const GSet& g);

// D_x/D_y of an arbitrary quantity through the inverse Jacobian.
BiFrac apply_dx(const TwoVarContext& ctx, const GSet& g, const BiFrac& h);
BiFrac apply_dy(const TwoVarContext& ctx, const GSet& g, const BiFrac& h);

// Residuals of the system for a given coefficient set.
std::pair<BiFrac, BiFrac> residual_main(const TwoVarContext& ctx, const GSet& g,
                                        const CoefficientSet& c);

CoefficientSet closed_forms_thm31(const TwoVarContext& ctx, const Rat& a);
CoefficientSet closed_forms_thm51(const TwoVarContext& ctx, const Rat& a, const Rat& b);

// Suite pieces.  Each appends pass/fail items.
void thm21_random_check(VerificationReport& rep, long instances, long order,
                        std::uint64_t seed);
void thm31_check(VerificationReport& rep, const Rat& a, long order);
void thm51_check(VerificationReport& rep, const Rat& a, const Rat& b, long order);
void schwarzian_thm31_check(VerificationReport& rep, const Rat& a, long order);
void schwarzian_thm51_check(VerificationReport& rep, const Rat& a, const Rat& b, long order);
void lemma32_check(VerificationReport& rep, const Rat& a, const Rat& b, long order);
void weight1_ode_check(VerificationReport& rep, char which, long order);
void example41_check(VerificationReport& rep, long order);

}  // namespace qforms::pde
