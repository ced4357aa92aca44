#include <qforms/hypergeom.hpp>

#include <qforms/forms.hpp>

#include <stdexcept>

namespace qforms::hypergeom {

void HypergeomParams::validate() const {
    for (const auto& l : lower)
        if (is_integer(l) && l <= 0)
            throw std::domain_error("hypergeom: lower parameter is zero or a negative integer");
}

PSeries pfq(const HypergeomParams& params, long order) {
    params.validate();
    std::vector<Rat> c(order + 1);
    c[0] = 1;
    for (long n = 0; n < order; ++n) {
        Rat num(1), den(Rat(n + 1));
        for (const auto& u : params.upper) num *= u + Rat(n);
        for (const auto& l : params.lower) den *= l + Rat(n);
        c[n + 1] = c[n] * num / den;
    }
    return PSeries::from_coeffs(std::move(c));
}

PSeries f21(const Rat& a, const Rat& b, const Rat& c, long order) {
    return pfq({{a, b}, {c}}, order);
}

PSeries hg_ode_residual(const Rat& a, const Rat& b, const PSeries& f) {
    PSeries t = PSeries::monomial(Rat(1), 1);
    PSeries one = PSeries::one();
    PSeries f1 = f.derivative(), f2 = f1.derivative();
    return t * (one - t) * f2 + (one - (Rat(1) + a + b) * t) * f1 - (a * b) * f;
}

// common argument series
static PSeries t_over_t_minus_1(long order) {
    PSeries t = PSeries::monomial(Rat(1), 1).truncated_order(order);
    return t / (t - Rat(1));
}

static PSeries sqrt_1_minus_z(long order) {
    PSeries z = PSeries::monomial(Rat(1), 1).truncated_order(order);
    return (PSeries::one() - z).pow(rat(1, 2));
}

void transform_check(VerificationReport& rep, Transform kind, const Rat& a, const Rat& b,
                     long order, const Rat& c) {
    long n = order + 2;
    switch (kind) {
        case Transform::euler: {
            PSeries t = PSeries::monomial(Rat(1), 1).truncated_order(n);
            PSeries lhs = (PSeries::one() - t).pow(a) * f21(a, b, c, n);
            PSeries rhs = f21(a, c - b, c, n).compose(t_over_t_minus_1(n));
            check_series_eq(rep,
                            "euler(" + rat_str(a) + "," + rat_str(b) + ";" + rat_str(c) + ")",
                            "(1-t)^a\\,_2F_1(a,b;c;t)=\\,_2F_1\\left(a,c-b;c;\\frac t{t-1}\\right)",
                            lhs, rhs, order);
            return;
        }
        case Transform::kummer_quadratic: {
            Rat low = a + b + rat(1, 2);
            PSeries s = sqrt_1_minus_z(n);
            PSeries arg = (s - Rat(1)) / (s + Rat(1));
            PSeries lhs =
                ((s + Rat(1)) / Rat(2)).pow(Rat(2) * a) * f21(a, b, low, n);
            PSeries rhs = f21(Rat(2) * a, a - b + rat(1, 2), low, n).compose(arg);
            check_series_eq(rep, "kummer(" + rat_str(a) + "," + rat_str(b) + ")",
                            "Kummer's transformation formula", lhs, rhs, order);
            return;
        }
        case Transform::quadratic_abm1: {
            Rat low = a - b + Rat(1);
            PSeries x = PSeries::monomial(Rat(1), 1).truncated_order(n);
            PSeries onemx = PSeries::one() - x;
            PSeries arg = Rat(-4) * x / (onemx * onemx);
            PSeries lhs = f21(a, b, low, n);
            PSeries rhs = onemx.pow(-a) *
                          f21(a / Rat(2), (Rat(1) + a) / Rat(2) - b, low, n).compose(arg);
            check_series_eq(rep, "quadratic(" + rat_str(a) + "," + rat_str(b) + ")",
                            "the quadratic transformation formula", lhs, rhs, order);
            return;
        }
        case Transform::clausen: {
            Rat low1 = a + b + rat(1, 2), low2 = Rat(2) * (a + b);
            PSeries lhs = f21(a, b, low1, n);
            lhs = lhs * lhs;
            PSeries rhs = pfq({{Rat(2) * a, a + b, Rat(2) * b}, {low1, low2}}, n);
            check_series_eq(rep, "clausen(" + rat_str(a) + "," + rat_str(b) + ")",
                            "the connection is established by the identity", lhs, rhs, order);
            return;
        }
    }
}

void classical_e4_check(VerificationReport& rep, long order) {
    long n = order + 1;
    PSeries h1 = forms::haupt(1, n);  // 1728/j
    PSeries lhs = f21(rat(1, 12), rat(5, 12), Rat(1), n).compose(h1).pow(4);
    check_series_eq(rep, "classical-E4",
                    "E_4(\\tau)^{1/4}=\\,_2F_1\\left(\\frac1{12},\\frac5{12};1;\\frac{1728}{j(\\tau)}\\right)",
                    lhs, forms::eisenstein(4, n), order);
    // Remark 6.1 specialization of the Euler transform
    PSeries t = PSeries::monomial(Rat(1), 1).truncated_order(n);
    PSeries l2 = (PSeries::one() - t).pow(rat(1, 6)) * f21(rat(1, 6), rat(1, 6), Rat(1), n);
    PSeries r2 = f21(rat(1, 6), rat(5, 6), Rat(1), n).compose(t_over_t_minus_1(n));
    check_series_eq(rep, "remark61-euler",
                    "(1-t)^{1/6}\\,_2F_1\\left(\\frac16,\\frac16;1;t\\right)=\\,_2F_1\\left(\\frac16,\\frac56;1;\\frac t{t-1}\\right)",
                    l2, r2, order);
}

}  // namespace qforms::hypergeom
