#include <qforms/forms.hpp>

#include <map>
#include <stdexcept>

namespace qforms::forms {

PSeries eisenstein(long k, long order) {
    static const std::map<long, Rat> bern = {
        {2, rat(1, 6)}, {4, rat(-1, 30)}, {6, rat(1, 42)}, {8, rat(-1, 30)}};
    auto it = bern.find(k);
    if (it == bern.end()) throw std::domain_error("eisenstein: k in {2,4,6,8}");
    Rat factor = Rat(-2 * k) / it->second;
    // sigma_{k-1} by sieve
    std::vector<Rat> c(order + 1, Rat(0));
    c[0] = 1;
    for (long d = 1; d <= order; ++d) {
        Int p;
        mpz_pow_ui(p.get_mpz_t(), Int(d).get_mpz_t(), static_cast<unsigned long>(k - 1));
        Rat term = factor * Rat(p);
        for (long m = d; m <= order; m += d) c[m] += term;
    }
    return PSeries::from_coeffs(std::move(c));
}

PSeries euler_tail(long order) {
    PSeries p = PSeries::one().truncated_order(order);
    for (long n = 1; n <= order; ++n)
        p = p * (PSeries::one() - PSeries::monomial(Rat(1), n));
    return p;
}

PSeries eta(long order) {
    return PSeries::monomial(Rat(1), 1, 24) * euler_tail(order);
}

// prod (1 - q^{kn}) for n >= 1, integer grid
static PSeries euler_tail_rescaled(long k, long order) {
    return euler_tail(order / k + 1).rescale(k).truncated_order(order);
}

PSeries theta(int which, long order) {
    long n = order + 1;
    PSeries even = euler_tail_rescaled(2, n);  // prod (1-q^{2n})
    PSeries p = even;
    switch (which) {
        case 2: {
            PSeries f = PSeries::one().truncated_order(n);
            for (long m = 2; m <= n; m += 2)
                f = f * (PSeries::one() + PSeries::monomial(Rat(1), m));
            return PSeries::monomial(Rat(2), 1, 4) * p * f * f;
        }
        case 3:
        case 4: {
            Rat sign = which == 3 ? Rat(1) : Rat(-1);
            PSeries f = PSeries::one().truncated_order(n);
            for (long m = 1; m <= n; m += 2)
                f = f * (PSeries::one() + PSeries::monomial(sign, m));
            return p * f * f;
        }
        default: throw std::domain_error("theta: which in {2,3,4}");
    }
}

PSeries delta(long order) {
    return PSeries::monomial(Rat(1), 1) * euler_tail(order).pow(24);
}

PSeries j_invariant(long order) {
    long n = order + 1;
    return eisenstein(4, n).pow(3) / delta(n);
}

PSeries haupt(int which, long order) {
    switch (which) {
        case 1: {
            long n = order + 1;
            return Rat(1728) * delta(n) / eisenstein(4, n).pow(3);
        }
        case 2: {
            long n = order + 1;
            return Rat(-64) * PSeries::monomial(Rat(1), 1) *
                   euler_tail_rescaled(2, n).pow(24) / euler_tail(n).pow(24);
        }
        case 3: {
            long n = order + 1;
            return Rat(-27) * PSeries::monomial(Rat(1), 1) *
                   euler_tail_rescaled(3, n).pow(12) / euler_tail(n).pow(12);
        }
        case 4: {
            // theta2^4/theta3^4 = 16 q T2^4 / T3^4 with the integer tails
            long n = order + 1;
            PSeries t2 = theta(2, n), t3 = theta(3, n);
            return t2.pow(4) / t3.pow(4);
        }
        default: throw std::domain_error("haupt: which in {1,2,3,4}");
    }
}

PSeries sqrt_one_minus_1728_over_j(long order) {
    return (PSeries::one() - haupt(1, order)).pow(rat(1, 2));
}

PSeries t_hauptmodul_ex41(long order) {
    PSeries s = sqrt_one_minus_1728_over_j(order);
    return (s - Rat(1)) / (s + Rat(1));
}

Weight1Pair weight1_pair(char which, long order) {
    switch (which) {
        case 'a':
            return {theta(4, order).pow(2), haupt(4, order), rat(1, 2)};
        case 'b': {
            PSeries e2 = eisenstein(2, order);
            PSeries g = (Rat(3) * e2.rescale(3).truncated_order(order) - e2) / Rat(2);
            return {g.pow(rat(1, 2)), haupt(3, order), rat(1, 3)};
        }
        case 'c': {
            PSeries e2 = eisenstein(2, order);
            PSeries g = Rat(2) * e2.rescale(2).truncated_order(order) - e2;
            return {g.pow(rat(1, 2)), haupt(2, order), rat(1, 4)};
        }
        case 'd':
            return {eisenstein(4, order).pow(rat(1, 4)), t_hauptmodul_ex41(order), rat(1, 6)};
        default: throw std::domain_error("weight1_pair: case in {a,b,c,d}");
    }
}

PSeries build(const std::string& name, long order) {
    if (order < 1) throw std::domain_error("build: order >= 1 required");
    if (name == "E2") return eisenstein(2, order);
    if (name == "E4") return eisenstein(4, order);
    if (name == "E6") return eisenstein(6, order);
    if (name == "E8") return eisenstein(8, order);
    if (name == "eta") return eta(order);
    if (name == "theta2") return theta(2, order);
    if (name == "theta3") return theta(3, order);
    if (name == "theta4") return theta(4, order);
    if (name == "delta") return delta(order);
    if (name == "j") return j_invariant(order);
    if (name == "haupt1") return haupt(1, order);
    if (name == "haupt2") return haupt(2, order);
    if (name == "haupt3") return haupt(3, order);
    if (name == "haupt4") return haupt(4, order);
    throw std::domain_error("build: unknown form name '" + name + "'");
}

std::vector<std::string> form_names() {
    return {"E2",     "E4",     "E6",     "E8",     "eta",    "theta2", "theta3",
            "theta4", "delta",  "j",      "haupt1", "haupt2", "haupt3", "haupt4",
            "w1pair_a", "w1pair_b", "w1pair_c", "w1pair_d"};
}

void ramanujan_check(VerificationReport& rep, long order) {
    PSeries e2 = eisenstein(2, order), e4 = eisenstein(4, order), e6 = eisenstein(6, order);
    check_series_zero(rep, "ramanujan-E2", "analogue of the classical Ramanujan's differential equations",
                      e2.dq() - (e2 * e2 - e4) / Rat(12), order);
    check_series_zero(rep, "ramanujan-E4", "analogue of the classical Ramanujan's differential equations",
                      e4.dq() - (e2 * e4 - e6) / Rat(3), order);
    check_series_zero(rep, "ramanujan-E6", "analogue of the classical Ramanujan's differential equations",
                      e6.dq() - (e2 * e6 - e4 * e4) / Rat(2), order);
}

void theta_jacobi_check(VerificationReport& rep, long order) {
    PSeries t2 = theta(2, order), t3 = theta(3, order), t4 = theta(4, order);
    check_series_zero(rep, "jacobi-quartic", "\\theta_3^4=\\theta_2^4+\\theta_4^4",
                      t3.pow(4) - t2.pow(4) - t4.pow(4), order);
    PSeries h4 = haupt(4, order);
    check_series_eq(rep, "theta-sqrt-identity", "=\\theta_4^2",
                    t3.pow(2) * (PSeries::one() - h4).pow(rat(1, 2)), t4.pow(2), order);
}

}  // namespace qforms::forms
