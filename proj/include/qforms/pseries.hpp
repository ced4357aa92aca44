#pragma once

// Truncated Puiseux series over the exact rationals.
//
// A PSeries stores coefficients on the exponent grid idx/ram for integer
// idx; coefficient k of coeffs() multiplies q^{(val+k)/ram}.  Exponents in
// [val/ram, prec/ram) are known; everything at or beyond prec/ram is
// *unknown*, never assumed zero.  prec == kInf marks an exact object (a
// polynomial or monomial known at every order); every operation computes
// the tightest sound precision implied by its inputs.

#include <qforms/rational.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qforms {

class PSeries {
  public:
    // "known at every order" sentinel for prec.
    static constexpr long kInf = 1L << 60;

    PSeries() : ram_(1), val_(0), prec_(kInf) {}

    static PSeries zero() { return PSeries(); }
    static PSeries constant(const Rat& c);
    static PSeries one() { return constant(Rat(1)); }
    // c * q^(num/den), exact.
    static PSeries monomial(const Rat& c, long num, long den = 1);
    // cs[i] * q^i, exact polynomial.
    static PSeries poly(std::vector<Rat> cs);
    static PSeries poly(std::initializer_list<long> cs);
    // Explicit grid: cs[k] multiplies q^{(val+k)/ram}; prec = val + cs.size().
    static PSeries from_coeffs(std::vector<Rat> cs, long val = 0, long ram = 1);

    long ram() const { return ram_; }
    long val() const { return val_; }    // index of first stored coefficient
    long prec() const { return prec_; }  // first unknown index
    bool exact() const { return prec_ == kInf; }
    bool is_zero() const { return c_.empty(); }

    // Valuation as an exact exponent; requires a nonzero known part.
    Rat val_exp() const;

    const std::vector<Rat>& coeffs() const { return c_; }
    // Coefficient of q^(num/den).  Throws if the exponent is not known to
    // this series (beyond prec); exponents off the grid inside the known
    // range are zero.
    Rat coeff(long num, long den = 1) const;
    Rat coeff(const Rat& e) const;

    // Truncate so that exponents >= new_prec/new_den become unknown.
    PSeries truncated_idx(long prec_idx) const;
    PSeries truncated(long order_num, long order_den = 1) const;
    // Keep exponents <= N (the "order N" convention used by the suites).
    PSeries truncated_order(long n) const;

    PSeries operator-() const;
    friend PSeries operator+(const PSeries& a, const PSeries& b);
    friend PSeries operator-(const PSeries& a, const PSeries& b);
    friend PSeries operator*(const PSeries& a, const PSeries& b);
    friend PSeries operator/(const PSeries& a, const PSeries& b);
    friend PSeries operator*(const Rat& s, const PSeries& a);
    friend PSeries operator*(const PSeries& a, const Rat& s);
    friend PSeries operator/(const PSeries& a, const Rat& s);
    friend PSeries operator+(const PSeries& a, const Rat& s);
    friend PSeries operator-(const PSeries& a, const Rat& s);

    // Euler derivative q d/dq.
    PSeries dq() const;
    // Plain derivative d/dq.
    PSeries derivative() const;

    // a^e for rational e.  Non-integer e requires leading coefficient 1.
    PSeries pow(const Rat& e) const;
    PSeries pow(long e) const { return pow(Rat(e)); }

    // exp of a series with strictly positive valuation (exp(0) = 1).
    PSeries exp() const;
    // log of a series with constant term exactly 1.
    PSeries log() const;

    // Substitute inner (valuation > 0) into this (integer exponents).
    PSeries compose(const PSeries& inner) const;
    // Compositional inverse of c*q + ... with c != 0, integer exponents.
    PSeries reversion() const;
    // q -> q^k.
    PSeries rescale(long k) const;

    // Divide the exponent grid where possible (gcd of ram and support).
    PSeries reduced() const;

    // One term per line: "num/den * q^(a/b)", sorted by exponent.
    void dump(std::ostream& os) const;
    std::string dump_str() const;

    struct Mismatch {
        Rat exponent, lhs, rhs;
    };

    // First differing known coefficient of a and b, if any; compares on the
    // overlap of the known ranges after merging grids.
    static std::optional<Mismatch> first_mismatch(const PSeries& a, const PSeries& b);
    // Equal on the overlap of known ranges (and the overlap is nonempty).
    static bool agree(const PSeries& a, const PSeries& b);
    // Smallest known exponent where the overlap of a and b ends.
    static Rat agree_prec_exp(const PSeries& a, const PSeries& b);

  private:
    long ram_;            // exponent grid denominator, >= 1
    long val_;            // index of c_[0]
    long prec_;           // first unknown index (kInf if exact)
    std::vector<Rat> c_;  // c_[k] multiplies q^{(val_+k)/ram_}

    PSeries(long ram, long val, long prec, std::vector<Rat> c);
    void normalize();
    PSeries with_ram(long new_ram) const;  // refine grid; new_ram multiple of ram_
    friend void merge_grids(PSeries& a, PSeries& b);
    long effective_val() const { return c_.empty() ? (prec_ == kInf ? 0 : prec_) : val_; }
    long known_len() const { return prec_ == kInf ? kInf : prec_ - val_; }
};

// Saturating index arithmetic for precision bookkeeping.
inline long padd(long a, long b) {
    return (a >= PSeries::kInf || b >= PSeries::kInf) ? PSeries::kInf : a + b;
}
inline long pscale(long a, long s) {
    if (a >= PSeries::kInf) return PSeries::kInf;
    if (a > 0 && s > 0 && a > PSeries::kInf / s) return PSeries::kInf;
    return a * s;
}

std::ostream& operator<<(std::ostream& os, const PSeries& s);

}  // namespace qforms
