#pragma once

// Box-truncated bivariate power series and formal fractions of them.
//
// A BiSeries knows every coefficient of u1^i u2^j with i <= order and
// j <= order (order == kInf marks an exact polynomial).  A BiFrac is a
// formal quotient num/den of such series; it is never "evaluated" by
// series inversion -- equality and vanishing are always decided by
// cross-multiplication on the valid box, which keeps every denominator
// that appears in the paper's coefficient formulas (products of small
// polynomials and Jacobian numerators) out of harm's way.

#include <qforms/pseries.hpp>
#include <qforms/rational.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qforms {

class BiSeries {
  public:
    static constexpr long kInf = PSeries::kInf;

    BiSeries() : order_(kInf), n1_(0), n2_(0) {}

    static BiSeries zero() { return BiSeries(); }
    static BiSeries constant(const Rat& c);
    static BiSeries monomial(const Rat& c, long i, long j);
    // u1, u2 as exact polynomials
    static BiSeries u1() { return monomial(Rat(1), 1, 0); }
    static BiSeries u2() { return monomial(Rat(1), 0, 1); }
    // Lift a univariate series with nonnegative integer exponents into
    // slot 1 or 2; the box order is inherited from the series' precision.
    static BiSeries embed1(const PSeries& s);
    static BiSeries embed2(const PSeries& s);

    long order() const { return order_; }
    bool exact() const { return order_ == kInf; }
    bool is_zero() const;

    Rat at(long i, long j) const;  // throws beyond the known box

    BiSeries truncated(long order) const;

    BiSeries operator-() const;
    friend BiSeries operator+(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator-(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator*(const Rat& s, const BiSeries& a);
    friend BiSeries operator*(const BiSeries& a, const Rat& s);

    // Euler derivatives u1 d/du1 and u2 d/du2.
    BiSeries dq1() const;
    BiSeries dq2() const;
    // Exchange the two variables.
    BiSeries swap12() const;
    bool symmetric() const;

    // Minimal total degree of a nonzero known coefficient (kInf if none).
    long total_val() const;

    // Restriction u2 = 0 (resp. u1 = 0) as a univariate series.
    PSeries at_u2_zero() const;
    PSeries at_u1_zero() const;

    struct Term {
        long i, j;
        Rat c;
    };
    // Lowest nonzero known term in (total degree, i) order.
    std::optional<Term> first_nonzero() const;

    // One term per line: "num/den * u1^i u2^j".
    void dump(std::ostream& os) const;
    std::string dump_str() const;

  private:
    long order_;          // box bound (kInf = exact polynomial)
    long n1_, n2_;        // stored array dims
    std::vector<Rat> c_;  // row-major: c_[i*n2_+j]

    BiSeries(long order, long n1, long n2, std::vector<Rat> c);
    void trim();
    Rat raw(long i, long j) const {
        return (i < n1_ && j < n2_ && i >= 0 && j >= 0) ? c_[i * n2_ + j] : Rat(0);
    }
    friend class BiFrac;
};

// Formal fraction num/den of bivariate series.  Arithmetic never inverts a
// series; results are re-truncated so both parts share the tightest box.
class BiFrac {
  public:
    BiFrac() : num_(BiSeries::zero()), den_(BiSeries::constant(Rat(1))) {}
    BiFrac(BiSeries num, BiSeries den);
    BiFrac(BiSeries num) : BiFrac(std::move(num), BiSeries::constant(Rat(1))) {}
    explicit BiFrac(const Rat& c) : BiFrac(BiSeries::constant(c)) {}

    const BiSeries& num() const { return num_; }
    const BiSeries& den() const { return den_; }
    long order() const { return std::min(num_.order(), den_.order()); }

    BiFrac operator-() const;
    friend BiFrac operator+(const BiFrac& a, const BiFrac& b);
    friend BiFrac operator-(const BiFrac& a, const BiFrac& b);
    friend BiFrac operator*(const BiFrac& a, const BiFrac& b);
    friend BiFrac operator/(const BiFrac& a, const BiFrac& b);
    friend BiFrac operator*(const Rat& s, const BiFrac& a);
    BiFrac operator+(const Rat& s) const { return *this + BiFrac(s); }
    BiFrac operator-(const Rat& s) const { return *this - BiFrac(s); }

    // Euler derivatives via the quotient rule.
    BiFrac dq1() const;
    BiFrac dq2() const;
    BiFrac swap12() const;
    BiFrac truncated(long order) const;

    // num1*den2 - num2*den1: the cross-multiplied difference whose box
    // vanishing defines equality of fractions.
    static BiSeries cross_diff(const BiFrac& a, const BiFrac& b);
    // Numerator vanishes on its whole known box.
    bool is_zero_box() const { return num_.is_zero(); }

  private:
    BiSeries num_, den_;
    void normalize();
};

std::ostream& operator<<(std::ostream& os, const BiSeries& s);

}  // namespace qforms
