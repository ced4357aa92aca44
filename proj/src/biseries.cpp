#include <qforms/biseries.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qforms {

BiSeries::BiSeries(long order, long n1, long n2, std::vector<Rat> c)
    : order_(order), n1_(n1), n2_(n2), c_(std::move(c)) {
    if (static_cast<long>(c_.size()) != n1_ * n2_)
        throw std::logic_error("BiSeries: array does not match dims");
    trim();
}

void BiSeries::trim() {
    if (order_ != kInf) {
        // the stored array must cover exactly the box
        long n = order_ + 1;
        if (n1_ != n || n2_ != n) {
            std::vector<Rat> c(n * n, Rat(0));
            for (long i = 0; i < std::min(n, n1_); ++i)
                for (long j = 0; j < std::min(n, n2_); ++j) c[i * n + j] = c_[i * n2_ + j];
            c_ = std::move(c);
            n1_ = n2_ = n;
        }
        return;
    }
    // exact: shrink the bounding box of the support
    long m1 = 0, m2 = 0;
    for (long i = 0; i < n1_; ++i)
        for (long j = 0; j < n2_; ++j)
            if (c_[i * n2_ + j] != 0) {
                m1 = std::max(m1, i + 1);
                m2 = std::max(m2, j + 1);
            }
    if (m1 == n1_ && m2 == n2_) return;
    std::vector<Rat> c(m1 * m2, Rat(0));
    for (long i = 0; i < m1; ++i)
        for (long j = 0; j < m2; ++j) c[i * m2 + j] = c_[i * n2_ + j];
    c_ = std::move(c);
    n1_ = m1;
    n2_ = m2;
}

BiSeries BiSeries::constant(const Rat& c) {
    if (c == 0) return zero();
    return BiSeries(kInf, 1, 1, {c});
}

BiSeries BiSeries::monomial(const Rat& c, long i, long j) {
    if (i < 0 || j < 0) throw std::domain_error("BiSeries::monomial: negative exponent");
    if (c == 0) return zero();
    std::vector<Rat> v((i + 1) * (j + 1), Rat(0));
    v[i * (j + 1) + j] = c;
    return BiSeries(kInf, i + 1, j + 1, std::move(v));
}

BiSeries BiSeries::embed1(const PSeries& s) {
    PSeries r = s.reduced();
    if (r.ram() != 1 || (!r.is_zero() && r.val() < 0))
        throw std::domain_error("embed: series needs nonnegative integer exponents");
    long order = r.prec() == PSeries::kInf ? kInf : r.prec() - 1;
    if (order != kInf && order < 0) throw std::domain_error("embed: order underflow");
    long n = order == kInf ? std::max<long>(r.val() + static_cast<long>(r.coeffs().size()), 1)
                           : order + 1;
    std::vector<Rat> c(n, Rat(0));
    for (size_t k = 0; k < r.coeffs().size(); ++k) {
        long i = r.val() + static_cast<long>(k);
        if (i < n) c[i] = r.coeffs()[k];
    }
    return BiSeries(order, n, 1, std::move(c));
}

BiSeries BiSeries::embed2(const PSeries& s) { return embed1(s).swap12(); }

bool BiSeries::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

Rat BiSeries::at(long i, long j) const {
    if (i < 0 || j < 0) throw std::out_of_range("BiSeries::at: negative exponent");
    if (order_ != kInf && (i > order_ || j > order_))
        throw std::out_of_range("BiSeries::at: beyond known box");
    return raw(i, j);
}

BiSeries BiSeries::truncated(long order) const {
    if (order >= order_) return *this;
    long n = order + 1;
    std::vector<Rat> c(n * n, Rat(0));
    for (long i = 0; i < std::min(n, n1_); ++i)
        for (long j = 0; j < std::min(n, n2_); ++j) c[i * n + j] = c_[i * n2_ + j];
    return BiSeries(order, n, n, std::move(c));
}

BiSeries BiSeries::operator-() const {
    BiSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

BiSeries operator+(const BiSeries& a, const BiSeries& b) {
    long order = std::min(a.order_, b.order_);
    long n1 = std::max(a.n1_, b.n1_), n2 = std::max(a.n2_, b.n2_);
    if (order != BiSeries::kInf) n1 = n2 = order + 1;
    std::vector<Rat> c(n1 * n2, Rat(0));
    for (long i = 0; i < n1; ++i)
        for (long j = 0; j < n2; ++j) c[i * n2 + j] = a.raw(i, j) + b.raw(i, j);
    return BiSeries(order, n1, n2, std::move(c));
}

BiSeries operator-(const BiSeries& a, const BiSeries& b) { return a + (-b); }

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    long order = std::min(a.order_, b.order_);
    long n1, n2;
    if (order == BiSeries::kInf) {
        if (a.is_zero() || b.is_zero()) return BiSeries::zero();
        n1 = a.n1_ + b.n1_ - 1;
        n2 = a.n2_ + b.n2_ - 1;
    } else {
        n1 = n2 = order + 1;
    }
    std::vector<Rat> c(n1 * n2, Rat(0));
    Rat tmp;
    for (long i = 0; i < std::min(a.n1_, n1); ++i)
        for (long j = 0; j < std::min(a.n2_, n2); ++j) {
            const Rat& av = a.c_[i * a.n2_ + j];
            if (av == 0) continue;
            long kmax = std::min(b.n1_, n1 - i), lmax = std::min(b.n2_, n2 - j);
            for (long k = 0; k < kmax; ++k)
                for (long l = 0; l < lmax; ++l) {
                    const Rat& bv = b.c_[k * b.n2_ + l];
                    if (bv == 0) continue;
                    tmp = av * bv;
                    c[(i + k) * n2 + (j + l)] += tmp;
                }
        }
    return BiSeries(order, n1, n2, std::move(c));
}

BiSeries operator*(const Rat& s, const BiSeries& a) {
    if (s == 0) return a.order_ == BiSeries::kInf ? BiSeries::zero() : BiSeries::zero().truncated(a.order_);
    BiSeries r = a;
    for (auto& x : r.c_) x *= s;
    return r;
}

BiSeries operator*(const BiSeries& a, const Rat& s) { return s * a; }

BiSeries BiSeries::dq1() const {
    BiSeries r = *this;
    for (long i = 0; i < n1_; ++i)
        for (long j = 0; j < n2_; ++j) r.c_[i * n2_ + j] *= Rat(i);
    r.trim();
    return r;
}

BiSeries BiSeries::dq2() const {
    BiSeries r = *this;
    for (long i = 0; i < n1_; ++i)
        for (long j = 0; j < n2_; ++j) r.c_[i * n2_ + j] *= Rat(j);
    r.trim();
    return r;
}

BiSeries BiSeries::swap12() const {
    std::vector<Rat> c(n1_ * n2_);
    for (long i = 0; i < n1_; ++i)
        for (long j = 0; j < n2_; ++j) c[j * n1_ + i] = c_[i * n2_ + j];
    return BiSeries(order_, n2_, n1_, std::move(c));
}

bool BiSeries::symmetric() const {
    long n = std::max(n1_, n2_);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < i; ++j)
            if (raw(i, j) != raw(j, i)) return false;
    return true;
}

long BiSeries::total_val() const {
    long best = kInf;
    for (long i = 0; i < n1_; ++i)
        for (long j = 0; j < n2_; ++j)
            if (c_[i * n2_ + j] != 0) best = std::min(best, i + j);
    return best;
}

PSeries BiSeries::at_u2_zero() const {
    std::vector<Rat> c(n1_);
    for (long i = 0; i < n1_; ++i) c[i] = raw(i, 0);
    if (order_ == kInf) return PSeries::poly(std::move(c));
    c.resize(order_ + 1, Rat(0));
    return PSeries::from_coeffs(std::move(c));
}

PSeries BiSeries::at_u1_zero() const { return swap12().at_u2_zero(); }

std::optional<BiSeries::Term> BiSeries::first_nonzero() const {
    std::optional<Term> best;
    for (long i = 0; i < n1_; ++i)
        for (long j = 0; j < n2_; ++j) {
            const Rat& v = c_[i * n2_ + j];
            if (v == 0) continue;
            if (!best || i + j < best->i + best->j ||
                (i + j == best->i + best->j && i < best->i))
                best = Term{i, j, v};
        }
    return best;
}

void BiSeries::dump(std::ostream& os) const {
    bool any = false;
    std::vector<Term> terms;
    for (long i = 0; i < n1_; ++i)
        for (long j = 0; j < n2_; ++j)
            if (c_[i * n2_ + j] != 0) terms.push_back({i, j, c_[i * n2_ + j]});
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        if (a.i + a.j != b.i + b.j) return a.i + a.j < b.i + b.j;
        return a.i < b.i;
    });
    for (const auto& t : terms) {
        any = true;
        os << rat_str(t.c) << " * u1^" << t.i << " u2^" << t.j << "\n";
    }
    if (!any) os << "0\n";
}

std::string BiSeries::dump_str() const {
    std::ostringstream os;
    dump(os);
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const BiSeries& s) {
    s.dump(os);
    return os;
}

// ---------------------------------------------------------------------------

BiFrac::BiFrac(BiSeries num, BiSeries den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("BiFrac: zero denominator");
    normalize();
}

void BiFrac::normalize() {
    long o = std::min(num_.order(), den_.order());
    if (o != BiSeries::kInf) {
        num_ = num_.truncated(o);
        den_ = den_.truncated(o);
        if (den_.is_zero())
            throw std::domain_error("BiFrac: denominator vanishes on the working box");
    }
}

BiFrac BiFrac::operator-() const {
    BiFrac r = *this;
    r.num_ = -r.num_;
    return r;
}

BiFrac operator+(const BiFrac& a, const BiFrac& b) {
    return BiFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

BiFrac operator-(const BiFrac& a, const BiFrac& b) { return a + (-b); }

BiFrac operator*(const BiFrac& a, const BiFrac& b) {
    return BiFrac(a.num_ * b.num_, a.den_ * b.den_);
}

BiFrac operator/(const BiFrac& a, const BiFrac& b) {
    if (b.num_.is_zero()) throw std::domain_error("BiFrac: division by zero fraction");
    return BiFrac(a.num_ * b.den_, a.den_ * b.num_);
}

BiFrac operator*(const Rat& s, const BiFrac& a) { return BiFrac(s * a.num_, a.den_); }

BiFrac BiFrac::dq1() const {
    return BiFrac(num_.dq1() * den_ - num_ * den_.dq1(), den_ * den_);
}

BiFrac BiFrac::dq2() const {
    return BiFrac(num_.dq2() * den_ - num_ * den_.dq2(), den_ * den_);
}

BiFrac BiFrac::swap12() const { return BiFrac(num_.swap12(), den_.swap12()); }

BiFrac BiFrac::truncated(long order) const {
    return BiFrac(num_.truncated(order), den_.truncated(order));
}

BiSeries BiFrac::cross_diff(const BiFrac& a, const BiFrac& b) {
    return a.num_ * b.den_ - b.num_ * a.den_;
}

}  // namespace qforms
