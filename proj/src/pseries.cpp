#include <qforms/pseries.hpp>

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qforms {

PSeries::PSeries(long ram, long val, long prec, std::vector<Rat> c)
    : ram_(ram), val_(val), prec_(prec), c_(std::move(c)) {
    normalize();
}

void PSeries::normalize() {
    if (ram_ < 1) throw std::logic_error("PSeries: ramification must be positive");
    if (prec_ != kInf && static_cast<long>(c_.size()) != prec_ - val_)
        throw std::logic_error("PSeries: coefficient window does not match prec");
    size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        val_ += static_cast<long>(lead);
    }
    if (prec_ == kInf) {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    if (c_.empty()) {
        val_ = (prec_ == kInf) ? 0 : prec_;
        if (prec_ == kInf) ram_ = 1;
    }
}

PSeries PSeries::constant(const Rat& c) {
    std::vector<Rat> v;
    if (c != 0) v.push_back(c);
    return PSeries(1, 0, kInf, std::move(v));
}

PSeries PSeries::monomial(const Rat& c, long num, long den) {
    if (den == 0) throw std::domain_error("monomial: zero exponent denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long g = std::gcd(std::abs(num), den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    std::vector<Rat> v;
    if (c != 0) v.push_back(c);
    return PSeries(den, num, kInf, std::move(v));
}

PSeries PSeries::poly(std::vector<Rat> cs) { return PSeries(1, 0, kInf, std::move(cs)); }

PSeries PSeries::poly(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    v.reserve(cs.size());
    for (long x : cs) v.emplace_back(x);
    return poly(std::move(v));
}

PSeries PSeries::from_coeffs(std::vector<Rat> cs, long val, long ram) {
    long prec = val + static_cast<long>(cs.size());
    return PSeries(ram, val, prec, std::move(cs));
}

Rat PSeries::val_exp() const {
    if (c_.empty()) throw std::domain_error("val_exp: series is zero to its known order");
    return rat(val_, ram_);
}

Rat PSeries::coeff(const Rat& e) const {
    Rat scaled = e * Rat(ram_);
    if (prec_ != kInf && scaled >= Rat(prec_))
        throw std::out_of_range("coeff: exponent beyond known order");
    if (!is_integer(scaled)) return Rat(0);
    long idx = rat_num_long(scaled);
    if (idx < val_ || idx >= val_ + static_cast<long>(c_.size())) return Rat(0);
    return c_[idx - val_];
}

Rat PSeries::coeff(long num, long den) const { return coeff(rat(num, den)); }

PSeries PSeries::truncated_idx(long prec_idx) const {
    if (prec_idx >= prec_) return *this;
    PSeries r = *this;
    r.prec_ = prec_idx;
    if (prec_idx <= r.val_) {
        r.c_.clear();
        r.val_ = prec_idx;
    } else {
        r.c_.resize(prec_idx - r.val_);
    }
    r.normalize();
    return r;
}

static long ceil_div(long a, long b) {  // b > 0
    long q = a / b, r = a % b;
    return q + (r > 0 ? 1 : 0);
}

PSeries PSeries::truncated(long order_num, long order_den) const {
    if (order_den <= 0) throw std::domain_error("truncated: bad order");
    // first unknown index: smallest idx with idx/ram >= order
    return truncated_idx(ceil_div(order_num * ram_, order_den));
}

PSeries PSeries::truncated_order(long n) const { return truncated_idx(n * ram_ + 1); }

PSeries PSeries::with_ram(long new_ram) const {
    if (new_ram == ram_) return *this;
    if (new_ram % ram_ != 0) throw std::logic_error("with_ram: not a multiple");
    long s = new_ram / ram_;
    std::vector<Rat> c;
    if (!c_.empty()) {
        c.assign((c_.size() - 1) * s + 1, Rat(0));
        for (size_t k = 0; k < c_.size(); ++k) c[k * s] = c_[k];
    }
    long v = val_ * s;
    long p = prec_ == kInf ? kInf : prec_ * s;
    if (p != kInf && !c.empty()) c.resize(p - v, Rat(0));
    if (c.empty() && p != kInf) v = p;
    return PSeries(new_ram, v, p, std::move(c));
}

void merge_grids(PSeries& a, PSeries& b) {
    long l = std::lcm(a.ram_, b.ram_);
    a = a.with_ram(l);
    b = b.with_ram(l);
}

PSeries PSeries::reduced() const {
    if (c_.empty() || ram_ == 1) return *this;
    long g = 0;
    for (size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != 0) g = std::gcd(g, std::abs(val_ + static_cast<long>(k)));
    g = std::gcd(g, ram_);
    if (g <= 1) return *this;
    long nram = ram_ / g;
    long nval = val_ / g;
    long nprec = prec_ == kInf ? kInf : ceil_div(prec_, g);
    std::vector<Rat> c(prec_ == kInf ? (val_ + static_cast<long>(c_.size()) - 1) / g - nval + 1
                                     : nprec - nval,
                       Rat(0));
    for (size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != 0) c[(val_ + static_cast<long>(k)) / g - nval] = c_[k];
    return PSeries(nram, nval, nprec, std::move(c));
}

PSeries PSeries::operator-() const {
    PSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

PSeries operator+(const PSeries& a0, const PSeries& b0) {
    PSeries a = a0, b = b0;
    merge_grids(a, b);
    long prec = std::min(a.prec_, b.prec_);
    long val = std::min(a.effective_val(), b.effective_val());
    if (prec == PSeries::kInf && a.c_.empty() && b.c_.empty()) return PSeries::zero();
    long hi = prec;
    if (prec == PSeries::kInf)
        hi = std::max(a.val_ + static_cast<long>(a.c_.size()),
                      b.val_ + static_cast<long>(b.c_.size()));
    std::vector<Rat> c(hi - val, Rat(0));
    for (size_t k = 0; k < a.c_.size(); ++k) {
        long i = a.val_ + static_cast<long>(k) - val;
        if (i < hi - val) c[i] += a.c_[k];
    }
    for (size_t k = 0; k < b.c_.size(); ++k) {
        long i = b.val_ + static_cast<long>(k) - val;
        if (i < hi - val) c[i] += b.c_[k];
    }
    return PSeries(a.ram_, val, prec, std::move(c));
}

PSeries operator-(const PSeries& a, const PSeries& b) { return a + (-b); }

PSeries operator*(const PSeries& a0, const PSeries& b0) {
    PSeries a = a0, b = b0;
    merge_grids(a, b);
    long va = a.effective_val(), vb = b.effective_val();
    long prec = std::min(padd(a.prec_, vb), padd(b.prec_, va));
    if (a.c_.empty() || b.c_.empty()) {
        if (prec == PSeries::kInf) return PSeries::zero();
        return PSeries(a.ram_, prec, prec, {});
    }
    long len = prec == PSeries::kInf ? static_cast<long>(a.c_.size() + b.c_.size()) - 1
                                     : prec - (va + vb);
    std::vector<Rat> c(len, Rat(0));
    Rat tmp;
    for (size_t i = 0; i < a.c_.size() && static_cast<long>(i) < len; ++i) {
        if (a.c_[i] == 0) continue;
        size_t jmax = std::min(b.c_.size(), static_cast<size_t>(len - static_cast<long>(i)));
        for (size_t j = 0; j < jmax; ++j) {
            if (b.c_[j] == 0) continue;
            tmp = a.c_[i] * b.c_[j];
            c[i + j] += tmp;
        }
    }
    return PSeries(a.ram_, va + vb, prec, std::move(c));
}

PSeries operator/(const PSeries& a0, const PSeries& b0) {
    if (b0.c_.empty()) throw std::domain_error("division by a series that is zero to its order");
    PSeries a = a0, b = b0;
    merge_grids(a, b);
    long va = a.effective_val(), vb = b.val_;
    long La = a.prec_ == PSeries::kInf ? PSeries::kInf : a.prec_ - va;
    long Lb = b.prec_ == PSeries::kInf ? PSeries::kInf : b.prec_ - vb;
    long Lq = std::min(La, Lb);
    if (Lq == PSeries::kInf) {
        // Exact division: succeeds only when it terminates.
        long len = static_cast<long>(a.c_.size());
        std::vector<Rat> q(len, Rat(0));
        for (long k = 0; k < len; ++k) {
            Rat s = a.c_[k];
            for (long j = 1; j <= std::min<long>(k, static_cast<long>(b.c_.size()) - 1); ++j)
                s -= b.c_[j] * q[k - j];
            q[k] = s / b.c_[0];
        }
        PSeries quot(a.ram_, va - vb, PSeries::kInf, std::move(q));
        if (!(quot * b - a).is_zero())
            throw std::logic_error("exact series division does not terminate; truncate an operand");
        return quot;
    }
    std::vector<Rat> q(Lq, Rat(0));
    for (long k = 0; k < Lq; ++k) {
        Rat s = k < static_cast<long>(a.c_.size()) ? a.c_[k] : Rat(0);
        for (long j = 1; j <= std::min<long>(k, static_cast<long>(b.c_.size()) - 1); ++j)
            s -= b.c_[j] * q[k - j];
        q[k] = s / b.c_[0];
    }
    return PSeries(a.ram_, va - vb, va - vb + Lq, std::move(q));
}

PSeries operator*(const Rat& s, const PSeries& a) {
    if (s == 0) {
        if (a.prec_ == PSeries::kInf) return PSeries::zero();
        return PSeries(a.ram_, a.prec_, a.prec_, {});
    }
    PSeries r = a;
    for (auto& x : r.c_) x *= s;
    return r;
}

PSeries operator*(const PSeries& a, const Rat& s) { return s * a; }

PSeries operator/(const PSeries& a, const Rat& s) {
    if (s == 0) throw std::domain_error("division by zero scalar");
    return rat(s.get_den(), s.get_num()) * a;
}

PSeries operator+(const PSeries& a, const Rat& s) { return a + PSeries::constant(s); }
PSeries operator-(const PSeries& a, const Rat& s) { return a + PSeries::constant(-s); }

PSeries PSeries::dq() const {
    PSeries r = *this;
    for (size_t k = 0; k < r.c_.size(); ++k) r.c_[k] *= rat(r.val_ + static_cast<long>(k), r.ram_);
    r.normalize();
    return r;
}

PSeries PSeries::derivative() const {
    PSeries r = dq();
    if (r.c_.empty()) {
        if (r.prec_ != kInf) {
            r.prec_ -= ram_;
            r.val_ = r.prec_;
        }
        return r;
    }
    r.val_ -= ram_;
    if (r.prec_ != kInf) r.prec_ -= ram_;
    return r;
}

PSeries PSeries::pow(const Rat& e) const {
    if (is_integer(e)) {
        long n = rat_num_long(e);
        if (n == 0) return one();
        if (c_.empty()) {
            if (n < 0) throw std::domain_error("pow: negative power of zero series");
            return *this;  // zero to its known order stays zero
        }
        bool neg = n < 0;
        unsigned long m = static_cast<unsigned long>(neg ? -n : n);
        PSeries acc = one(), base = *this;
        while (m > 0) {
            if (m & 1) acc = acc * base;
            m >>= 1;
            if (m > 0) base = base * base;
        }
        return neg ? one() / acc : acc;
    }
    if (c_.empty()) throw std::domain_error("pow: fractional power of zero series");
    if (c_.front() != 1)
        throw std::domain_error("pow: non-unit leading coefficient with non-integer exponent");
    long p = rat_num_long(e), r = rat_den_long(e);
    if (c_.size() == 1 && prec_ == kInf) return monomial(Rat(1), val_ * p, ram_ * r);
    if (prec_ == kInf)
        throw std::logic_error("pow: fractional power of an exact series; truncate first");
    long len = prec_ - val_;
    // u = a / leading monomial - 1, on the relative grid
    std::vector<Rat> uc(c_.begin() + 1, c_.end());
    PSeries u(ram_, 1, len, std::move(uc));
    PSeries s = constant(rat_binom(e, static_cast<unsigned long>(len) - 1));
    for (long k = len - 2; k >= 0; --k)
        s = (s * u).truncated_idx(len) + constant(rat_binom(e, static_cast<unsigned long>(k)));
    s = s.truncated_idx(len);
    // rescale the grid by r and shift by val*p
    s = s.with_ram(ram_ * r);
    s.val_ += val_ * p;
    if (s.prec_ != kInf) s.prec_ += val_ * p;
    return s.reduced();
}

PSeries PSeries::exp() const {
    if (c_.empty()) {
        if (prec_ == kInf) return one();
        if (prec_ <= 0) return PSeries(ram_, prec_, prec_, {});
        std::vector<Rat> f(prec_, Rat(0));
        f[0] = 1;
        return PSeries(ram_, 0, prec_, std::move(f));
    }
    if (val_ < 1) throw std::domain_error("exp: argument must have positive valuation");
    if (prec_ == kInf) throw std::logic_error("exp: exact argument; truncate first");
    long P = prec_;
    std::vector<Rat> a(P, Rat(0));
    for (size_t k = 0; k < c_.size(); ++k) a[val_ + static_cast<long>(k)] = c_[k];
    std::vector<Rat> f(P, Rat(0));
    f[0] = 1;
    for (long k = 1; k < P; ++k) {
        Rat s(0);
        for (long j = val_; j <= k; ++j)
            if (a[j] != 0) s += Rat(j) * a[j] * f[k - j];
        f[k] = s / Rat(k);
    }
    return PSeries(ram_, 0, P, std::move(f));
}

PSeries PSeries::log() const {
    if (c_.empty() || val_ != 0 || c_.front() != 1)
        throw std::domain_error("log: leading coefficient must be 1");
    if (prec_ == kInf) {
        if (c_.size() == 1) return zero();
        throw std::logic_error("log: exact argument; truncate first");
    }
    PSeries quot = dq() / *this;
    // integrate: coefficient at idx k picks up factor ram/k
    PSeries r = quot;
    for (size_t k = 0; k < r.c_.size(); ++k) {
        long idx = r.val_ + static_cast<long>(k);
        r.c_[k] *= rat(r.ram_, idx);
    }
    r.normalize();
    return r;
}

PSeries PSeries::compose(const PSeries& inner) const {
    PSeries outer = reduced();
    if (outer.ram_ != 1 || (!outer.c_.empty() && outer.val_ < 0))
        throw std::domain_error("compose: outer must have nonnegative integer exponents");
    // lowest index at which inner may be nonzero
    long iev = inner.c_.empty() ? inner.prec_ : inner.val_;
    if (iev < 1) throw std::domain_error("compose: inner valuation must be positive");
    long top = outer.prec_ == kInf ? outer.val_ + static_cast<long>(outer.c_.size()) - 1
                                   : outer.prec_ - 1;
    if (outer.c_.empty()) top = -1;
    PSeries res = zero();
    for (long k = top; k >= 0; --k) {
        Rat ck = (k >= outer.val_ && k < outer.val_ + static_cast<long>(outer.c_.size()))
                     ? outer.c_[k - outer.val_]
                     : Rat(0);
        res = res * inner + constant(ck);
    }
    if (outer.prec_ != kInf && iev < kInf) {
        long cap = pscale(outer.prec_, iev);
        if (cap < res.prec_) res = res.truncated_idx(cap);
    }
    return res;
}

PSeries PSeries::reversion() const {
    PSeries a = reduced();
    if (a.ram_ != 1 || a.c_.empty() || a.val_ != 1)
        throw std::domain_error("reversion: series must be c*q + ... with c != 0");
    if (a.prec_ == kInf) {
        if (a.c_.size() == 1) return monomial(Rat(1) / a.c_[0], 1);
        throw std::logic_error("reversion: exact argument; truncate first");
    }
    long P = a.prec_;
    // powers of a, truncated below idx P
    std::vector<PSeries> apow(P);
    if (P > 1) apow[1] = a;
    for (long k = 2; k < P; ++k) apow[k] = (apow[k - 1] * a).truncated_idx(P);
    std::vector<Rat> b(P, Rat(0));
    if (P > 1) b[1] = Rat(1) / a.c_[0];
    for (long n = 2; n < P; ++n) {
        Rat s(0);
        for (long k = 1; k < n; ++k) s += b[k] * apow[k].coeff(n);
        b[n] = -s / rat_pow(a.c_[0], n);
    }
    std::vector<Rat> bc(b.begin() + 1, b.end());
    return PSeries(1, 1, P, std::move(bc));
}

PSeries PSeries::rescale(long k) const {
    if (k < 1) throw std::domain_error("rescale: factor must be positive");
    if (k == 1) return *this;
    std::vector<Rat> c;
    if (!c_.empty()) {
        c.assign((c_.size() - 1) * k + 1, Rat(0));
        for (size_t i = 0; i < c_.size(); ++i) c[i * k] = c_[i];
    }
    long v = val_ * k;
    long p = pscale(prec_, k);
    if (p != kInf && !c.empty()) c.resize(p - v, Rat(0));
    if (c.empty() && p != kInf) v = p;
    return PSeries(ram_, v, p, std::move(c));
}

void PSeries::dump(std::ostream& os) const {
    bool any = false;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        any = true;
        os << rat_str(c_[k]) << " * q^(" << rat_str(rat(val_ + static_cast<long>(k), ram_))
           << ")\n";
    }
    if (!any) os << "0\n";
}

std::string PSeries::dump_str() const {
    std::ostringstream os;
    dump(os);
    return os.str();
}

std::optional<PSeries::Mismatch> PSeries::first_mismatch(const PSeries& a0, const PSeries& b0) {
    PSeries a = a0, b = b0;
    merge_grids(a, b);
    long lo = std::min(a.effective_val(), b.effective_val());
    long hi = std::min(a.prec_, b.prec_);
    if (hi == kInf)
        hi = std::max(a.val_ + static_cast<long>(a.c_.size()),
                      b.val_ + static_cast<long>(b.c_.size()));
    auto at = [](const PSeries& s, long idx) -> Rat {
        if (idx < s.val_ || idx >= s.val_ + static_cast<long>(s.c_.size())) return Rat(0);
        return s.c_[idx - s.val_];
    };
    for (long idx = lo; idx < hi; ++idx) {
        Rat x = at(a, idx), y = at(b, idx);
        if (x != y) return Mismatch{rat(idx, a.ram_), x, y};
    }
    return std::nullopt;
}

bool PSeries::agree(const PSeries& a, const PSeries& b) { return !first_mismatch(a, b); }

Rat PSeries::agree_prec_exp(const PSeries& a, const PSeries& b) {
    long p = std::min(a.prec_ == kInf ? kInf : a.prec_ * (std::lcm(a.ram_, b.ram_) / a.ram_),
                      b.prec_ == kInf ? kInf : b.prec_ * (std::lcm(a.ram_, b.ram_) / b.ram_));
    if (p == kInf) return Rat(kInf);
    return rat(p, std::lcm(a.ram_, b.ram_));
}

std::ostream& operator<<(std::ostream& os, const PSeries& s) {
    s.dump(os);
    return os;
}

}  // namespace qforms
