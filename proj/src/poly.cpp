#include "cospec/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cospec {

Poly::Poly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

Poly Poly::monomial(long coeff, int power) {
    std::vector<mpz_class> c(power + 1);
    c[power] = coeff;
    return Poly(std::move(c));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class Poly::coeff(int k) const {
    if (k < 0 || k > degree()) return 0;
    return c_[k];
}

Poly Poly::derivative() const {
    if (degree() < 1) return {};
    std::vector<mpz_class> d(degree());
    for (int k = 1; k <= degree(); ++k) d[k - 1] = c_[k] * k;
    return Poly(std::move(d));
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            mpz_addmul(c[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
        }
    }
    return Poly(std::move(c));
}

int Poly::sign_at(const mpq_class& x) const {
    if (is_zero()) return 0;
    // den^d * p(num/den), Horner in homogeneous form.
    const mpz_class& num = x.get_num();
    const mpz_class& den = x.get_den();
    mpz_class acc = c_.back();
    mpz_class pow = 1;
    for (int k = degree() - 1; k >= 0; --k) {
        pow *= den;
        acc *= num;
        if (c_[k] != 0) mpz_addmul(acc.get_mpz_t(), c_[k].get_mpz_t(), pow.get_mpz_t());
    }
    return sgn(acc);
}

int Poly::sign_at_infinity(bool positive) const {
    if (is_zero()) return 0;
    int s = sgn(leading());
    return (positive || degree() % 2 == 0) ? s : -s;
}

long double Poly::evaluate(long double x) const {
    long double acc = 0;
    for (int k = degree(); k >= 0; --k) acc = acc * x + static_cast<long double>(c_[k].get_d());
    return acc;
}

Poly Poly::primitive() const {
    if (is_zero()) return {};
    mpz_class g = 0;
    for (const auto& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (sgn(leading()) < 0) g = -g;
    Poly r = *this;
    if (g != 1) {
        for (auto& v : r.c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
    return r;
}

Poly Poly::taylor_at(const mpq_class& at) const {
    // den^d * p((y*den + num)/den) expanded in y via repeated synthetic division
    // on the integer polynomial q(z) = den^d p(z/den), evaluated at z = num + den*y.
    if (is_zero()) return {};
    const int d = degree();
    const mpz_class& num = at.get_num();
    const mpz_class& den = at.get_den();
    // q(z) = sum c_k den^(d-k) z^k
    std::vector<mpz_class> q(d + 1);
    mpz_class pow = 1;
    for (int k = d; k >= 0; --k) {
        q[k] = c_[k] * pow;
        pow *= den;
    }
    // Taylor shift of q by num (z = num + w).
    for (int i = 0; i < d; ++i) {
        for (int k = d - 1; k >= i; --k) mpz_addmul(q[k].get_mpz_t(), q[k + 1].get_mpz_t(), num.get_mpz_t());
    }
    // w = den*y: coefficient of y^k gains den^k.
    pow = 1;
    for (int k = 0; k <= d; ++k) {
        q[k] *= pow;
        pow *= den;
    }
    return Poly(std::move(q));
}

Poly Poly::shifted(const mpq_class& shift) const { return taylor_at(-shift); }

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const mpz_class& v = c_[k];
        if (v == 0) continue;
        mpz_class mag = abs(v);
        if (out.empty()) {
            if (v < 0) out += "-";
        } else {
            out += v < 0 ? " - " : " + ";
        }
        if (mag != 1 || k == 0) out += mag.get_str();
        if (k >= 1) out += "x";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

namespace {

// lc(b)^rounds * a = q*b + r; returns r.
Poly pseudo_remainder(const Poly& a, const Poly& b, int* rounds = nullptr) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<mpz_class> r = a.coefficients();
    const int db = b.degree();
    const auto& bc = b.coefficients();
    const mpz_class& lb = b.leading();
    int dr = a.degree();
    int done = 0;
    while (dr >= db && dr >= 0) {
        ++done;
        mpz_class lr = r[dr];
        for (int k = 0; k <= dr; ++k) r[k] *= lb;
        for (int k = 0; k <= db; ++k) mpz_submul(r[dr - db + k].get_mpz_t(), lr.get_mpz_t(), bc[k].get_mpz_t());
        --dr;
        while (dr >= 0 && r[dr] == 0) --dr;
        r.resize(dr + 1);
    }
    if (rounds) *rounds = done;
    return Poly(std::move(r));
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a.primitive();
    Poly y = b.primitive();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        Poly r = pseudo_remainder(x, y).primitive();
        x = std::move(y);
        y = std::move(r);
    }
    return x.primitive();
}

Poly divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.degree() < b.degree()) {
        if (a.is_zero()) return {};
        throw std::domain_error("divide_exact: divisor has larger degree");
    }
    std::vector<mpz_class> r = a.coefficients();
    const int db = b.degree();
    const auto& bc = b.coefficients();
    std::vector<mpz_class> q(a.degree() - db + 1);
    for (int k = a.degree(); k >= db; --k) {
        if (r[k] == 0) continue;
        if (!mpz_divisible_p(r[k].get_mpz_t(), b.leading().get_mpz_t())) {
            throw std::domain_error("divide_exact: quotient is not integral");
        }
        mpz_class t;
        mpz_divexact(t.get_mpz_t(), r[k].get_mpz_t(), b.leading().get_mpz_t());
        q[k - db] = t;
        for (int j = 0; j <= db; ++j) mpz_submul(r[k - db + j].get_mpz_t(), t.get_mpz_t(), bc[j].get_mpz_t());
    }
    for (int k = 0; k < db; ++k) {
        if (r[k] != 0) throw std::domain_error("divide_exact: nonzero remainder");
    }
    return Poly(std::move(q));
}

Poly squarefree_part(const Poly& p) {
    if (p.degree() < 1) return p.primitive();
    Poly g = gcd(p, p.derivative());
    if (g.degree() == 0) return p.primitive();
    return divide_exact(p.primitive(), g).primitive();
}

SturmSequence::SturmSequence(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("Sturm sequence of the zero polynomial");
    seq_.push_back(p.primitive());
    seq_.push_back(seq_.front().derivative().primitive());
    while (!seq_.back().is_zero() && seq_.back().degree() > 0) {
        const Poly& a = seq_[seq_.size() - 2];
        const Poly& b = seq_.back();
        // prem = lc(b)^rounds * rem, so -rem is a positive multiple of
        // -prem * sign(lc(b))^rounds.
        int rounds = 0;
        Poly r = pseudo_remainder(a, b, &rounds);
        const bool flip = !(sgn(b.leading()) < 0 && rounds % 2 == 1);
        if (flip) r = -r;
        if (r.is_zero()) break;
        mpz_class g = 0;
        for (const auto& v : r.coefficients()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        std::vector<mpz_class> c = r.coefficients();
        for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        seq_.emplace_back(std::move(c));
    }
    if (seq_.back().is_zero()) seq_.pop_back();
}

int SturmSequence::variations(const mpq_class& x) const {
    int count = 0;
    int last = 0;
    for (const auto& p : seq_) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

int SturmSequence::variations_at_infinity(bool positive) const {
    int count = 0;
    int last = 0;
    for (const auto& p : seq_) {
        int s = p.sign_at_infinity(positive);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

int SturmSequence::count_roots(const mpq_class& lo, const mpq_class& hi) const {
    if (hi <= lo) return 0;
    return variations(lo) - variations(hi);
}

int SturmSequence::count_roots_above(const mpq_class& lo) const {
    return variations(lo) - variations_at_infinity(true);
}

int SturmSequence::count_real_roots() const {
    return variations_at_infinity(false) - variations_at_infinity(true);
}

mpq_class root_bound(const Poly& p) {
    // Fujiwara: |z| <= 2 max_k |c_{d-k}/c_d|^(1/k); rounded up to a power of two
    // through bit lengths.
    const int d = p.degree();
    if (d < 1) return 1;
    const mpz_class lead = abs(p.leading());
    const long lead_bits = static_cast<long>(mpz_sizeinbase(lead.get_mpz_t(), 2)) - 1;  // floor(log2 lead)
    long best = 0;
    for (int k = 1; k <= d; ++k) {
        const mpz_class& c = p.coefficients()[d - k];
        if (c == 0) continue;
        const long bits = static_cast<long>(mpz_sizeinbase(c.get_mpz_t(), 2));  // ceil-ish of log2|c| + 1
        const long ratio_bits = bits - lead_bits;  // |c/lead| < 2^ratio_bits
        const long e = ratio_bits <= 0 ? 0 : (ratio_bits + k - 1) / k;
        best = std::max(best, e);
    }
    mpz_class b = 1;
    b <<= static_cast<unsigned long>(best + 1);
    return mpq_class(b);
}

}  // namespace cospec
