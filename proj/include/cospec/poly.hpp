#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cospec {

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// Coefficient k multiplies x^k; the representation is kept trimmed so the
/// zero polynomial has no coefficients and degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<mpz_class> coeffs);
    Poly(std::initializer_list<long> coeffs);

    static Poly monomial(long coeff, int power);

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<mpz_class>& coefficients() const noexcept { return c_; }
    /// Coefficient of x^k (zero beyond the degree).
    mpz_class coeff(int k) const;
    const mpz_class& leading() const { return c_.back(); }

    Poly derivative() const;
    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) = default;

    /// Sign of p(x), computed exactly.
    int sign_at(const mpq_class& x) const;
    int sign_at_infinity(bool positive) const;
    long double evaluate(long double x) const;

    /// Divides out the content and makes the leading coefficient positive.
    Poly primitive() const;
    /// A positive integer multiple of p(x - shift): roots move right by shift.
    Poly shifted(const mpq_class& shift) const;
    /// A positive integer multiple of p(x + at), i.e. the Taylor expansion at `at`.
    Poly taylor_at(const mpq_class& at) const;

    std::string to_string() const;

private:
    void trim();
    std::vector<mpz_class> c_;
};

/// Primitive gcd with positive leading coefficient; gcd(0, 0) is 0.
Poly gcd(const Poly& a, const Poly& b);
/// a / b when b divides a over the rationals and the quotient is integral.
Poly divide_exact(const Poly& a, const Poly& b);
/// p / gcd(p, p'), primitive.
Poly squarefree_part(const Poly& p);

/// Standard Sturm sequence p, p', -rem(p, p'), ... with positive rescaling.
class SturmSequence {
public:
    explicit SturmSequence(const Poly& p);

    /// Number of distinct real roots in (lo, hi].
    int count_roots(const mpq_class& lo, const mpq_class& hi) const;
    /// Number of distinct real roots in (lo, +inf).
    int count_roots_above(const mpq_class& lo) const;
    int count_real_roots() const;

    const Poly& base() const { return seq_.front(); }

private:
    int variations(const mpq_class& x) const;
    int variations_at_infinity(bool positive) const;
    std::vector<Poly> seq_;
};

/// Power of two bounding the absolute value of every complex root.
mpq_class root_bound(const Poly& p);

}  // namespace cospec
