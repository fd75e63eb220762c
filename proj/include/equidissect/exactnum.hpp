#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

#include "equidissect/error.hpp"

namespace equidissect {

/// Arbitrary-precision rational, always stored reduced with positive
/// denominator, so equality is componentwise.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}           // NOLINT: implicit by design
    Rational(const mpz_class& n) : q_(n) {}
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}
    Rational(const mpz_class& num, const mpz_class& den);

    static Rational parse(const std::string& text);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }
    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t());
        return c <=> 0;
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// Canonical "num/den" text, e.g. "14/9", "-1/2", "2/1".
    std::string str() const;

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

/// Element x + y*sqrt(m) of the real quadratic field Q(sqrt(m)).
///
/// The radicand is kept squarefree and >= 2; purely rational values are
/// stored with radicand 1 and coefficient 0, which makes the representation
/// unique and equality componentwise. Values with radicand 1 promote into
/// any field on demand; two distinct radicands >= 2 never mix.
class QuadValue {
public:
    QuadValue() = default;
    QuadValue(long n) : rat_(n) {}        // NOLINT: implicit by design
    QuadValue(Rational r) : rat_(std::move(r)) {}

    /// Builds rat + coef*sqrt(radicand), extracting square factors from the
    /// radicand (coef is scaled accordingly) and folding sqrt(1) into the
    /// rational part. Throws NegativeRadicand unless radicand >= 1.
    static QuadValue make(Rational rat, Rational coef, const mpz_class& radicand);

    const Rational& rat() const { return rat_; }
    const Rational& coef() const { return coef_; }
    std::int64_t radicand() const { return radicand_; }
    bool is_rational() const { return radicand_ == 1; }
    bool is_zero() const { return rat_.is_zero() && coef_.is_zero(); }

    QuadValue operator-() const;
    friend QuadValue operator+(const QuadValue& a, const QuadValue& b);
    friend QuadValue operator-(const QuadValue& a, const QuadValue& b);
    friend QuadValue operator*(const QuadValue& a, const QuadValue& b);
    friend QuadValue operator/(const QuadValue& a, const QuadValue& b);
    QuadValue& operator+=(const QuadValue& o) { return *this = *this + o; }
    QuadValue& operator-=(const QuadValue& o) { return *this = *this - o; }
    QuadValue& operator*=(const QuadValue& o) { return *this = *this * o; }
    QuadValue& operator/=(const QuadValue& o) { return *this = *this / o; }

    /// Exact sign of the real number x + y*sqrt(m). When x and y disagree in
    /// sign, the larger of x^2 and y^2*m decides; they cannot tie for
    /// squarefree m >= 2 unless both are zero.
    int sign() const;

    friend bool operator==(const QuadValue& a, const QuadValue& b) {
        return a.radicand_ == b.radicand_ && a.rat_ == b.rat_ && a.coef_ == b.coef_;
    }
    /// Ordering of the real values; throws FieldMismatch on incompatible radicands.
    friend std::strong_ordering operator<=>(const QuadValue& a, const QuadValue& b) {
        return (a - b).sign() <=> 0;
    }

    QuadValue abs() const { return sign() < 0 ? -*this : *this; }

    /// Decimal approximation rounded to `digits` fractional digits.
    /// Display-only: never used in exact decisions.
    std::string to_decimal(int digits) const;

    /// Debug/diagnostic text, e.g. "3/4" or "1/6+5/9*sqrt(3)".
    std::string str() const;

private:
    Rational rat_;
    Rational coef_;
    std::int64_t radicand_ = 1;
};

/// Largest squarefree divisor pair: returns (core, f) with n = core * f^2
/// and core squarefree.
std::pair<mpz_class, mpz_class> squarefree_decompose(const mpz_class& n);

}  // namespace equidissect
