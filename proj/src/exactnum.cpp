#include "equidissect/exactnum.hpp"

#include <utility>

namespace equidissect {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ZeroDenominator: return "ZERO_DENOMINATOR";
        case ErrorCode::DivideByZero: return "DIVIDE_BY_ZERO";
        case ErrorCode::FieldMismatch: return "FIELD_MISMATCH";
        case ErrorCode::NegativeRadicand: return "NEGATIVE_RADICAND";
        case ErrorCode::ParamOutOfRange: return "PARAM_OUT_OF_RANGE";
        case ErrorCode::BadHypotheses: return "BAD_HYPOTHESES";
        case ErrorCode::PolygonMismatch: return "POLYGON_MISMATCH";
        case ErrorCode::NotCommensurable: return "NOT_COMMENSURABLE";
        case ErrorCode::NotATiling: return "NOT_A_TILING";
        case ErrorCode::MalformedInput: return "MALFORMED_INPUT";
    }
    return "UNKNOWN";
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) {
        throw Error(ErrorCode::ZeroDenominator, "rational with denominator 0");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw Error(ErrorCode::DivideByZero, "rational division by zero");
    }
    q_ /= o.q_;
    return *this;
}

std::string Rational::str() const {
    return num().get_str() + "/" + den().get_str();
}

Rational Rational::parse(const std::string& text) {
    mpq_class q;
    if (text.empty() || q.set_str(text, 10) != 0) {
        throw Error(ErrorCode::MalformedInput, "bad rational literal '" + text + "'");
    }
    if (q.get_den() == 0) {
        throw Error(ErrorCode::ZeroDenominator, "rational literal '" + text + "' has denominator 0");
    }
    q.canonicalize();
    return Rational(q.get_num(), q.get_den());
}

std::pair<mpz_class, mpz_class> squarefree_decompose(const mpz_class& n) {
    mpz_class core = n;
    mpz_class f = 1;
    mpz_class p = 2;
    while (p * p <= core) {
        mpz_class p2 = p * p;
        while (mpz_divisible_p(core.get_mpz_t(), p2.get_mpz_t())) {
            core /= p2;
            f *= p;
        }
        p += (p == 2) ? 1 : 2;
    }
    return {core, f};
}

QuadValue QuadValue::make(Rational rat, Rational coef, const mpz_class& radicand) {
    if (radicand < 1) {
        throw Error(ErrorCode::NegativeRadicand,
                    "radicand must be >= 1, got " + radicand.get_str());
    }
    QuadValue v;
    if (coef.is_zero()) {
        v.rat_ = std::move(rat);
        return v;
    }
    if (radicand == 1) {
        v.rat_ = rat + coef;
        return v;
    }
    auto [core, f] = squarefree_decompose(radicand);
    coef *= Rational(f);
    if (core == 1) {
        v.rat_ = rat + coef;
        return v;
    }
    v.rat_ = std::move(rat);
    if (!core.fits_slong_p()) {
        throw Error(ErrorCode::ParamOutOfRange,
                    "squarefree radicand core too large: " + core.get_str());
    }
    v.coef_ = std::move(coef);
    v.radicand_ = core.get_si();
    return v;
}

namespace {

// Resolves the common field of two values; radicand 1 promotes into anything.
std::int64_t common_radicand(const QuadValue& a, const QuadValue& b) {
    if (a.radicand() == b.radicand()) return a.radicand();
    if (a.radicand() == 1) return b.radicand();
    if (b.radicand() == 1) return a.radicand();
    throw Error(ErrorCode::FieldMismatch,
                "incompatible radicands " + std::to_string(a.radicand()) + " and " +
                    std::to_string(b.radicand()));
}

QuadValue compose(Rational rat, Rational coef, std::int64_t m) {
    QuadValue v;
    if (coef.is_zero()) {
        v = QuadValue(std::move(rat));
    } else {
        v = QuadValue::make(std::move(rat), std::move(coef), mpz_class(m));
    }
    return v;
}

}  // namespace

QuadValue QuadValue::operator-() const {
    QuadValue v;
    v.rat_ = -rat_;
    v.coef_ = -coef_;
    v.radicand_ = radicand_;
    return v;
}

QuadValue operator+(const QuadValue& a, const QuadValue& b) {
    if (a.radicand_ == 1 && b.radicand_ == 1) return QuadValue(a.rat_ + b.rat_);
    std::int64_t m = common_radicand(a, b);
    return compose(a.rat_ + b.rat_, a.coef_ + b.coef_, m);
}

QuadValue operator-(const QuadValue& a, const QuadValue& b) {
    if (a.radicand_ == 1 && b.radicand_ == 1) return QuadValue(a.rat_ - b.rat_);
    std::int64_t m = common_radicand(a, b);
    return compose(a.rat_ - b.rat_, a.coef_ - b.coef_, m);
}

QuadValue operator*(const QuadValue& a, const QuadValue& b) {
    if (a.radicand_ == 1 && b.radicand_ == 1) return QuadValue(a.rat_ * b.rat_);
    std::int64_t m = common_radicand(a, b);
    // (x1 + y1 s)(x2 + y2 s) = x1 x2 + y1 y2 m + (x1 y2 + x2 y1) s,  s = sqrt(m)
    Rational rat = a.rat_ * b.rat_ + a.coef_ * b.coef_ * Rational(m);
    Rational coef = a.rat_ * b.coef_ + b.rat_ * a.coef_;
    return compose(std::move(rat), std::move(coef), m);
}

QuadValue operator/(const QuadValue& a, const QuadValue& b) {
    if (b.is_zero()) {
        throw Error(ErrorCode::DivideByZero, "division by zero field element");
    }
    if (a.radicand_ == 1 && b.radicand_ == 1) return QuadValue(a.rat_ / b.rat_);
    std::int64_t m = common_radicand(a, b);
    // Multiply by the conjugate: 1/(x + y s) = (x - y s)/(x^2 - y^2 m).
    Rational norm = b.rat_ * b.rat_ - b.coef_ * b.coef_ * Rational(m);
    Rational rat = (a.rat_ * b.rat_ - a.coef_ * b.coef_ * Rational(m)) / norm;
    Rational coef = (a.coef_ * b.rat_ - a.rat_ * b.coef_) / norm;
    return compose(std::move(rat), std::move(coef), m);
}

int QuadValue::sign() const {
    int sx = rat_.sign();
    int sy = coef_.sign();
    if (sy == 0) return sx;
    if (sx == 0) return sy;
    if (sx == sy) return sx;
    // Opposite signs: |x| vs |y|*sqrt(m) decided by squaring (exact; a tie
    // would force sqrt(m) rational, impossible for squarefree m >= 2).
    Rational x2 = rat_ * rat_;
    Rational y2m = coef_ * coef_ * Rational(radicand_);
    return x2 > y2m ? sx : sy;
}

namespace {

// floor(sqrt(n)) for n >= 0.
mpz_class isqrt_floor(const mpz_class& n) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

mpz_class pow10(int e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return r;
}

}  // namespace

std::string QuadValue::to_decimal(int digits) const {
    if (digits < 1) {
        throw Error(ErrorCode::ParamOutOfRange, "decimal digits must be >= 1");
    }
    const int guard = 15;
    const int prec = digits + guard;
    // value * 10^prec, with sqrt(m) replaced by its floor approximation at
    // the guarded precision; the guard digits absorb the approximation error
    // before rounding back to the requested digit count.
    mpz_class scale = pow10(prec);
    mpq_class approx(rat_.num() * scale, rat_.den());
    if (!coef_.is_zero()) {
        mpz_class root = isqrt_floor(mpz_class(radicand_) * scale * scale);
        approx += mpq_class(coef_.num() * root, coef_.den() * scale);
    }
    approx.canonicalize();
    // round(approx / 10^guard) half away from zero
    mpq_class scaled = approx / pow10(guard);
    mpq_class half(1, 2);
    bool negative = sgn(scaled) < 0;
    mpq_class mag = negative ? mpq_class(-scaled) : scaled;
    mpz_class units = mpz_class((mag + half).get_num() / (mag + half).get_den());
    mpz_class base = pow10(digits);
    mpz_class whole = units / base;
    mpz_class frac = units % base;
    std::string fs = frac.get_str();
    fs.insert(0, static_cast<size_t>(digits) - fs.size(), '0');
    std::string out = whole.get_str() + "." + fs;
    if (negative && units != 0) out.insert(0, "-");
    return out;
}

std::string QuadValue::str() const {
    if (is_rational()) return rat_.str();
    std::string out;
    bool have_rat = !rat_.is_zero();
    if (have_rat) out += rat_.str();
    if (coef_.sign() < 0) {
        out += "-";
        out += (-coef_).str();
    } else {
        if (have_rat) out += "+";
        out += coef_.str();
    }
    out += "*sqrt(" + std::to_string(radicand_) + ")";
    return out;
}

}  // namespace equidissect
