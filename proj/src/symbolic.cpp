#include "fourfold/symbolic.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fourfold {

namespace {

// n = a^2 * b with b squarefree.
std::pair<std::uint64_t, std::uint64_t> split_square(std::uint64_t n) {
    std::uint64_t a = 1, b = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        while (n % (p * p) == 0) {
            n /= p * p;
            a *= p;
        }
        if (n % p == 0) {
            n /= p;
            b *= p;
        }
    }
    return {a, b * n};
}

// Rational enclosure of sqrt(s) with about `digits` decimals.
std::pair<Rational, Rational> sqrt_enclosure(std::uint64_t s, int digits) {
    Integer scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Integer n = Integer(static_cast<unsigned long>(s)) * scale * scale;
    Integer r = sqrt(n);
    Rational lo(r, scale), hi(r + 1, scale);
    lo.canonicalize();
    hi.canonicalize();
    if (r * r == n) hi = lo;
    return {lo, hi};
}

// Enclosure of a nonnegative finite value |q| pi^p sqrt(s).
std::pair<Rational, Rational> magnitude_enclosure(const SymbolicValue& v, int level) {
    Rational a = ::abs(v.q());
    auto [plo, phi] = pi_enclosure(level);
    auto [slo, shi] = sqrt_enclosure(v.radicand(), 10 * (level + 1));
    Rational lo = a * slo, hi = a * shi;
    for (int i = 0; i < v.pi_power(); ++i) {
        lo *= plo;
        hi *= phi;
    }
    return {lo, hi};
}

}  // namespace

SymbolicValue::SymbolicValue(const Rational& q, int pi_power, std::uint64_t radicand)
    : q_(q), pi_power_(pi_power), radicand_(radicand) {
    if (pi_power < 0 || pi_power > 2) throw std::domain_error("pi power must be 0, 1 or 2");
    canonicalize();
}

SymbolicValue SymbolicValue::plus_infinity() {
    SymbolicValue v;
    v.kind_ = Kind::PlusInfinity;
    return v;
}

SymbolicValue SymbolicValue::minus_infinity() {
    SymbolicValue v;
    v.kind_ = Kind::MinusInfinity;
    return v;
}

SymbolicValue SymbolicValue::with_sqrt(const Rational& q, int pi_power, std::uint64_t n) {
    return SymbolicValue(q, pi_power, n);
}

void SymbolicValue::canonicalize() {
    q_.canonicalize();
    if (radicand_ == 0) q_ = 0;
    if (q_ == 0) {
        pi_power_ = 0;
        radicand_ = 1;
        return;
    }
    auto [a, b] = split_square(radicand_);
    q_ *= Rational(Integer(static_cast<unsigned long>(a)));
    radicand_ = b;
}

int SymbolicValue::sign() const {
    if (kind_ == Kind::PlusInfinity) return 1;
    if (kind_ == Kind::MinusInfinity) return -1;
    return sgn(q_);
}

SymbolicValue SymbolicValue::operator-() const {
    if (kind_ == Kind::PlusInfinity) return minus_infinity();
    if (kind_ == Kind::MinusInfinity) return plus_infinity();
    SymbolicValue v = *this;
    v.q_ = -q_;
    return v;
}

SymbolicValue SymbolicValue::operator+(const SymbolicValue& o) const {
    if (!finite() || !o.finite()) {
        if (!finite() && !o.finite() && kind_ != o.kind_)
            throw std::domain_error("infinity minus infinity");
        return finite() ? o : *this;
    }
    if (q_ == 0) return o;
    if (o.q_ == 0) return *this;
    if (pi_power_ != o.pi_power_ || radicand_ != o.radicand_)
        throw std::domain_error("cannot add " + str() + " and " + o.str() + " exactly");
    return SymbolicValue(q_ + o.q_, pi_power_, radicand_);
}

SymbolicValue SymbolicValue::operator*(const Rational& k) const {
    if (!finite()) {
        if (k == 0) throw std::domain_error("zero times infinity");
        return (k > 0) == (kind_ == Kind::PlusInfinity) ? plus_infinity() : minus_infinity();
    }
    return SymbolicValue(q_ * k, pi_power_, radicand_);
}

SymbolicValue SymbolicValue::operator/(const Rational& k) const {
    if (k == 0) throw std::domain_error("division by zero");
    return *this * Rational(1 / k);
}

SymbolicValue SymbolicValue::operator*(const SymbolicValue& o) const {
    if (!finite() || !o.finite()) {
        if (sign() == 0 || o.sign() == 0) throw std::domain_error("zero times infinity");
        return sign() * o.sign() > 0 ? plus_infinity() : minus_infinity();
    }
    if (q_ == 0 || o.q_ == 0) return SymbolicValue(0);
    int p = pi_power_ + o.pi_power_;
    if (p > 2) throw std::domain_error("pi power above 2 is not representable");
    std::uint64_t g = std::gcd(radicand_, o.radicand_);
    std::uint64_t s = (radicand_ / g) * (o.radicand_ / g);
    return SymbolicValue(q_ * o.q_ * Rational(Integer(static_cast<unsigned long>(g))), p, s);
}

SymbolicValue SymbolicValue::abs() const {
    return sign() < 0 ? -*this : *this;
}

bool SymbolicValue::operator==(const SymbolicValue& o) const {
    if (kind_ != o.kind_) return false;
    if (!finite()) return true;
    return q_ == o.q_ && pi_power_ == o.pi_power_ && radicand_ == o.radicand_;
}

std::strong_ordering SymbolicValue::operator<=>(const SymbolicValue& o) const {
    auto rank = [](Kind k) { return k == Kind::MinusInfinity ? 0 : k == Kind::Finite ? 1 : 2; };
    if (rank(kind_) != rank(o.kind_) || !finite()) return rank(kind_) <=> rank(o.kind_);
    if (*this == o) return std::strong_ordering::equal;
    int sa = sign(), sb = o.sign();
    if (sa != sb) return sa <=> sb;
    // Same nonzero sign; compare magnitudes, flipping for negatives.
    std::strong_ordering mag = std::strong_ordering::equal;
    if (pi_power_ == o.pi_power_) {
        Rational x = q_ * q_ * Rational(Integer(static_cast<unsigned long>(radicand_)));
        Rational y = o.q_ * o.q_ * Rational(Integer(static_cast<unsigned long>(o.radicand_)));
        mag = cmp(x, y) < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    } else {
        bool decided = false;
        for (int level = 1; level <= kMaxPiLevel && !decided; ++level) {
            auto [alo, ahi] = magnitude_enclosure(*this, level);
            auto [blo, bhi] = magnitude_enclosure(o, level);
            if (ahi < blo) { mag = std::strong_ordering::less; decided = true; }
            else if (bhi < alo) { mag = std::strong_ordering::greater; decided = true; }
        }
        if (!decided) throw std::domain_error("values too close to separate: " + str() + ", " + o.str());
    }
    if (sa < 0) return 0 <=> mag;
    return mag;
}

double SymbolicValue::approx() const {
    if (kind_ == Kind::PlusInfinity) return INFINITY;
    if (kind_ == Kind::MinusInfinity) return -INFINITY;
    return q_.get_d() * std::pow(M_PI, pi_power_) * std::sqrt(static_cast<double>(radicand_));
}

std::string SymbolicValue::str() const {
    if (kind_ == Kind::PlusInfinity) return "+inf";
    if (kind_ == Kind::MinusInfinity) return "-inf";
    std::string out;
    bool bare = pi_power_ == 0 && radicand_ == 1;
    if (bare || ::abs(q_) != 1) out = to_string(q_);
    else if (q_ < 0) out = "-";
    auto append = [&](const std::string& f) {
        if (!out.empty() && out != "-") out += "*";
        out += f;
    };
    if (pi_power_ == 1) append("pi");
    if (pi_power_ == 2) append("pi^2");
    if (radicand_ != 1) append("sqrt(" + std::to_string(radicand_) + ")");
    return out;
}

}  // namespace fourfold
