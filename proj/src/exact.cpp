#include "fourfold/exact.hpp"

#include <stdexcept>

namespace fourfold {

namespace {

const char* kPiDigits =
    "3.14159265358979323846264338327950288419716939937510"
    "58209749445923078164062862089986280348253421170679";

Rational decimal(const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(Integer(s));
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    Integer den = 1;
    for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
    Rational r(Integer(digits), den);
    r.canonicalize();
    return r;
}

int digits_for_level(int level) {
    switch (level) {
        case 1: return 30;
        case 2: return 60;
        default: return 99;
    }
}

}  // namespace

std::string to_string(const Rational& value) {
    Rational q = value;
    q.canonicalize();
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    auto dot = text.find('.');
    try {
        if (dot != std::string::npos && slash == std::string::npos) {
            std::string frac = text.substr(dot + 1);
            if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("bad decimal");
            Integer num(text.substr(0, dot) + frac);
            Integer den;
            mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
            Rational r(num, den);
            r.canonicalize();
            return r;
        }
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        Rational r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational: '" + text + "'");
    }
}

Rational floor(const Rational& q) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(f);
}

Rational ceil(const Rational& q) {
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(c);
}

double to_double(const Rational& q) { return q.get_d(); }

std::pair<Rational, Rational> pi_enclosure(int level) {
    if (level < 1) level = 1;
    if (level > kMaxPiLevel) level = kMaxPiLevel;
    int n = digits_for_level(level);
    std::string s = std::string(kPiDigits).substr(0, 2 + n);
    Rational lo = decimal(s);
    Integer ulp = 1;
    for (int i = 0; i < n; ++i) ulp *= 10;
    Rational hi = lo + Rational(1, ulp);
    hi.canonicalize();
    return {lo, hi};
}

std::pair<Rational, Rational> pi_squared_enclosure(int level) {
    if (level <= 0) return {decimal("9.8696044010893586"), decimal("9.8696044010893587")};
    auto [lo, hi] = pi_enclosure(level);
    return {lo * lo, hi * hi};
}

Truth pi_squared_gt(const Rational& a, const Rational& b) {
    if (a == 0) return b < 0 ? Truth::True : Truth::False;
    for (int level = 0; level <= kMaxPiLevel; ++level) {
        auto [lo, hi] = pi_squared_enclosure(level);
        Rational x = a * lo, y = a * hi;
        const Rational& mn = x < y ? x : y;
        const Rational& mx = x < y ? y : x;
        if (mn > b) return Truth::True;
        if (mx <= b) return Truth::False;
    }
    return Truth::Undecided;
}

Truth pi_squared_ge(const Rational& a, const Rational& b) {
    // a*pi^2 = b is impossible for a != 0.
    if (a == 0) return b <= 0 ? Truth::True : Truth::False;
    return pi_squared_gt(a, b);
}

}  // namespace fourfold
