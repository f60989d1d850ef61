#pragma once

#include "fourfold/exact.hpp"

#include <compare>
#include <cstdint>
#include <string>

namespace fourfold {

// Exact value q * pi^p * sqrt(s), p in {0,1,2}, s squarefree, or +-infinity.
class SymbolicValue {
public:
    enum class Kind { Finite, PlusInfinity, MinusInfinity };

    SymbolicValue() = default;
    SymbolicValue(const Rational& q, int pi_power = 0, std::uint64_t radicand = 1);

    static SymbolicValue plus_infinity();
    static SymbolicValue minus_infinity();
    // q * pi^p * sqrt(n) for any n >= 0; square factors of n move into q.
    static SymbolicValue with_sqrt(const Rational& q, int pi_power, std::uint64_t n);

    Kind kind() const { return kind_; }
    bool finite() const { return kind_ == Kind::Finite; }
    const Rational& q() const { return q_; }
    int pi_power() const { return pi_power_; }
    std::uint64_t radicand() const { return radicand_; }
    int sign() const;

    SymbolicValue operator-() const;
    // Addition is only defined inside one (pi_power, radicand) family; zero
    // is compatible with everything.
    SymbolicValue operator+(const SymbolicValue& o) const;
    SymbolicValue operator-(const SymbolicValue& o) const { return *this + (-o); }
    SymbolicValue operator*(const Rational& k) const;
    SymbolicValue operator*(const SymbolicValue& o) const;
    SymbolicValue operator/(const Rational& k) const;
    SymbolicValue abs() const;
    SymbolicValue square() const { return *this * *this; }

    bool operator==(const SymbolicValue& o) const;
    // Total on finite values and infinities. Values with different pi powers
    // are separated with the certified pi enclosure.
    std::strong_ordering operator<=>(const SymbolicValue& o) const;

    double approx() const;
    // "q*pi^p*sqrt(s)" with unit factors omitted, e.g. "-32*pi*sqrt(2)".
    std::string str() const;

private:
    Kind kind_ = Kind::Finite;
    Rational q_ = 0;
    int pi_power_ = 0;
    std::uint64_t radicand_ = 1;

    void canonicalize();
};

}  // namespace fourfold
