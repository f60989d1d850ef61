#pragma once

#include "fourfold/certificate.hpp"
#include "fourfold/exact.hpp"
#include "fourfold/model.hpp"
#include "fourfold/outcome.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fourfold {

// ||M|| lies in [16F/c4, 16F*c4] with F = sum k(g-1)(h-1) over the
// hyperbolic product terms; every other summand contributes zero.
struct SvInterval {
    Integer factor = 0;
    Rational c4 = 1;

    Rational lo() const { return Rational(16 * factor) / c4; }
    Rational hi() const { return Rational(16 * factor) * c4; }
    bool zero() const { return factor == 0; }
};

Computed<SvInterval> simplicial_volume(const Manifold& m, const Rational& c4);

// Obstructed iff 2chi < 3|tau|; details.strict when 2chi > 3|tau|.
Certificate hitchin_thorpe(const Manifold& m);

// 2chi - 3|tau| against ||M||/(81 pi^2). NotObstructed when the inequality
// holds at the upper end of the interval, Obstructed when it already fails
// at the lower end, Inconclusive in between. Gromov's chi >= ||M||/(2592 pi^2)
// is evaluated the same way.
Certificate ght(const Manifold& m, const Rational& c4, bool strict);

// Sums (X_1 # ... # X_n) # N with n in {2,3}, almost complex sum premises
// on the parts and b+(N) = 0: Obstructed iff
// 4n - (2chi(N) + 3tau(N)) >= (1/3) sum (2chi + 3tau)(X_m).
// Any manifold with 2chi + 3tau < 0 or 2chi - 3tau < 0 is Obstructed outright.
Certificate einstein_obstruction(const Manifold& m);

// Closed-form criterion for (# X_m) # k Sigma_g x Sigma_h # l1 S1xS3 # l2 CP2bar,
// evaluated as stated: 4(n + l1 + k) + l2 >= (1/3)(sum (2chi+3tau)(X_m) + 4k(1-h)(1-g)).
// details.exact_inequality carries the same test recomputed from the
// characteristic numbers of the actual sum.
Certificate corollary_obstruction(const std::vector<Manifold>& parts, std::int64_t k, std::int64_t g, std::int64_t h,
                                  std::int64_t l1, std::int64_t l2);

// d + 1: the most summands with b+ > 0 any decomposition can have when a
// structure of moduli dimension d has nonvanishing invariant. Throws unless
// `cert` is a Nonvanishing certificate.
std::int64_t decomposition_bound(const Certificate& cert, std::int64_t d);

struct ExoticPair {
    Manifold y;      // p CP2 # q CP2bar with the same form as x
    Manifold left;   // x # x'
    Manifold right;  // y # x'
    Certificate certificate;
};
// x simply connected, non-spin, symplectic, b+ = 3 mod 4; x' one or two
// parts with the almost complex sum premises. Throws for spin x.
ExoticPair exotic_pair(const Manifold& x, const Manifold& xprime);

struct SearchTuple {
    std::int64_t m = 0;
    std::int64_t n = 0;
    std::int64_t l = 0;  // l1 (spin) or l2 (non-spin)
    Manifold manifold;   // representative with Y(1)
    nlohmann::json inequalities;
    SvInterval sv;
    Certificate hitchin_thorpe;
    Certificate ght;
    Certificate einstein;
    Certificate corollary;
    std::string family;
};

// Gompf(m,n) # Y(l) # Sigma(g,h) # l1 S1xS3 over 2 <= m <= m_max,
// 1 <= n <= n_max with 4m + 2n - 1 = 3 mod 4 and l1 >= 1 meeting the three
// search inequalities. Sorted by (m, n, l1). threads = 0 uses the hardware.
std::vector<SearchTuple> search_spin_examples(std::int64_t g, std::int64_t h, std::int64_t m_max, std::int64_t n_max,
                                              const Rational& c4, unsigned threads = 0);
// Same with l2 CP2bar in place of l1 S1xS3.
std::vector<SearchTuple> search_nonspin_examples(std::int64_t g, std::int64_t h, std::int64_t m_max,
                                                 std::int64_t n_max, const Rational& c4, unsigned threads = 0);

nlohmann::json to_json(const SearchTuple& t);

}  // namespace fourfold
