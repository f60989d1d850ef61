#pragma once

#include "fourfold/certificate.hpp"
#include "fourfold/model.hpp"

#include <array>
#include <utility>
#include <vector>

namespace fourfold {

// d = (c1^2 - 2chi - 3tau)/4; throws if c1 is not admissible.
std::int64_t moduli_dimension(const CharData& c, std::int64_t c1_squared);
std::int64_t moduli_dimension(const Manifold& m, const SpinCStructure& g);

// Index of the spin-c Dirac operator, (c1^2 - tau)/8.
std::int64_t dirac_index(const CharData& c, std::int64_t c1_squared);
std::int64_t dirac_index(const Manifold& m, const SpinCStructure& g);

// (index even, d + b+ - b1 = 3 mod 4). Throws std::logic_error if they differ.
std::pair<bool, bool> parity_equivalence(const CharData& c, std::int64_t c1_squared);
std::pair<bool, bool> parity_equivalence(const Manifold& m, const SpinCStructure& g);

// The moduli space is spin when the index is even and S is even.
Certificate moduli_spin_condition(const Manifold& m, const SpinCStructure& g);

// Nonvanishing of the stable cohomotopy invariant for sums of 2 or 3 almost
// complex parts with b+ > 1, b+ - b1 = 3 mod 4, odd SW and even S.
// `signs` (+1/-1 per part, empty = all +1) picks #(+-Gamma_i); the verdict
// does not depend on it.
Certificate check_almost_complex_sum(const std::vector<Manifold>& parts, const std::vector<int>& signs = {});

// Bauer's criterion: n >= 2 almost complex parts with b1 = 0, b+ = 3 mod 4,
// odd SW; for n >= 4 only n = 4 with b+(sum) = 4 mod 8.
Certificate check_bauer(const std::vector<Manifold>& parts);

// Variant for 2 or 3 parts where each part has b1 = 0, b+ = 3 mod 4, or
// b+ > 1 with c1 = 0 mod 4; odd SW in both cases.
Certificate check_mod4_sum(const std::vector<Manifold>& parts);

// Taubes: a symplectic manifold with b+ > 1 has odd SW on its canonical class.
Certificate check_symplectic(const Manifold& m);

struct C1ZeroType {
    std::int64_t b_plus;
    std::int64_t b1;
    std::int64_t tau;
    bool operator==(const C1ZeroType&) const = default;
};

// (b+, b1, tau) allowed for c1 = 0 spin parts: tau = 16k, b1 = 1 + b+ + 4k,
// b+ in {2,3}, k <= 0, b1 >= 0.
std::vector<C1ZeroType> classify_c1_zero_types();


// m split as (X_1 # ... # X_n) # N with the almost complex sum check run on
// the b+ > 0 parts. `admissible` means n is 2 or 3 and the check passed.
struct SumAnalysis {
    std::vector<Manifold> parts;
    Manifold complement;
    Certificate certificate;
    std::int64_t c1_squared_sum = 0;
    bool admissible = false;
    std::string reason;
};
SumAnalysis analyze_sum(const Manifold& m);

}  // namespace fourfold
