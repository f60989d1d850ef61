#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace fourfold {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

struct CharData {
    std::int64_t b1 = 0;
    std::int64_t b_plus = 0;
    std::int64_t b_minus = 0;
    bool is_spin = false;
    bool is_simply_connected = false;

    std::int64_t euler() const { return 2 - 2 * b1 + b_plus + b_minus; }
    std::int64_t signature() const { return b_plus - b_minus; }
    std::int64_t two_chi_plus_three_tau() const { return 2 * euler() + 3 * signature(); }
    std::int64_t two_chi_minus_three_tau() const { return 2 * euler() - 3 * signature(); }

    bool operator==(const CharData&) const = default;
};

struct GramLattice {
    std::vector<std::string> basis_labels;
    IntMatrix gram;

    std::size_t rank() const { return basis_labels.size(); }
    std::int64_t pair(const IntVector& x, const IntVector& y) const;
    std::int64_t square(const IntVector& x) const { return pair(x, x); }

    bool operator==(const GramLattice&) const = default;
};

// Signs of the eigenvalues of a symmetric integer matrix, computed exactly.
struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};
Inertia inertia(const IntMatrix& gram);

enum class SwParity { Odd, Even, Unknown };
enum class ParityProvenance { TaubesSymplectic, UserAsserted, Derived };

struct SpinCStructure {
    IntVector c1;                     // empty when the owner has no lattice
    std::int64_t c1_squared = 0;
    std::optional<IntMatrix> s_matrix;  // b1 x b1; absent means not supplied
    SwParity sw_parity = SwParity::Unknown;
    ParityProvenance provenance = ParityProvenance::UserAsserted;
    bool almost_complex = false;      // induced by an almost complex structure

    bool operator==(const SpinCStructure&) const = default;
};

enum class Flag {
    AlmostComplex,
    Symplectic,
    MinimalKaehler,
    HasPSCMetric,
    HasNonnegScalarMetric,
    HasASDPSCMetric,
    C1Mod4Zero,
};

// One hyperbolic-product term k copies of Sigma_g x Sigma_h. Manifolds with
// vanishing simplicial volume carry a single term with k = 0.
struct SvTerm {
    std::int64_t k = 0;
    std::int64_t g = 1;
    std::int64_t h = 1;

    auto operator<=>(const SvTerm&) const = default;
};

class Manifold;

struct Summand {
    std::string id;
    std::int64_t multiplicity = 1;
    std::shared_ptr<const Manifold> atom;
};

class Manifold {
public:
    std::string name;
    CharData chr;
    std::optional<GramLattice> lattice;
    std::vector<SpinCStructure> spinc;
    std::set<Flag> flags;
    std::optional<std::vector<SvTerm>> sv_factors;
    // Empty for building blocks; connected sums list their atoms here.
    std::vector<Summand> summands;

    bool has(Flag f) const { return flags.count(f) != 0; }
    std::int64_t euler() const { return chr.euler(); }
    std::int64_t signature() const { return chr.signature(); }

    bool is_atom() const { return summands.empty(); }
    // (id, multiplicity) pairs; a building block reports itself once.
    std::vector<std::pair<std::string, std::int64_t>> summand_record() const;
    // The atoms with multiplicity expanded, in record order.
    std::vector<std::shared_ptr<const Manifold>> atoms() const;

    // First structure flagged as almost-complex induced, if any.
    const SpinCStructure* canonical() const;
};

const char* flag_name(Flag f);
std::optional<Flag> flag_from_name(const std::string& s);
const char* parity_name(SwParity p);
SwParity parity_from_name(const std::string& s);
const char* provenance_name(ParityProvenance p);
ParityProvenance provenance_from_name(const std::string& s);

// Empty iff every model invariant holds; each entry names what failed.
std::vector<std::string> validate(const Manifold& m);

}  // namespace fourfold
