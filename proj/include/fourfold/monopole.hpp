#pragma once

#include "fourfold/hull_max.hpp"
#include "fourfold/model.hpp"
#include "fourfold/outcome.hpp"
#include "fourfold/symbolic.hpp"

#include <string>
#include <vector>

namespace fourfold {

// Monopole classes as integer vectors over generators with a shared gram.
struct MonopoleClassSet {
    IntMatrix classes;
    GramLattice gram;
    std::string source;
};

bool is_symmetric(const MonopoleClassSet& s);
MonopoleClassSet negate(const MonopoleClassSet& s);

// sum +-c1(X_m) + sum +-E_r over generators (c1(X_1),...,c1(X_n),E_1,...,E_k)
// with gram diag(c1^2(X_1),...,c1^2(X_n),-1,...,-1). The parts must pass the
// almost complex sum check.
MonopoleClassSet monopole_classes_for_sum(const std::vector<Manifold>& parts, std::int64_t blowdowns);

// Classes known for m: Theorem-style sums (parts plus blow-ups), a single
// symplectic part with b+ > 1, or none at all for positive scalar curvature.
struct MonopoleSearch {
    std::optional<MonopoleClassSet> set;
    bool certified_empty = false;
    std::string reason;
};
MonopoleSearch monopole_classes(const Manifold& m);

// Exact max of Q over Hull(classes). Throws on an empty or asymmetric set.
HullMaximum beta_squared(const MonopoleClassSet& s);
// 0 for a certified empty set, Inconclusive when the set is unknown.
Computed<HullMaximum> beta_squared(const Manifold& m);

struct CurvatureBounds {
    SymbolicValue scalar;  // 32 pi^2 beta^2
    SymbolicValue mixed;   // 72 pi^2 beta^2
    Computed<SymbolicValue> ricci;
};
CurvatureBounds curvature_bounds(const Manifold& m, const MonopoleClassSet& s);

struct ScalarInvariants {
    SymbolicValue Is;  // 32 pi^2 sum c1^2
    SymbolicValue Y;   // Yamabe invariant, -4 pi sqrt(2 sum c1^2)
    SymbolicValue K;   // equals Y
};
Computed<ScalarInvariants> scalar_invariants(const Manifold& m);

// Perelman-type invariant lambda_k; finite branch needs k >= 2/3.
Computed<SymbolicValue> lambda_bar_k(const Manifold& m, const Rational& k);

// 8 pi^2 [4n - (2chi(N) + 3tau(N)) + sum c1^2].
Computed<SymbolicValue> ricci_invariant(const Manifold& m);

// Least genus allowed by 2g - 2 >= [S]^2 - <c1,S>, with g >= 1.
std::int64_t adjunction_genus_bound(std::int64_t pairing, std::int64_t self_intersection);
// Same, reading the pairing and square off m's lattice. m must carry a
// nonvanishing certificate (sum of 2-3 parts, or a single symplectic part).
std::int64_t adjunction_genus_bound(const Manifold& m, const SpinCStructure& g, const IntVector& sigma_class);

}  // namespace fourfold
