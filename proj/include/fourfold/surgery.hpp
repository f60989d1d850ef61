#pragma once

#include "fourfold/model.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace fourfold {

// Atoms of all parts are flattened and sorted, so the result does not depend
// on order or grouping.
Manifold connected_sum(const std::vector<Manifold>& parts);
Manifold blow_up(const Manifold& m, std::int64_t k);

// The 2^n structures #(+-Gamma_i) over the atoms' first spin-c structures,
// enumerated lazily. Index bit i set means atom i enters with -Gamma_i.
class SignChoices {
public:
    explicit SignChoices(const Manifold& m);
    std::size_t parts() const { return atoms_.size(); }
    std::uint64_t count() const;
    SpinCStructure at(std::uint64_t signs) const;

private:
    std::vector<std::shared_ptr<const Manifold>> atoms_;
    std::optional<SpinCStructure> base_;
    bool with_lattice_ = false;
};

// M = (X_1 # ... # X_n) # N split into the b+ > 0 atoms and the rest.
struct Decomposition {
    std::vector<Manifold> parts;
    Manifold complement;  // S^4 when no b+ = 0 atoms are present
};
Decomposition decompose(const Manifold& m);

// Round S^4, used as the empty complement.
Manifold sphere();

}  // namespace fourfold
