#pragma once

#include "fourfold/model.hpp"

#include <map>
#include <string>
#include <vector>

namespace fourfold {

// Building blocks. Family parameters are range-checked.
Manifold cp2();
Manifold cp2bar();
Manifold s1xs3();
Manifold t4();
Manifold k3();
Manifold kodaira();
Manifold sigma_product(std::int64_t g, std::int64_t h);
// Y(l): K3 after a logarithmic transform of order 2l+1; Y(0) is K3 itself.
Manifold log_transform_k3(std::int64_t ell);
Manifold gompf(std::int64_t alpha, std::int64_t beta);

inline constexpr std::int64_t kMaxGenus = 200;
inline constexpr std::int64_t kMaxFamilyParameter = 1000000;

// Parameter count of Sigma, Y and Gompf; -1 for any other name.
int family_arity(const std::string& name);
// Empty when the family accepts the parameters, else the reason it does not.
std::string family_parameter_error(const std::string& name, const std::vector<std::int64_t>& params);

// Parses ids such as "K3", "Sigma(3,5)", "Y(2)", "Gompf(2,1)".
Manifold catalog_get(const std::string& id);

// Names of the parameter-free building blocks.
const std::vector<std::string>& catalog_fixed_ids();

// Built-in atoms plus user definitions loaded from JSON.
class Catalog {
public:
    Manifold get(const std::string& id) const;
    bool has_custom(const std::string& id) const { return custom_.count(id) != 0; }
    void add(const Manifold& m);
    std::vector<std::string> custom_ids() const;

private:
    std::map<std::string, Manifold> custom_;
};

}  // namespace fourfold
