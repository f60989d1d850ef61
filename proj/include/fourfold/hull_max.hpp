#pragma once

#include "fourfold/exact.hpp"
#include "fourfold/model.hpp"

#include <string>
#include <vector>

namespace fourfold {

// max of x^T G x over the convex hull of a point set, with the
// lexicographically least maximizer among the candidates examined.
struct HullMaximum {
    Rational value;
    std::vector<Rational> witness;
    std::string method;
};

// True if G is diagonal and the points are exactly {-1,+1}^d.
bool is_sign_orbit(const IntMatrix& points, const IntMatrix& gram);

// Box [-1,1]^d with diagonal G: positive coordinates go to +-1, negative to 0.
HullMaximum box_maximum(const IntMatrix& gram);

// Exact maximization for arbitrary point sets (at most 64 points).
// A maximizer x in the relative interior of a face F has grad Q(x) normal to
// F and Q <= 0 on the directions of F. By Caratheodory x is interior to a
// simplex of vertices of F, whose direction space is then negative
// semidefinite; if the reduced system on its affine hull is singular, Q is
// constant along a kernel direction and x slides to a smaller simplex with
// the same value. So x is the unique stationary point of Q on some flat
// spanned by points of the set on which Q is negative semidefinite. All such
// flats are enumerated (flats with a positive direction are pruned together
// with every flat containing them); the candidates are taken in decreasing
// value and the first one an exact LP places inside the hull is the maximum.
HullMaximum face_enumeration_maximum(const IntMatrix& points, const IntMatrix& gram,
                                     std::size_t max_points = 64);

}  // namespace fourfold
