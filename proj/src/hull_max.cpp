#include "fourfold/hull_max.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>
#include <stdexcept>

namespace fourfold {

namespace {

using RVec = std::vector<Rational>;

Rational quad(const IntMatrix& G, const RVec& x) {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        Rational row = 0;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (G[i][j] != 0 && x[j] != 0) row += x[j] * G[i][j];
        s += x[i] * row;
    }
    return s;
}

void check_square(const IntMatrix& G) {
    for (const auto& row : G)
        if (row.size() != G.size()) throw std::invalid_argument("gram matrix is not square");
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (G[i][j] != G[j][i]) throw std::invalid_argument("gram matrix is not symmetric");
}

// Solve M x = b in place over Q; false if M is singular.
bool solve(std::vector<RVec>& M, RVec& b) {
    std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && M[p][c] == 0) ++p;
        if (p == n) return false;
        std::swap(M[p], M[c]);
        std::swap(b[p], b[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || M[r][c] == 0) continue;
            Rational f = M[r][c] / M[c][c];
            for (std::size_t k = c; k < n; ++k) M[r][k] -= f * M[c][k];
            b[r] -= f * b[c];
        }
    }
    for (std::size_t i = 0; i < n; ++i) b[i] /= M[i][i];
    return true;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("hull maximization: coordinates too large");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("hull maximization: coordinates too large");
    return r;
}

std::int64_t dot(const IntVector& a, const IntVector& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (__builtin_add_overflow(s, checked_mul(a[i], b[i]), &s))
            throw std::overflow_error("hull maximization: coordinates too large");
    return s;
}

// Divide by the content and fix the sign of the first nonzero entry.
void primitive(IntVector& v) {
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x);
    if (g == 0) return;
    auto first = std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
    if (*first < 0) g = -g;
    for (auto& x : v) x /= g;
}

// An affine flat spanned by points of P: anchor, the points added to reach
// it, the points it contains, and integer normals spanning dir(F)^perp.
struct Flat {
    std::size_t anchor;
    std::vector<std::size_t> spanning;
    std::uint64_t mask;
    IntMatrix normals;
};

// Exact phase-one simplex: is x a convex combination of the points?
bool in_hull(const IntMatrix& P, const RVec& x) {
    std::size_t n = P.size(), d = x.size(), m = d + 1;
    // Rows: sum_j l_j p_j[k] = x[k], sum_j l_j = 1. Columns: l (n), artificials (m), rhs.
    std::vector<RVec> T(m, RVec(n + m + 1, 0));
    for (std::size_t k = 0; k <= d; ++k) {
        for (std::size_t j = 0; j < n; ++j) T[k][j] = k < d ? Rational(P[j][k]) : Rational(1);
        T[k][n + m] = k < d ? x[k] : Rational(1);
        if (T[k][n + m] < 0)
            for (auto& e : T[k]) e = -e;
        T[k][n + k] = 1;
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t k = 0; k < m; ++k) basis[k] = n + k;
    // Minimize the sum of artificials; reduced costs of the non-artificial columns.
    for (;;) {
        std::size_t enter = n + m;
        for (std::size_t j = 0; j < n + m && enter == n + m; ++j) {
            if (std::find(basis.begin(), basis.end(), j) != basis.end()) continue;
            Rational cost = j >= n ? Rational(1) : Rational(0);
            for (std::size_t k = 0; k < m; ++k)
                if (basis[k] >= n) cost -= T[k][j];
            if (cost < 0) enter = j;  // Bland: first improving column
        }
        if (enter == n + m) break;
        std::size_t leave = m;
        Rational best;
        for (std::size_t k = 0; k < m; ++k) {
            if (T[k][enter] <= 0) continue;
            Rational r = T[k][n + m] / T[k][enter];
            if (leave == m || r < best || (r == best && basis[k] < basis[leave])) {
                leave = k;
                best = r;
            }
        }
        if (leave == m) break;  // cannot happen: the objective is bounded below
        Rational piv = T[leave][enter];
        for (auto& e : T[leave]) e /= piv;
        for (std::size_t k = 0; k < m; ++k) {
            if (k == leave || T[k][enter] == 0) continue;
            Rational f = T[k][enter];
            for (std::size_t j = 0; j <= n + m; ++j) T[k][j] -= f * T[leave][j];
        }
        basis[leave] = enter;
    }
    for (std::size_t k = 0; k < m; ++k)
        if (basis[k] >= n && T[k][n + m] != 0) return false;
    return true;
}

class Search {
public:
    Search(const IntMatrix& P, const IntMatrix& G) : P_(P), G_(G), d_(G.size()) {}

    HullMaximum run() {
        std::vector<Flat> level;
        for (std::size_t i = 0; i < P_.size(); ++i) {
            IntMatrix I(d_, IntVector(d_, 0));
            for (std::size_t k = 0; k < d_; ++k) I[k][k] = 1;
            level.push_back({i, {}, std::uint64_t{1} << i, I});
            candidates_.push_back(RVec(P_[i].begin(), P_[i].end()));
        }
        while (!level.empty()) {
            std::vector<Flat> next;
            std::unordered_set<std::uint64_t> seen;
            for (const auto& f : level) extend(f, next, seen);
            for (const auto& f : next) stationary(f);
            level = std::move(next);
        }
        std::vector<std::pair<Rational, RVec>> scored;
        for (auto& x : candidates_) scored.emplace_back(quad(G_, x), std::move(x));
        std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
            return a.first != b.first ? a.first > b.first : a.second < b.second;
        });
        for (auto& [v, x] : scored)
            if (in_hull(P_, x)) return {v, x, "face-enumeration"};
        throw std::logic_error("hull maximization found no feasible candidate");
    }

private:
    const IntMatrix& P_;
    const IntMatrix& G_;
    std::size_t d_;
    std::vector<RVec> candidates_;

    IntVector diff(std::size_t a, std::size_t b) const {
        IntVector v(d_);
        for (std::size_t k = 0; k < d_; ++k) v[k] = checked_sub(P_[a][k], P_[b][k]);
        return v;
    }

    // Points off the flat grouped by the direction they add; each group
    // closes up to one flat of the next dimension.
    void extend(const Flat& f, std::vector<Flat>& out, std::unordered_set<std::uint64_t>& seen) const {
        if (f.normals.empty()) return;
        std::map<IntVector, std::uint64_t> groups;
        std::map<IntVector, std::size_t> rep;
        for (std::size_t q = 0; q < P_.size(); ++q) {
            if (f.mask >> q & 1) continue;
            IntVector v = diff(q, f.anchor);
            IntVector y(f.normals.size());
            for (std::size_t r = 0; r < y.size(); ++r) y[r] = dot(f.normals[r], v);
            primitive(y);
            groups[y] |= std::uint64_t{1} << q;
            rep.emplace(y, q);
        }
        for (const auto& [y, bits] : groups) {
            std::uint64_t mask = f.mask | bits;
            if (!seen.insert(mask).second) continue;
            std::size_t p = rep.at(y);
            Flat g{f.anchor, f.spanning, mask, {}};
            g.spanning.push_back(p);
            if (!negative_semidefinite(g)) continue;
            // Normals orthogonal to the new direction: combine against a pivot.
            std::size_t piv = 0;
            while (y[piv] == 0) ++piv;
            for (std::size_t r = 0; r < y.size(); ++r) {
                if (r == piv) continue;
                IntVector row(d_);
                for (std::size_t k = 0; k < d_; ++k)
                    row[k] = checked_sub(checked_mul(y[piv], f.normals[r][k]), checked_mul(y[r], f.normals[piv][k]));
                primitive(row);
                g.normals.push_back(std::move(row));
            }
            out.push_back(std::move(g));
        }
    }

    std::vector<IntVector> directions(const Flat& f) const {
        std::vector<IntVector> D;
        for (auto p : f.spanning) D.push_back(diff(p, f.anchor));
        return D;
    }

    // A maximizer inside a face has Q <= 0 along the face; a flat with a
    // positive direction is skipped, and so is every flat containing it.
    bool negative_semidefinite(const Flat& f) const {
        auto D = directions(f);
        std::size_t s = D.size();
        IntMatrix M(s, IntVector(s, 0));
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j)
                for (std::size_t r = 0; r < d_; ++r)
                    for (std::size_t k = 0; k < d_; ++k)
                        M[i][j] += checked_mul(checked_mul(D[i][r], G_[r][k]), D[j][k]);
        return inertia(M).positive == 0;
    }

    // Stationary point of Q on the flat, if the reduced system is nonsingular.
    void stationary(const Flat& f) {
        auto D = directions(f);
        std::size_t s = D.size();
        const IntVector& p0 = P_[f.anchor];
        std::vector<IntVector> GD(s, IntVector(d_, 0));
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t r = 0; r < d_; ++r)
                for (std::size_t k = 0; k < d_; ++k) GD[i][r] += G_[r][k] * D[i][k];
        std::vector<RVec> M(s, RVec(s));
        RVec rhs(s);
        for (std::size_t i = 0; i < s; ++i) {
            for (std::size_t j = 0; j < s; ++j) M[i][j] = dot(D[i], GD[j]);
            rhs[i] = -dot(GD[i], p0);
        }
        if (!solve(M, rhs)) return;
        RVec x(p0.begin(), p0.end());
        for (std::size_t i = 0; i < s; ++i)
            if (rhs[i] != 0)
                for (std::size_t k = 0; k < d_; ++k) x[k] += rhs[i] * D[i][k];
        candidates_.push_back(std::move(x));
    }
};

}  // namespace

bool is_sign_orbit(const IntMatrix& points, const IntMatrix& gram) {
    std::size_t d = gram.size();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (i != j && gram[i][j] != 0) return false;
    if (d >= 63 || points.size() != (std::size_t{1} << d)) return false;
    std::set<IntVector> seen;
    for (const auto& p : points) {
        if (p.size() != d) return false;
        for (auto x : p)
            if (x != 1 && x != -1) return false;
        seen.insert(p);
    }
    return seen.size() == points.size();
}

HullMaximum box_maximum(const IntMatrix& gram) {
    check_square(gram);
    HullMaximum h;
    h.method = "box";
    h.value = 0;
    for (std::size_t i = 0; i < gram.size(); ++i) {
        for (std::size_t j = 0; j < gram.size(); ++j)
            if (i != j && gram[i][j] != 0) throw std::invalid_argument("box maximization needs a diagonal gram matrix");
        if (gram[i][i] > 0) h.value += gram[i][i];
        // Least maximizer: -1 where the coordinate may move, 0 where it must vanish.
        h.witness.push_back(gram[i][i] >= 0 ? Rational(-1) : Rational(0));
    }
    return h;
}

HullMaximum face_enumeration_maximum(const IntMatrix& points, const IntMatrix& gram, std::size_t max_points) {
    check_square(gram);
    if (points.empty()) throw std::invalid_argument("empty point set");
    for (const auto& p : points)
        if (p.size() != gram.size()) throw std::invalid_argument("point dimension differs from gram size");
    std::set<IntVector> distinct(points.begin(), points.end());
    IntMatrix unique(distinct.begin(), distinct.end());
    max_points = std::min<std::size_t>(max_points, 64);
    if (unique.size() > max_points)
        throw std::invalid_argument("general hull maximization is limited to " + std::to_string(max_points) +
                                    " distinct points, got " + std::to_string(unique.size()));
    return Search(unique, gram).run();
}

}  // namespace fourfold
