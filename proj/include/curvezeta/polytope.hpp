/*
   Copyright 2026 The curvezeta authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CURVEZETA_POLYTOPE_HPP
#define CURVEZETA_POLYTOPE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "bipoly.hpp"

namespace curvezeta {

using LatticePt = std::pair<int64_t, int64_t>;

/// Convex hull of a finite set of points in Z^2, counterclockwise vertex
/// list with no three collinear vertices retained. Degenerate hulls (a
/// segment or a single point) are first-class values.
struct NewtonPolygon {
    std::vector<LatticePt> vertices;
};

inline int64_t cross(const LatticePt& o, const LatticePt& a, const LatticePt& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
}

inline NewtonPolygon convex_hull(std::vector<LatticePt> pts) {
    if (pts.empty()) throw std::domain_error("convex_hull: empty point set");
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() == 1) return {pts};
    if (pts.size() == 2) return {pts};
    // Andrew monotone chain
    std::vector<LatticePt> h(2 * pts.size());
    size_t k = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    size_t lower = k + 1;
    for (size_t i = pts.size() - 1; i-- > 0;) {
        while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    if (h.size() == 2) return {{std::min(h[0], h[1]), std::max(h[0], h[1])}};
    // collinear input collapses to a segment of its extremes
    if (h.size() < 2) return {{pts.front(), pts.back()}};
    return {h};
}

inline NewtonPolygon newton_polygon(const BPoly& f) {
    if (f.is_zero()) throw std::domain_error("newton_polygon: zero polynomial");
    std::vector<LatticePt> pts;
    for (auto& [e, c] : f.t) pts.push_back({e.first, e.second});
    return convex_hull(pts);
}

inline bool is_degenerate(const NewtonPolygon& P) { return P.vertices.size() < 3; }

// twice the area (shoelace), nonnegative for CCW polygons
inline int64_t twice_area(const NewtonPolygon& P) {
    if (is_degenerate(P)) return 0;
    int64_t a = 0;
    size_t n = P.vertices.size();
    for (size_t i = 0; i < n; ++i) {
        auto& u = P.vertices[i];
        auto& v = P.vertices[(i + 1) % n];
        a += u.first * v.second - v.first * u.second;
    }
    return a;
}

inline int64_t boundary_lattice_count(const NewtonPolygon& P) {
    size_t n = P.vertices.size();
    if (n == 1) return 1;
    if (n == 2) {
        auto& u = P.vertices[0];
        auto& v = P.vertices[1];
        return std::gcd(std::abs(v.first - u.first), std::abs(v.second - u.second)) + 1;
    }
    int64_t b = 0;
    for (size_t i = 0; i < n; ++i) {
        auto& u = P.vertices[i];
        auto& v = P.vertices[(i + 1) % n];
        b += std::gcd(std::abs(v.first - u.first), std::abs(v.second - u.second));
    }
    return b;
}

inline bool contains(const NewtonPolygon& P, const LatticePt& q, bool strict = false) {
    size_t n = P.vertices.size();
    if (n == 1) return !strict && q == P.vertices[0];
    if (n == 2) {
        if (strict) return false;
        auto& u = P.vertices[0];
        auto& v = P.vertices[1];
        if (cross(u, v, q) != 0) return false;
        return std::min(u.first, v.first) <= q.first && q.first <= std::max(u.first, v.first) &&
               std::min(u.second, v.second) <= q.second && q.second <= std::max(u.second, v.second);
    }
    for (size_t i = 0; i < n; ++i) {
        int64_t c = cross(P.vertices[i], P.vertices[(i + 1) % n], q);
        if (c < 0 || (strict && c == 0)) return false;
    }
    return true;
}

inline NewtonPolygon dilate(const NewtonPolygon& P, int64_t s) {
    if (s == 0) return {{{0, 0}}};
    NewtonPolygon Q = P;
    for (auto& v : Q.vertices) {
        v.first *= s;
        v.second *= s;
    }
    // vertices of the dilation coincide with scaled vertices; degenerate
    // cases keep their representation
    if (Q.vertices.size() == 1) return Q;
    return Q;
}

/// Ordered basis of lattice points of a polygon, lexicographically sorted,
/// with a point -> index table. This order is the global row/column order
/// for every trace matrix built on top of it.
struct LatticeBasis {
    std::vector<LatticePt> points;
    std::map<LatticePt, size_t> index;
};

/// All integer points of the s-fold dilation of P; s = 0 yields {(0,0)}.
inline LatticeBasis lattice_points(const NewtonPolygon& P, int64_t s) {
    if (s < 0) throw std::domain_error("lattice_points: s must be >= 0");
    NewtonPolygon Q = dilate(P, s);
    int64_t xmin = Q.vertices[0].first, xmax = xmin;
    int64_t ymin = Q.vertices[0].second, ymax = ymin;
    for (auto& v : Q.vertices) {
        xmin = std::min(xmin, v.first);
        xmax = std::max(xmax, v.first);
        ymin = std::min(ymin, v.second);
        ymax = std::max(ymax, v.second);
    }
    LatticeBasis B;
    for (int64_t x = xmin; x <= xmax; ++x)
        for (int64_t y = ymin; y <= ymax; ++y)
            if (contains(Q, {x, y})) B.points.push_back({x, y});
    std::sort(B.points.begin(), B.points.end());
    for (size_t i = 0; i < B.points.size(); ++i) B.index[B.points[i]] = i;
    return B;
}

/// Number of integer points strictly inside P (0 for degenerate polygons).
inline int64_t interior_lattice_count(const NewtonPolygon& P) {
    if (is_degenerate(P)) return 0;
    int64_t xmin = P.vertices[0].first, xmax = xmin;
    int64_t ymin = P.vertices[0].second, ymax = ymin;
    for (auto& v : P.vertices) {
        xmin = std::min(xmin, v.first);
        xmax = std::max(xmax, v.first);
        ymin = std::min(ymin, v.second);
        ymax = std::max(ymax, v.second);
    }
    int64_t n = 0;
    for (int64_t x = xmin + 1; x < xmax; ++x)
        for (int64_t y = ymin + 1; y < ymax; ++y)
            if (contains(P, {x, y}, /*strict=*/true)) ++n;
    return n;
}

inline NewtonPolygon minkowski_sum(const NewtonPolygon& A, const NewtonPolygon& B) {
    std::vector<LatticePt> pts;
    for (auto& u : A.vertices)
        for (auto& v : B.vertices) pts.push_back({u.first + v.first, u.second + v.second});
    return convex_hull(pts);
}

}  // namespace curvezeta

#endif
