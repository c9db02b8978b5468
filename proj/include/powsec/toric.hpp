#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "powsec/multiindex.hpp"

namespace powsec {

/// A lattice simplex in Z^n given by its n+1 vertices.
struct Simplex {
    std::vector<std::vector<int>> vertices;
};

namespace toric_detail {

/// Exact integer determinant (Bareiss would be overkill at these sizes).
inline mpz_class det(std::vector<std::vector<mpz_class>> m) {
    const std::size_t n = m.size();
    mpz_class sign = 1, result = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            sign = -sign;
        }
        for (std::size_t i = col + 1; i < n; ++i) {
            // fraction-free elimination: row_i <- (row_i * pivot - row_col * lead)
            mpz_class lead = m[i][col];
            for (std::size_t j = col; j < n; ++j)
                m[i][j] = m[i][j] * m[col][col] - m[col][j] * lead;
            for (std::size_t j = col; j < n; ++j)
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), result.get_mpz_t());
        }
        result = m[col][col];
    }
    return sign * result;
}

inline std::vector<int> y_coords(const std::vector<int>& x) {
    std::vector<int> y(x.size());
    int acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc += x[i];
        y[i] = acc;
    }
    return y;
}

}  // namespace toric_detail

/// Normalized volume of a lattice simplex is |det| of its edge matrix;
/// unimodular means exactly 1.
inline mpz_class normalized_volume(const Simplex& s) {
    const std::size_t n = s.vertices.size() - 1;
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = s.vertices[i + 1][j] - s.vertices[0][j];
    return abs(toric_detail::det(std::move(m)));
}

inline bool is_unimodular(const Simplex& s) { return normalized_volume(s) == 1; }

/// Regular unimodular triangulation of the dilated simplex d*Delta_n into
/// d^n cells, with the canonical sink cell at the origin corner.
struct Triangulation {
    int n = 0, d = 0;
    std::vector<Simplex> simplices;  // sink first
    std::size_t sink_index = 0;

    /// Ambient coordinate index in {0..N} of a lattice point: the graded-lex
    /// position of the corresponding degree-d exponent vector, so that the
    /// toric coordinates of P^N agree with every other module's column order.
    std::size_t ambient_index(const std::vector<int>& point) const {
        std::vector<int> exp(static_cast<std::size_t>(n + 1));
        int sum = std::accumulate(point.begin(), point.end(), 0);
        exp[0] = d - sum;
        for (int i = 0; i < n; ++i) exp[static_cast<std::size_t>(i + 1)] = point[static_cast<std::size_t>(i)];
        return basis().index_of(MultiIndex(exp));
    }

    const MonomialBasis& basis() const {
        if (!basis_) basis_ = std::make_shared<MonomialBasis>(n, d);
        return *basis_;
    }

private:
    mutable std::shared_ptr<MonomialBasis> basis_;
};

/// All points of d*Delta_n intersected with Z^n, ordered by the graded-lex
/// position of the corresponding degree-d monomial (so the origin, matching
/// the monomial x_0^d, comes first). Length C(n+d, n).
inline std::vector<std::vector<int>> lattice_points(int n, int d) {
    if (n < 1 || d < 1) throw std::invalid_argument("lattice_points: requires n, d >= 1");
    std::vector<std::vector<int>> pts;
    for (const MultiIndex& m : enumerate_monomials(n, d)) {
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = m[static_cast<std::size_t>(i + 1)];
        pts.push_back(std::move(v));
    }
    return pts;
}

/// The alcove triangulation of d*Delta_n, built in the staircase coordinates
/// y_t = x_1 + ... + x_t. Cells are indexed by the integer parts b_1 <= ...
/// <= b_n of the y's together with a total order of their fractional parts
/// (ties broken by position). This yields exactly d^n unimodular cells cut
/// out by the hyperplane families y_t = c and y_t - y_s = c, degenerating at
/// n = 2 to the classical three-line-family pattern.
inline Triangulation standard_triangulation(int n, int d) {
    if (n < 1 || d < 1) throw std::invalid_argument("standard_triangulation: requires n, d >= 1");
    Triangulation tri;
    tri.n = n;
    tri.d = d;

    // Enumerate non-decreasing integer parts b in [0, d-1]^n.
    std::vector<std::vector<int>> parts;
    std::vector<int> b(static_cast<std::size_t>(n), 0);
    for (;;) {
        parts.push_back(b);
        int i = n - 1;
        while (i >= 0 && b[static_cast<std::size_t>(i)] == d - 1) --i;
        if (i < 0) break;
        const int v = b[static_cast<std::size_t>(i)] + 1;
        for (int j = i; j < n; ++j) b[static_cast<std::size_t>(j)] = v;
    }

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (const auto& base : parts) {
        std::vector<int> p(perm);
        do {
            // Tied coordinates must keep their natural order in the
            // fractional-part chain, otherwise the cell is degenerate.
            bool compatible = true;
            std::vector<int> rank(static_cast<std::size_t>(n));
            for (int t = 0; t < n; ++t) rank[static_cast<std::size_t>(p[static_cast<std::size_t>(t)])] = t;
            for (int i = 0; i + 1 < n; ++i)
                if (base[static_cast<std::size_t>(i)] == base[static_cast<std::size_t>(i + 1)] &&
                    rank[static_cast<std::size_t>(i)] > rank[static_cast<std::size_t>(i + 1)]) {
                    compatible = false;
                    break;
                }
            if (!compatible) continue;

            Simplex s;
            for (int j = 0; j <= n; ++j) {
                // y-vertex: base plus ones on the j last coordinates in the chain.
                std::vector<int> y(base);
                for (int t = n - j; t < n; ++t) y[static_cast<std::size_t>(p[static_cast<std::size_t>(t)])] += 1;
                std::vector<int> x(static_cast<std::size_t>(n));
                x[0] = y[0];
                for (int i = 1; i < n; ++i) x[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i)] - y[static_cast<std::size_t>(i - 1)];
                s.vertices.push_back(std::move(x));
            }
            tri.simplices.push_back(std::move(s));
        } while (std::next_permutation(p.begin(), p.end()));
    }

    // Put the sink (the unique cell owning the origin) first.
    const std::vector<int> origin(static_cast<std::size_t>(n), 0);
    std::size_t sink = tri.simplices.size();
    for (std::size_t i = 0; i < tri.simplices.size(); ++i) {
        for (const auto& v : tri.simplices[i].vertices)
            if (v == origin) { sink = i; break; }
        if (sink != tri.simplices.size()) break;
    }
    if (sink == tri.simplices.size()) throw std::logic_error("standard_triangulation: no sink cell");
    std::swap(tri.simplices[0], tri.simplices[sink]);
    tri.sink_index = 0;
    return tri;
}

/// Faces for conditions::build_planes_block: for each simplex the set of
/// ambient coordinate indices of its lattice vertices, sink face first.
inline std::vector<std::vector<int>> union_planes(const Triangulation& t) {
    std::vector<std::vector<int>> faces;
    faces.reserve(t.simplices.size());
    for (const auto& s : t.simplices) {
        std::vector<int> face;
        face.reserve(s.vertices.size());
        for (const auto& v : s.vertices) face.push_back(static_cast<int>(t.ambient_index(v)));
        std::sort(face.begin(), face.end());
        faces.push_back(std::move(face));
    }
    return faces;
}

/// The coordinate index j such that the hyperplane {y_j = 0} contains every
/// non-sink plane but not the sink: the index of the origin vertex. Throws
/// if the triangulation violates the sink property.
inline int sink_hyperplane(const Triangulation& t) {
    const std::vector<int> origin(static_cast<std::size_t>(t.n), 0);
    const int j = static_cast<int>(t.ambient_index(origin));
    auto faces = union_planes(t);
    if (!std::binary_search(faces[0].begin(), faces[0].end(), j))
        throw std::logic_error("sink_hyperplane: sink face does not contain the origin");
    for (std::size_t i = 1; i < faces.size(); ++i)
        if (std::binary_search(faces[i].begin(), faces[i].end(), j))
            throw std::logic_error("sink_hyperplane: non-sink face contains the origin");
    return j;
}

// ---------------------------------------------------------------------------
// Verification: face-to-face, covering, regularity
// ---------------------------------------------------------------------------

namespace toric_detail {

/// Affine functionals of the alcove arrangement, evaluated on x-points via
/// y_t = x_1 + ... + x_t: the walls y_t - c and (y_t - y_s) - c.
struct Wall {
    int t = 0, s = -1;  // s < 0 means the wall y_t = c
    int c = 0;
    long eval(const std::vector<int>& x) const {
        auto y = y_coords(x);
        long v = y[static_cast<std::size_t>(t)];
        if (s >= 0) v -= y[static_cast<std::size_t>(s)];
        return v - c;
    }
};

inline std::vector<Wall> wall_family(int n, int d) {
    std::vector<Wall> walls;
    for (int t = 0; t < n; ++t)
        for (int c = 0; c <= d; ++c) walls.push_back({t, -1, c});
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t)
            for (int c = -d; c <= d; ++c) walls.push_back({t, s, c});
    return walls;
}

using VertexSet = std::vector<std::vector<int>>;

inline VertexSet intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    for (const auto& v : a)
        if (std::find(b.begin(), b.end(), v) != b.end()) out.push_back(v);
    return out;
}

/// conv(a) and conv(b) meet exactly in conv(a∩b)? Walks down separating
/// walls of the arrangement; sound and complete for arrangement faces.
inline bool meets_in_common_face(const VertexSet& a, const VertexSet& b,
                                 const std::vector<Wall>& walls) {
    const VertexSet common = intersect(a, b);
    if (common.size() == a.size() && common.size() == b.size()) return true;
    for (const auto& w : walls) {
        bool zero_on_common = true;
        for (const auto& v : common)
            if (w.eval(v) != 0) { zero_on_common = false; break; }
        if (!zero_on_common) continue;
        int sign_a = 0, sign_b = 0;  // -1, 0, +1 ranges of each side
        bool mixed = false;
        for (const auto& v : a) {
            long e = w.eval(v);
            if (e == 0) continue;
            int s = e > 0 ? 1 : -1;
            if (sign_a == 0) sign_a = s;
            else if (sign_a != s) { mixed = true; break; }
        }
        if (mixed) continue;
        for (const auto& v : b) {
            long e = w.eval(v);
            if (e == 0) continue;
            int s = e > 0 ? 1 : -1;
            if (sign_b == 0) sign_b = s;
            else if (sign_b != s) { mixed = true; break; }
        }
        if (mixed) continue;
        if (sign_a == 0 && sign_b == 0) continue;  // wall does not reduce
        if (sign_a != 0 && sign_b != 0 && sign_a == sign_b) continue;  // same side
        VertexSet a2, b2;
        for (const auto& v : a)
            if (w.eval(v) == 0) a2.push_back(v);
        for (const auto& v : b)
            if (w.eval(v) == 0) b2.push_back(v);
        return meets_in_common_face(a2, b2, walls);
    }
    return false;
}

/// Vertex heights of the strictly convex PL certificate: the piecewise
/// linear interpolation of sum of squares of the alcove functionals takes
/// these exact values at lattice points.
inline mpz_class certificate_height(const std::vector<int>& x) {
    auto y = y_coords(x);
    mpz_class h = 0;
    const int n = static_cast<int>(x.size());
    for (int t = 0; t < n; ++t) h += mpz_class(y[static_cast<std::size_t>(t)]) * y[static_cast<std::size_t>(t)];
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            mpz_class diff = y[static_cast<std::size_t>(t)] - y[static_cast<std::size_t>(s)];
            h += diff * diff;
        }
    return h;
}

/// Solve u = sum c_i v_i with sum c_i = 1 over the rationals.
inline std::vector<mpq_class> affine_coordinates(const std::vector<std::vector<int>>& simplex_vertices,
                                                 const std::vector<int>& u) {
    const std::size_t n = u.size();
    const std::size_t m = simplex_vertices.size();  // n+1
    std::vector<std::vector<mpq_class>> aug(n + 1, std::vector<mpq_class>(m + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) aug[i][j] = simplex_vertices[j][i];
        aug[i][m] = u[i];
    }
    for (std::size_t j = 0; j < m; ++j) aug[n][j] = 1;
    aug[n][m] = 1;
    // Gaussian elimination over Q.
    std::size_t row = 0;
    std::vector<std::size_t> pivot_col(m, SIZE_MAX);
    for (std::size_t col = 0; col < m && row <= n; ++col) {
        std::size_t piv = row;
        while (piv <= n && aug[piv][col] == 0) ++piv;
        if (piv > n) continue;
        std::swap(aug[piv], aug[row]);
        const mpq_class inv = 1 / aug[row][col];
        for (auto& x : aug[row]) x *= inv;
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == row || aug[i][col] == 0) continue;
            const mpq_class f = aug[i][col];
            for (std::size_t jj = col; jj <= m; ++jj) aug[i][jj] -= f * aug[row][jj];
        }
        pivot_col[col] = row;
        ++row;
    }
    std::vector<mpq_class> c(m, 0);
    for (std::size_t col = 0; col < m; ++col)
        if (pivot_col[col] != SIZE_MAX) c[col] = aug[pivot_col[col]][m];
    return c;
}

}  // namespace toric_detail

/// Exhaustive pairwise face-to-face check via arrangement walls.
inline bool face_to_face(const Triangulation& t) {
    auto walls = toric_detail::wall_family(t.n, t.d);
    for (std::size_t i = 0; i < t.simplices.size(); ++i)
        for (std::size_t j = i + 1; j < t.simplices.size(); ++j)
            if (!toric_detail::meets_in_common_face(t.simplices[i].vertices,
                                                    t.simplices[j].vertices, walls))
                return false;
    return true;
}

/// Regularity certificate: the explicit PL function with the certificate
/// heights is affine on each cell by construction; this verifies the strict
/// local convexity inequality across every interior facet, which is
/// equivalent to the existence of a strictly convex lambda inducing the
/// triangulation.
inline bool regularity_certificate(const Triangulation& t) {
    const int n = t.n;
    bool found_facet = false;
    for (std::size_t i = 0; i < t.simplices.size(); ++i) {
        for (std::size_t j = i + 1; j < t.simplices.size(); ++j) {
            auto common = toric_detail::intersect(t.simplices[i].vertices, t.simplices[j].vertices);
            if (static_cast<int>(common.size()) != n) continue;  // not a shared facet
            found_facet = true;
            // The vertex of cell j opposite the shared facet.
            std::vector<int> u_j;
            for (const auto& v : t.simplices[j].vertices)
                if (std::find(common.begin(), common.end(), v) == common.end()) u_j = v;
            // Strict fold: height of u_j above the affine extension of cell i.
            auto c = toric_detail::affine_coordinates(t.simplices[i].vertices, u_j);
            mpq_class extension = 0;
            for (std::size_t v = 0; v < t.simplices[i].vertices.size(); ++v)
                extension += c[v] * mpq_class(toric_detail::certificate_height(t.simplices[i].vertices[v]));
            if (!(mpq_class(toric_detail::certificate_height(u_j)) > extension)) return false;
        }
    }
    return found_facet || t.simplices.size() == 1;
}

/// SVG rendering of an n = 2 triangulation, for side-by-side comparison
/// with the printed figure. Sink cell shaded.
inline std::string triangulation_svg(const Triangulation& t) {
    if (t.n != 2) throw std::invalid_argument("triangulation_svg: only n = 2 is drawable");
    const int scale = 60, margin = 30;
    const int size = t.d * scale + 2 * margin;
    auto px = [&](int x) { return margin + x * scale; };
    auto py = [&](int y) { return size - margin - y * scale; };
    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(size) +
           "\" height=\"" + std::to_string(size) + "\" viewBox=\"0 0 " + std::to_string(size) +
           " " + std::to_string(size) + "\">\n";
    for (std::size_t i = 0; i < t.simplices.size(); ++i) {
        const auto& s = t.simplices[i];
        svg += "  <polygon points=\"";
        for (const auto& v : s.vertices)
            svg += std::to_string(px(v[0])) + "," + std::to_string(py(v[1])) + " ";
        svg.pop_back();
        svg += std::string("\" fill=\"") + (i == t.sink_index ? "#9ecae1" : "none") +
               "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
    for (const auto& pt : lattice_points(t.n, t.d)) {
        svg += "  <circle cx=\"" + std::to_string(px(pt[0])) + "\" cy=\"" + std::to_string(py(pt[1])) +
               "\" r=\"4\" fill=\"black\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace powsec
