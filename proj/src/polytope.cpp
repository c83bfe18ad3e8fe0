#include "qehrhart/polytope.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "qehrhart/linalg.hpp"

namespace qeh {

PointLocus::PointLocus(int n, std::vector<Point> pts) : dim(n), points(std::move(pts)) {
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != n) throw std::invalid_argument("point dimension mismatch");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
}

bool PointLocus::contains(const Point& p) const { return std::binary_search(points.begin(), points.end(), p); }

PointLocus minkowski_sum(const PointLocus& a, const PointLocus& b) {
    if (a.dim != b.dim) throw std::invalid_argument("minkowski_sum: dimension mismatch");
    std::vector<Point> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a.points)
        for (const auto& y : b.points) {
            Point s(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] + y[i];
            out.push_back(std::move(s));
        }
    return PointLocus(a.dim, std::move(out));
}

std::vector<std::vector<Int>> integer_kernel(const std::vector<std::vector<Int>>& rows, std::size_t ncols) {
    std::vector<std::vector<Int>> a = rows;
    std::vector<std::vector<Int>> u(ncols, std::vector<Int>(ncols, 0));  // u[col][row] storage: column vectors
    for (std::size_t j = 0; j < ncols; ++j) u[j][j] = 1;
    auto col_axpy = [&](std::size_t dst, std::size_t src, const Int& f) {  // col dst -= f * col src
        for (auto& r : a) r[dst] -= f * r[src];
        for (std::size_t k = 0; k < ncols; ++k) u[dst][k] -= f * u[src][k];
    };
    auto col_swap = [&](std::size_t x, std::size_t y) {
        for (auto& r : a) std::swap(r[x], r[y]);
        std::swap(u[x], u[y]);
    };
    std::size_t r = 0;
    for (std::size_t i = 0; i < a.size() && r < ncols; ++i) {
        for (;;) {
            // smallest nonzero magnitude among columns >= r goes to r
            std::size_t best = ncols;
            for (std::size_t j = r; j < ncols; ++j)
                if (a[i][j] != 0 && (best == ncols || abs(a[i][j]) < abs(a[i][best]))) best = j;
            if (best == ncols) break;
            col_swap(r, best);
            bool others = false;
            for (std::size_t j = r + 1; j < ncols; ++j) {
                if (a[i][j] == 0) continue;
                Int f;
                mpz_fdiv_q(f.get_mpz_t(), a[i][j].get_mpz_t(), a[i][r].get_mpz_t());
                col_axpy(j, r, f);
                if (a[i][j] != 0) others = true;
            }
            if (!others) {
                ++r;
                break;
            }
        }
    }
    std::vector<std::vector<Int>> ker;
    for (std::size_t j = r; j < ncols; ++j) ker.push_back(u[j]);
    return ker;
}

namespace {

std::vector<long long> primitive(const std::vector<Rat>& v) {
    Int l = lcm_denominators(v);
    std::vector<Int> w;
    Int g = 0;
    for (const auto& x : v) {
        Int y = Int(x * Rat(l));
        w.push_back(y);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), y.get_mpz_t());
    }
    std::vector<long long> out;
    for (auto& y : w) {
        y /= g;
        if (!fits_ll(y)) throw std::overflow_error("normal vector exceeds 64 bits");
        out.push_back(to_ll(y));
    }
    return out;
}

long long dot(const std::vector<long long>& a, const std::vector<long long>& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Facets of conv(pts) where pts span R^d.
std::vector<Facet> facets_of(const std::vector<std::vector<long long>>& pts, int d) {
    std::vector<Facet> out;
    if (d == 0) return out;
    const int k = static_cast<int>(pts.size());
    std::vector<int> idx(d);
    std::iota(idx.begin(), idx.end(), 0);
    std::set<std::pair<std::vector<long long>, long long>> seen;
    while (true) {
        Mat m(static_cast<std::size_t>(d - 1), static_cast<std::size_t>(d));
        for (int r = 1; r < d; ++r)
            for (int c = 0; c < d; ++c) m(r - 1, c) = Rat(static_cast<long>(pts[idx[r]][c] - pts[idx[0]][c]));
        auto ns = nullspace(m);
        if (ns.size() == 1) {
            auto nrm = primitive(ns[0]);
            long long off = dot(nrm, pts[idx[0]]);
            bool le = true, ge = true;
            for (const auto& p : pts) {
                long long v = dot(nrm, p);
                if (v > off) le = false;
                if (v < off) ge = false;
            }
            if (ge && !le) {
                for (auto& x : nrm) x = -x;
                off = -off;
                le = true;
                ge = false;
            }
            if (le && !ge && seen.insert({nrm, off}).second) out.push_back(Facet{nrm, off});
        }
        int i = d - 1;
        while (i >= 0 && idx[i] == k - d + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    std::sort(out.begin(), out.end(), [](const Facet& a, const Facet& b) {
        return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
    });
    return out;
}

}  // namespace

LatticePolytope::LatticePolytope(std::vector<Point> vertices, std::string name) : name_(std::move(name)), input_(vertices) {
    if (vertices.empty()) throw std::invalid_argument("polytope needs at least one vertex");
    n_ = static_cast<int>(vertices[0].size());
    for (const auto& v : vertices)
        if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("vertex dimension mismatch");
    std::vector<Point> pts;
    for (const auto& v : vertices)
        if (std::find(pts.begin(), pts.end(), v) == pts.end()) pts.push_back(v);
    base_ = pts[0];

    // directions and their orthogonal complement
    Mat dirs(pts.size() - 1, static_cast<std::size_t>(n_));
    for (std::size_t i = 1; i < pts.size(); ++i)
        for (int c = 0; c < n_; ++c) dirs(i - 1, c) = Rat(static_cast<long>(pts[i][c] - base_[c]));
    std::vector<std::vector<Int>> perp;
    if (n_ > 0) {
        for (const auto& v : nullspace(dirs)) {
            auto w = primitive(v);
            std::vector<Int> row;
            for (auto x : w) row.emplace_back(static_cast<long>(x));
            perp.push_back(row);
        }
    }
    for (const auto& col : integer_kernel(perp, static_cast<std::size_t>(n_))) {
        Point b;
        for (const auto& x : col) {
            if (!fits_ll(x)) throw std::overflow_error("lattice basis exceeds 64 bits");
            b.push_back(to_ll(x));
        }
        basis_.push_back(b);
    }
    const int d = dim();

    // invertible d x d minor of L for coordinate recovery
    {
        Mat lt(static_cast<std::size_t>(d), static_cast<std::size_t>(n_));
        for (int j = 0; j < d; ++j)
            for (int c = 0; c < n_; ++c) lt(j, c) = Rat(static_cast<long>(basis_[j][c]));
        auto ech = rref(lt);
        for (auto p : ech.pivots) pivot_rows_.push_back(static_cast<int>(p));
        Mat minor(static_cast<std::size_t>(d), static_cast<std::size_t>(2 * d));
        for (int r = 0; r < d; ++r) {
            for (int j = 0; j < d; ++j) minor(r, j) = Rat(static_cast<long>(basis_[j][pivot_rows_[r]]));
            minor(r, d + r) = 1;
        }
        auto inv = rref(minor);
        minor_inv_.assign(d, std::vector<Rat>(d));
        for (int r = 0; r < d; ++r)
            for (int j = 0; j < d; ++j) minor_inv_[r][j] = inv.echelon(r, d + j);
    }

    std::vector<std::vector<long long>> us;
    for (const auto& p : pts) us.push_back(*hull_coords(p, 1));
    facets_ = facets_of(us, d);

    // keep only extreme points: tight facet normals must have rank d
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<std::vector<Rat>> rows;
        for (const auto& f : facets_)
            if (dot(f.normal, us[i]) == f.offset) {
                std::vector<Rat> r;
                for (auto x : f.normal) r.emplace_back(static_cast<long>(x));
                rows.push_back(r);
            }
        bool extreme = d == 0 ? pts.size() == 1 : rank(Mat::from_rows(rows, static_cast<std::size_t>(d))) == static_cast<std::size_t>(d);
        if (extreme) {
            vertices_.push_back(pts[i]);
            vert_u_.push_back(us[i]);
        }
    }
}

std::optional<std::vector<long long>> LatticePolytope::hull_coords(const Point& x, long long m) const {
    if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("point dimension mismatch");
    const int d = dim();
    std::vector<long long> u(d);
    for (int r = 0; r < d; ++r) {
        Rat s = 0;
        for (int j = 0; j < d; ++j) {
            int row = pivot_rows_[j];
            s += minor_inv_[r][j] * Rat(static_cast<long>(x[row] - m * base_[row]));
        }
        if (!is_integer(s)) return std::nullopt;
        u[r] = s.get_num().get_si();
    }
    if (from_hull(u, m) != x) return std::nullopt;
    return u;
}

Point LatticePolytope::from_hull(const std::vector<long long>& u, long long m) const {
    Point x(n_);
    for (int c = 0; c < n_; ++c) {
        long long s = m * base_[c];
        for (std::size_t j = 0; j < u.size(); ++j) s += basis_[j][c] * u[j];
        x[c] = s;
    }
    return x;
}

bool LatticePolytope::contains(const Point& x, long long m) const {
    auto u = hull_coords(x, m);
    if (!u) return false;
    for (const auto& f : facets_)
        if (dot(f.normal, *u) > m * f.offset) return false;
    return true;
}

bool LatticePolytope::contains_interior(const Point& x, long long m) const {
    auto u = hull_coords(x, m);
    if (!u) return false;
    for (const auto& f : facets_)
        if (dot(f.normal, *u) >= m * f.offset) return false;
    return true;
}

PointLocus LatticePolytope::scan(long long m, bool strict) const {
    const int d = dim();
    std::vector<long long> lo(d), hi(d);
    for (int j = 0; j < d; ++j) {
        lo[j] = hi[j] = 0;
        bool first = true;
        for (const auto& u : vert_u_) {
            lo[j] = first ? u[j] : std::min(lo[j], u[j]);
            hi[j] = first ? u[j] : std::max(hi[j], u[j]);
            first = false;
        }
        lo[j] *= m;
        hi[j] *= m;
    }
    std::vector<Point> out;
    std::vector<long long> u = lo;
    for (;;) {
        bool ok = true;
        for (const auto& f : facets_) {
            long long v = dot(f.normal, u);
            if (strict ? v >= m * f.offset : v > m * f.offset) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(from_hull(u, m));
        int j = d - 1;
        while (j >= 0 && u[j] == hi[j]) {
            u[j] = lo[j];
            --j;
        }
        if (j < 0) break;
        ++u[j];
    }
    return PointLocus(n_, std::move(out));
}

PointLocus LatticePolytope::lattice_points(long long m) const {
    if (m < 0) throw std::invalid_argument("dilation factor must be >= 0");
    return scan(m, false);
}

PointLocus LatticePolytope::interior_lattice_points(long long m) const {
    if (m < 1) throw std::invalid_argument("interior needs m >= 1");
    if (dim() == 0) return PointLocus(n_, {from_hull({}, m)});
    return scan(m, true);
}

long long LatticePolytope::max_abs_sum() const {
    long long best = 0;
    for (const auto& p : lattice_points(1).points) {
        long long s = 0;
        for (auto x : p) s += std::llabs(x);
        best = std::max(best, s);
    }
    return best;
}

LatticePolytope dilate(const LatticePolytope& p, long long d) {
    std::vector<Point> vs;
    for (auto v : p.vertices()) {
        for (auto& x : v) x *= d;
        vs.push_back(v);
    }
    return LatticePolytope(vs);
}

LatticePolytope product(const LatticePolytope& p, const LatticePolytope& q) {
    std::vector<Point> vs;
    for (const auto& v : p.vertices())
        for (const auto& w : q.vertices()) {
            Point x = v;
            x.insert(x.end(), w.begin(), w.end());
            vs.push_back(x);
        }
    return LatticePolytope(vs);
}

LatticePolytope join(const LatticePolytope& p, const LatticePolytope& q) {
    std::vector<Point> vs;
    const int n = p.ambient_dim(), k = q.ambient_dim();
    for (const auto& v : p.vertices()) {
        Point x{1};
        x.insert(x.end(), v.begin(), v.end());
        x.resize(static_cast<std::size_t>(1 + n + k), 0);
        vs.push_back(x);
    }
    for (const auto& w : q.vertices()) {
        Point x(static_cast<std::size_t>(1 + n), 0);
        x.insert(x.end(), w.begin(), w.end());
        vs.push_back(x);
    }
    return LatticePolytope(vs);
}

LatticePolytope pyramid(const LatticePolytope& p) { return join(p, LatticePolytope({Point{}})); }

LatticePolytope affine_image(const LatticePolytope& p, const std::vector<std::vector<long long>>& a, const Point& b) {
    std::vector<Point> vs;
    for (const auto& v : p.vertices()) {
        Point x(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].size() != v.size()) throw std::invalid_argument("affine_image: matrix shape mismatch");
            long long s = b.at(i);
            for (std::size_t j = 0; j < v.size(); ++j) s += a[i][j] * v[j];
            x[i] = s;
        }
        vs.push_back(x);
    }
    return LatticePolytope(vs);
}

LatticePolytope segment(long long a, long long b) { return LatticePolytope({Point{a}, Point{b}}); }

LatticePolytope standard_simplex(int n) {
    std::vector<Point> vs;
    for (int i = 0; i < n; ++i) {
        Point e(n, 0);
        e[i] = 1;
        vs.push_back(e);
    }
    return LatticePolytope(vs);
}

LatticePolytope corner_simplex(int n) {
    std::vector<Point> vs{Point(n, 0)};
    for (int i = 0; i < n; ++i) {
        Point e(n, 0);
        e[i] = 1;
        vs.push_back(e);
    }
    return LatticePolytope(vs);
}

LatticePolytope cross_polytope(int n) {
    std::vector<Point> vs;
    for (int i = 0; i < n; ++i)
        for (int s : {1, -1}) {
            Point e(n, 0);
            e[i] = s;
            vs.push_back(e);
        }
    return LatticePolytope(vs);
}

LatticePolytope cube(int n) {
    std::vector<Point> vs;
    for (int mask = 0; mask < (1 << n); ++mask) {
        Point e(n, 0);
        for (int i = 0; i < n; ++i) e[i] = (mask >> (n - 1 - i)) & 1;
        vs.push_back(e);
    }
    return LatticePolytope(vs);
}

LatticePolytope reeve(long long v) { return LatticePolytope({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, v}}); }

bool is_antiblocking(const LatticePolytope& p) {
    const int n = p.ambient_dim();
    for (const auto& v : p.vertices())
        for (auto x : v)
            if (x < 0) return false;
    for (const auto& v : p.vertices()) {
        for (long mask = 0; mask < (1L << n); ++mask) {
            Point z = v;
            for (int i = 0; i < n; ++i)
                if ((mask >> i) & 1) z[i] = 0;
            if (!p.contains(z)) return false;
        }
    }
    return true;
}

std::pair<bool, std::optional<Point>> idp_check(const LatticePolytope& p, int m) {
    if (m < 1) throw std::invalid_argument("idp_check needs m >= 1");
    PointLocus z1 = p.lattice_points(1);
    PointLocus acc = z1;
    for (int i = 1; i < m; ++i) acc = minkowski_sum(acc, z1);
    PointLocus target = p.lattice_points(m);
    for (const auto& x : target.points)
        if (!acc.contains(x)) return {false, x};
    return {true, std::nullopt};
}

// ---- posets ----

Poset::Poset(int size, std::vector<std::pair<int, int>> cov) : n(size), covers(std::move(cov)) {
    for (auto [a, b] : covers)
        if (a < 0 || b < 0 || a >= n || b >= n || a == b) throw std::invalid_argument("poset cover out of range");
    std::sort(covers.begin(), covers.end());
    covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
    auto lt = less();
    for (int i = 0; i < n; ++i)
        if (lt[i][i]) throw std::invalid_argument("poset cover relation has a cycle");
    for (auto [a, b] : covers)
        for (int c = 0; c < n; ++c)
            if (lt[a][c] && lt[c][b]) throw std::invalid_argument("cover relation is not a transitive reduction");
}

std::vector<std::vector<bool>> Poset::less() const {
    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
    for (auto [a, b] : covers) lt[a][b] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (lt[i][k])
                for (int j = 0; j < n; ++j)
                    if (lt[k][j]) lt[i][j] = true;
    return lt;
}

Poset Poset::chain(int n) {
    std::vector<std::pair<int, int>> c;
    for (int i = 0; i + 1 < n; ++i) c.emplace_back(i, i + 1);
    return Poset(n, c);
}

Poset Poset::antichain(int n) { return Poset(n, {}); }

std::vector<Poset> posets_up_to_iso(int n) {
    if (n < 0 || n > 5) throw std::invalid_argument("posets_up_to_iso supports n <= 5");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) pairs.emplace_back(i, j);
    std::vector<int> perm(n);
    std::set<unsigned long> canon;
    const unsigned long total = 1UL << pairs.size();
    for (unsigned long mask = 0; mask < total; ++mask) {
        std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if ((mask >> k) & 1) r[pairs[k].first][pairs[k].second] = true;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                if (r[i][j] && r[j][i]) ok = false;
                if (!r[i][j]) continue;
                for (int k = 0; k < n && ok; ++k)
                    if (r[j][k] && !r[i][k]) ok = false;
            }
        if (!ok) continue;
        std::iota(perm.begin(), perm.end(), 0);
        unsigned long best = ~0UL;
        do {
            unsigned long code = 0;
            for (std::size_t k = 0; k < pairs.size(); ++k)
                if (r[perm[pairs[k].first]][perm[pairs[k].second]]) code |= 1UL << k;
            best = std::min(best, code);
        } while (std::next_permutation(perm.begin(), perm.end()));
        canon.insert(best);
    }
    std::vector<Poset> out;
    for (unsigned long code : canon) {
        std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if ((code >> k) & 1) r[pairs[k].first][pairs[k].second] = true;
        std::vector<std::pair<int, int>> cov;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (!r[i][j]) continue;
                bool direct = true;
                for (int k = 0; k < n; ++k)
                    if (r[i][k] && r[k][j]) direct = false;
                if (direct) cov.emplace_back(i, j);
            }
        out.emplace_back(n, cov);
    }
    return out;
}

Poset x_poset() { return Poset(5, {{0, 2}, {1, 2}, {2, 3}, {2, 4}}); }

namespace {

// 0/1 points passing the filter, with midpoints of two others discarded.
LatticePolytope from_01_points(int n, const std::function<bool(const Point&)>& keep) {
    std::vector<Point> pts;
    for (long mask = 0; mask < (1L << n); ++mask) {
        Point p(n);
        for (int i = 0; i < n; ++i) p[i] = (mask >> i) & 1;
        if (keep(p)) pts.push_back(p);
    }
    std::sort(pts.begin(), pts.end());
    std::vector<Point> verts;
    for (const auto& p : pts) {
        bool mid = false;
        for (std::size_t a = 0; a < pts.size() && !mid; ++a)
            for (std::size_t b = a + 1; b < pts.size() && !mid; ++b) {
                if (pts[a] == p || pts[b] == p) continue;
                bool all = true;
                for (int i = 0; i < n; ++i)
                    if (pts[a][i] + pts[b][i] != 2 * p[i]) all = false;
                mid = all;
            }
        if (!mid) verts.push_back(p);
    }
    return LatticePolytope(verts);
}

}  // namespace

LatticePolytope order_polytope(const Poset& p) {
    return from_01_points(p.n, [&](const Point& g) {
        for (auto [a, b] : p.covers)
            if (g[a] > g[b]) return false;
        return true;
    });
}

LatticePolytope chain_polytope(const Poset& p) {
    auto lt = p.less();
    return from_01_points(p.n, [&](const Point& f) {
        for (int i = 0; i < p.n; ++i)
            for (int j = 0; j < p.n; ++j)
                if (f[i] && f[j] && lt[i][j]) return false;
        return true;
    });
}

Point stanley_transfer(const Poset& p, const Point& g) {
    if (static_cast<int>(g.size()) != p.n) throw std::invalid_argument("stanley_transfer: size mismatch");
    for (auto x : g)
        if (x < 0) throw std::invalid_argument("stanley_transfer: point is not in a dilate of the order polytope");
    for (auto [a, b] : p.covers)
        if (g[a] > g[b]) throw std::invalid_argument("stanley_transfer: point is not in a dilate of the order polytope");
    Point out(g);
    for (int e = 0; e < p.n; ++e) {
        long long mx = 0;
        for (auto [a, b] : p.covers)
            if (b == e) mx = std::max(mx, g[a]);
        out[e] = g[e] - mx;
    }
    return out;
}

}  // namespace qeh
