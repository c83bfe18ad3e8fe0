#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qehrhart/rational.hpp"

namespace qeh {

using Point = std::vector<long long>;

// Sorted, deduplicated finite set of integer points.
struct PointLocus {
    int dim = 0;
    std::vector<Point> points;

    PointLocus() = default;
    PointLocus(int n, std::vector<Point> pts);
    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
    bool contains(const Point& p) const;
    bool operator==(const PointLocus& o) const { return dim == o.dim && points == o.points; }
};

PointLocus minkowski_sum(const PointLocus& a, const PointLocus& b);

struct Facet {
    std::vector<long long> normal;  // hull coordinates, primitive
    long long offset = 0;           // normal . u <= offset on P
    bool operator==(const Facet& o) const { return normal == o.normal && offset == o.offset; }
};

class LatticePolytope {
public:
    LatticePolytope() = default;
    explicit LatticePolytope(std::vector<Point> vertices, std::string name = "");

    int ambient_dim() const { return n_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::string& name() const { return name_; }
    const std::vector<Point>& vertices() const { return vertices_; }
    const std::vector<Point>& input_vertices() const { return input_; }
    const Point& base_point() const { return base_; }
    const std::vector<Point>& lattice_basis() const { return basis_; }  // columns of L
    const std::vector<Facet>& facets() const { return facets_; }

    // Hull coordinates u with x = m*base + L u, if x lies on the lattice of the m-th dilate's hull.
    std::optional<std::vector<long long>> hull_coords(const Point& x, long long m) const;
    Point from_hull(const std::vector<long long>& u, long long m) const;

    bool contains(const Point& x, long long m = 1) const;
    bool contains_interior(const Point& x, long long m = 1) const;
    PointLocus lattice_points(long long m) const;
    PointLocus interior_lattice_points(long long m) const;
    long long max_abs_sum() const;  // max over lattice points of P of sum |z_i|

private:
    PointLocus scan(long long m, bool strict) const;
    int n_ = 0;
    std::string name_;
    std::vector<Point> input_;
    std::vector<Point> vertices_;
    Point base_;
    std::vector<Point> basis_;
    std::vector<std::vector<long long>> vert_u_;
    std::vector<Facet> facets_;
    std::vector<int> pivot_rows_;  // rows of L forming an invertible minor
    std::vector<std::vector<Rat>> minor_inv_;
};

LatticePolytope dilate(const LatticePolytope& p, long long d);
LatticePolytope product(const LatticePolytope& p, const LatticePolytope& q);
LatticePolytope join(const LatticePolytope& p, const LatticePolytope& q);
LatticePolytope pyramid(const LatticePolytope& p);
LatticePolytope affine_image(const LatticePolytope& p, const std::vector<std::vector<long long>>& a, const Point& b);

LatticePolytope segment(long long a, long long b);
LatticePolytope standard_simplex(int n);   // conv{e_1..e_n} in R^n
LatticePolytope corner_simplex(int n);     // conv{0, e_1..e_n}
LatticePolytope cross_polytope(int n);
LatticePolytope cube(int n);
LatticePolytope reeve(long long v);        // conv{0, e1, e2, (1,1,v)}

bool is_antiblocking(const LatticePolytope& p);
// m-fold sumset of the lattice points of P against those of mP; witness is the lexicographically least missing point.
std::pair<bool, std::optional<Point>> idp_check(const LatticePolytope& p, int m);

// Integer kernel basis of an integer matrix (rows given), via unimodular column operations.
std::vector<std::vector<Int>> integer_kernel(const std::vector<std::vector<Int>>& rows, std::size_t ncols);

struct Poset {
    int n = 0;
    std::vector<std::pair<int, int>> covers;  // (p, p') means p covered by p'

    Poset() = default;
    Poset(int size, std::vector<std::pair<int, int>> cov);
    // less[i][j] iff i < j strictly
    std::vector<std::vector<bool>> less() const;
    static Poset chain(int n);
    static Poset antichain(int n);
};

// All posets on n elements up to isomorphism, in a canonical deterministic order.
std::vector<Poset> posets_up_to_iso(int n);
Poset x_poset();  // 5 elements: two minima and two maxima over a middle element

LatticePolytope order_polytope(const Poset& p);
LatticePolytope chain_polytope(const Poset& p);
Point stanley_transfer(const Poset& p, const Point& g);

}  // namespace qeh
