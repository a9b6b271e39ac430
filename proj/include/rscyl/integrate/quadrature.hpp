#pragma once

#include "rscyl/integrate/region.hpp"

#include <span>
#include <vector>

namespace rscyl {

// Flat list of weighted points in R^n.
struct PointRule {
    int n = 0;
    std::vector<double> points;  // size() * n
    std::vector<double> weights;

    std::size_t size() const { return weights.size(); }
    std::span<const double> point(std::size_t i) const {
        return {points.data() + i * static_cast<std::size_t>(n), static_cast<std::size_t>(n)};
    }
    double total_weight() const;
    void push(std::span<const double> x, double w);
};

// Product rule on S^{n-1}: uniform angles on the circle, Gauss-Jacobi in each
// further polar coordinate. Exact for polynomials of degree < 2 * order.
PointRule sphere_rule(int n, int order);

// Boundary nodes of a box with outward normal +-e_{axis+1} per node.
struct SurfaceRule : PointRule {
    int order = 0;
    std::vector<int> axis;
    std::vector<double> normal_sign;

    VectorN<double> normal(std::size_t i) const;
};

SurfaceRule build_surface_rule(const BoxRegion& box, int order);

struct SingularPatch {
    int radial_order = 16;
    int sphere_order = 16;
    double radius = 0.0;  // 0: min(0.1 * min half-width, 0.5 * boundary distance)
};

struct VolumeRule : PointRule {
    int order = 0;
    bool patched = false;
    double patch_radius = 0.0;
    std::size_t patch_nodes = 0;  // the first patch_nodes entries lie in the ball
};

// Tensor Gauss-Legendre on the box.
VolumeRule build_volume_rule(const BoxRegion& box, int order);

// Ball of radius rho around y (radial Gauss x sphere rule) plus, for each face F,
// the truncated pyramid {y + s (z - y) : z in F, s in [rho/|z - y|, 1]}
// (face Gauss x radial Gauss). |x - y|^{1-n} times the Jacobian is smooth in
// both pieces.
VolumeRule build_volume_rule(const BoxRegion& box, int order, std::span<const double> y, const SingularPatch& patch);

// Oriented surface element of the parallelotope spanned by n-1 tangent
// vectors: sum_j (-1)^{j-1} e_j det(T without row j), so that
// <N, w> = det(w, t_1, ..., t_{n-1}).
VectorN<double> surface_form_element(std::span<const VectorN<double>> tangents);

} // namespace rscyl
