#include "rscyl/integrate/quadrature.hpp"

#include "rscyl/util/compensated.hpp"
#include "rscyl/util/gauss.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>

namespace rscyl {

double PointRule::total_weight() const {
    CompensatedSum s;
    for (double w : weights) s.add(w);
    return s.value();
}

void PointRule::push(std::span<const double> x, double w) {
    points.insert(points.end(), x.begin(), x.end());
    weights.push_back(w);
}

namespace {

void check_order(int order) {
    if (order < 2 || order > 64) throw UsageError("quadrature order must lie in [2, 64], got " + std::to_string(order));
}

// Calls fn(index vector) for all index tuples in [0, q)^m.
template <class Fn>
void for_each_tuple(int m, int q, Fn&& fn) {
    std::vector<int> idx(static_cast<std::size_t>(m), 0);
    while (true) {
        fn(std::span<const int>(idx));
        int d = 0;
        while (d < m && ++idx[static_cast<std::size_t>(d)] == q) idx[static_cast<std::size_t>(d++)] = 0;
        if (d == m) return;
    }
}

} // namespace

PointRule sphere_rule(int n, int order) {
    if (n < 2) throw UsageError("sphere rule needs n >= 2");
    check_order(order);
    PointRule rule;
    rule.n = 2;
    const int m = 2 * order;
    for (int i = 0; i < m; ++i) {
        const double a = 2.0 * std::numbers::pi * (i + 0.5) / m;
        const double x[2] = {std::cos(a), std::sin(a)};
        rule.push(x, 2.0 * std::numbers::pi / m);
    }
    for (int d = 3; d <= n; ++d) {
        const GaussRule& g = gauss_symmetric_jacobi(order, 0.5 * (d - 3));
        PointRule next;
        next.n = d;
        std::vector<double> x(static_cast<std::size_t>(d));
        for (std::size_t a = 0; a < g.nodes.size(); ++a) {
            const double t = g.nodes[a];
            const double s = std::sqrt(std::max(0.0, 1.0 - t * t));
            for (std::size_t b = 0; b < rule.size(); ++b) {
                const auto w = rule.point(b);
                for (int j = 0; j < d - 1; ++j) x[static_cast<std::size_t>(j)] = s * w[static_cast<std::size_t>(j)];
                x[static_cast<std::size_t>(d - 1)] = t;
                next.push(x, g.weights[a] * rule.weights[b]);
            }
        }
        rule = std::move(next);
    }
    return rule;
}

VectorN<double> SurfaceRule::normal(std::size_t i) const {
    VectorN<double> v(n);
    v[static_cast<std::size_t>(axis[i])] = normal_sign[i];
    return v;
}

SurfaceRule build_surface_rule(const BoxRegion& box, int order) {
    box.validate();
    check_order(order);
    const int n = box.dim();
    const GaussRule& g = gauss_legendre(order);
    SurfaceRule rule;
    rule.n = n;
    rule.order = order;
    std::vector<double> x(static_cast<std::size_t>(n));
    for (int d = 0; d < n; ++d)
        for (double sign : {-1.0, 1.0})
            for_each_tuple(n - 1, order, [&](std::span<const int> idx) {
                double w = 1.0;
                int t = 0;
                for (int j = 0; j < n; ++j) {
                    const auto uj = static_cast<std::size_t>(j);
                    if (j == d) {
                        x[uj] = box.center[uj] + sign * box.half_widths[uj];
                        continue;
                    }
                    const auto q = static_cast<std::size_t>(idx[static_cast<std::size_t>(t++)]);
                    x[uj] = box.center[uj] + box.half_widths[uj] * g.nodes[q];
                    w *= box.half_widths[uj] * g.weights[q];
                }
                rule.push(x, w);
                rule.axis.push_back(d);
                rule.normal_sign.push_back(sign);
            });
    return rule;
}

VolumeRule build_volume_rule(const BoxRegion& box, int order) {
    box.validate();
    check_order(order);
    const int n = box.dim();
    const GaussRule& g = gauss_legendre(order);
    VolumeRule rule;
    rule.n = n;
    rule.order = order;
    std::vector<double> x(static_cast<std::size_t>(n));
    for_each_tuple(n, order, [&](std::span<const int> idx) {
        double w = 1.0;
        for (int j = 0; j < n; ++j) {
            const auto uj = static_cast<std::size_t>(j);
            const auto q = static_cast<std::size_t>(idx[uj]);
            x[uj] = box.center[uj] + box.half_widths[uj] * g.nodes[q];
            w *= box.half_widths[uj] * g.weights[q];
        }
        rule.push(x, w);
    });
    return rule;
}

VolumeRule build_volume_rule(const BoxRegion& box, int order, std::span<const double> y, const SingularPatch& patch) {
    box.validate();
    check_order(order);
    check_order(patch.radial_order);
    check_order(patch.sphere_order);
    box.require_interior(y);
    const int n = box.dim();
    const double dist = box.boundary_distance(y);
    const double rho = patch.radius > 0.0 ? patch.radius : std::min(0.1 * box.min_half_width(), 0.5 * dist);
    if (!(rho < dist)) throw UsageError("singular patch radius must be below the boundary distance");

    VolumeRule rule;
    rule.n = n;
    rule.order = order;
    rule.patched = true;
    rule.patch_radius = rho;
    std::vector<double> x(static_cast<std::size_t>(n));

    const GaussRule radial = gauss_legendre(patch.radial_order, 0.0, rho);
    const PointRule sphere = sphere_rule(n, patch.sphere_order);
    for (std::size_t a = 0; a < radial.nodes.size(); ++a) {
        const double r = radial.nodes[a];
        const double wr = radial.weights[a] * std::pow(r, n - 1);
        for (std::size_t b = 0; b < sphere.size(); ++b) {
            const auto xi = sphere.point(b);
            for (int j = 0; j < n; ++j) x[static_cast<std::size_t>(j)] = y[static_cast<std::size_t>(j)] + r * xi[static_cast<std::size_t>(j)];
            rule.push(x, wr * sphere.weights[b]);
        }
    }
    rule.patch_nodes = rule.size();

    const GaussRule& g = gauss_legendre(order);
    const GaussRule& gs = gauss_legendre(patch.radial_order);
    std::vector<double> z(static_cast<std::size_t>(n));
    for (int d = 0; d < n; ++d)
        for (double sign : {-1.0, 1.0}) {
            const auto ud = static_cast<std::size_t>(d);
            const double plane = box.center[ud] + sign * box.half_widths[ud];
            const double height = std::abs(plane - y[ud]);
            for_each_tuple(n - 1, order, [&](std::span<const int> idx) {
                double wf = 1.0;
                int t = 0;
                for (int j = 0; j < n; ++j) {
                    const auto uj = static_cast<std::size_t>(j);
                    if (j == d) {
                        z[uj] = plane;
                        continue;
                    }
                    const auto q = static_cast<std::size_t>(idx[static_cast<std::size_t>(t++)]);
                    z[uj] = box.center[uj] + box.half_widths[uj] * g.nodes[q];
                    wf *= box.half_widths[uj] * g.weights[q];
                }
                double len2 = 0.0;
                for (int j = 0; j < n; ++j) {
                    const double dz = z[static_cast<std::size_t>(j)] - y[static_cast<std::size_t>(j)];
                    len2 += dz * dz;
                }
                const double s0 = rho / std::sqrt(len2);
                const double half = 0.5 * (1.0 - s0);
                for (std::size_t a = 0; a < gs.nodes.size(); ++a) {
                    const double s = s0 + half * (gs.nodes[a] + 1.0);
                    for (int j = 0; j < n; ++j) {
                        const auto uj = static_cast<std::size_t>(j);
                        x[uj] = y[uj] + s * (z[uj] - y[uj]);
                    }
                    rule.push(x, wf * height * std::pow(s, n - 1) * half * gs.weights[a]);
                }
            });
        }
    return rule;
}

VectorN<double> surface_form_element(std::span<const VectorN<double>> tangents) {
    if (tangents.empty()) throw UsageError("surface element needs n-1 tangent vectors");
    const int n = tangents.front().dim();
    if (static_cast<int>(tangents.size()) != n - 1)
        throw UsageError("surface element needs exactly n-1 tangent vectors");
    Eigen::MatrixXd t(n, n - 1);
    for (int c = 0; c < n - 1; ++c) {
        tangents[static_cast<std::size_t>(c)].require_same(tangents.front());
        for (int r = 0; r < n; ++r) t(r, c) = tangents[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
    }
    VectorN<double> out(n);
    for (int j = 0; j < n; ++j) {
        Eigen::MatrixXd minor(n - 1, n - 1);
        for (int r = 0, rr = 0; r < n; ++r) {
            if (r == j) continue;
            minor.row(rr++) = t.row(r);
        }
        const double det = n == 1 ? 1.0 : minor.determinant();
        out[static_cast<std::size_t>(j)] = (j % 2 == 0 ? 1.0 : -1.0) * det;
    }
    return out;
}

} // namespace rscyl
