#include "rscyl/integrate/region.hpp"

#include <cmath>
#include <sstream>

namespace rscyl {

BoxRegion BoxRegion::cube(int n, double side, const VectorN<double>& center) {
    if (center.dim() != n) throw UsageError("box center dimension mismatch");
    return BoxRegion{center, std::vector<double>(static_cast<std::size_t>(n), 0.5 * side)};
}

BoxRegion BoxRegion::cube(int n, double side) { return cube(n, side, VectorN<double>(n)); }

void BoxRegion::validate() const {
    if (static_cast<int>(half_widths.size()) != dim()) throw UsageError("box half-width count differs from dimension");
    for (double h : half_widths)
        if (!(h > 0.0) || !std::isfinite(h)) throw UsageError("box half-widths must be positive and finite");
}

double BoxRegion::volume() const {
    double v = 1.0;
    for (double h : half_widths) v *= 2.0 * h;
    return v;
}

double BoxRegion::surface_area() const {
    double s = 0.0;
    for (std::size_t d = 0; d < half_widths.size(); ++d) {
        double f = 2.0;
        for (std::size_t j = 0; j < half_widths.size(); ++j)
            if (j != d) f *= 2.0 * half_widths[j];
        s += f;
    }
    return s;
}

double BoxRegion::min_half_width() const {
    double m = half_widths.front();
    for (double h : half_widths) m = std::min(m, h);
    return m;
}

double BoxRegion::boundary_distance(std::span<const double> y) const {
    double d = INFINITY;
    for (int i = 0; i < dim(); ++i) {
        const double off = std::abs(y[static_cast<std::size_t>(i)] - center[static_cast<std::size_t>(i)]);
        d = std::min(d, half_widths[static_cast<std::size_t>(i)] - off);
    }
    return d;
}

void BoxRegion::require_lattice_hypothesis(int l) const {
    validate();
    for (int i = 0; i < l; ++i) {
        const double width = 2.0 * half_widths[static_cast<std::size_t>(i)];
        if (!(width < 1.0)) {
            std::ostringstream os;
            os << "lattice hypothesis violated: the shifted lattice x + Z^" << l
               << " must meet V only in x, but the box width along e" << i + 1 << " is " << width << " >= 1";
            throw HypothesisError(os.str());
        }
    }
}

void BoxRegion::require_interior(std::span<const double> y) const {
    if (static_cast<int>(y.size()) != dim()) throw UsageError("point dimension differs from box dimension");
    const double d = boundary_distance(y);
    if (!(d > 0.05 * min_half_width())) {
        std::ostringstream os;
        os << "evaluation point must be interior with boundary distance > 0.05 * min half-width ("
           << 0.05 * min_half_width() << "), got " << d;
        throw HypothesisError(os.str());
    }
}

} // namespace rscyl
