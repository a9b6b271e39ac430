#pragma once

#include "rscyl/clifford/vector.hpp"

#include <vector>

namespace rscyl {

// Axis-aligned box center +- half_widths.
struct BoxRegion {
    VectorN<double> center;
    std::vector<double> half_widths;

    static BoxRegion cube(int n, double side, const VectorN<double>& center);
    static BoxRegion cube(int n, double side);

    int dim() const { return center.dim(); }
    void validate() const;
    double volume() const;
    double surface_area() const;
    double min_half_width() const;
    // Distance from an interior point to the boundary (negative outside).
    double boundary_distance(std::span<const double> y) const;
    // x + Z^l meets V only in x: widths along e_1..e_l strictly below 1.
    void require_lattice_hypothesis(int l) const;
    // y strictly interior with distance > 0.05 min half-width.
    void require_interior(std::span<const double> y) const;
};

} // namespace rscyl
