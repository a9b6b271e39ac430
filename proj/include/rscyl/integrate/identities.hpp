#pragma once

#include "rscyl/integrate/fields.hpp"
#include "rscyl/integrate/quadrature.hpp"
#include "rscyl/lattice/periodic.hpp"

#include <string>

namespace rscyl {

// Negative controls alter one ingredient of the pairing.
enum class PairingVariant {
    standard,
    wrong_projection,  // P_k and I - P_k exchanged
    swapped_order,     // B K instead of K B
    first_slot,        // pair over the kernel's first slot
};

const char* variant_name(PairingVariant v);

struct IdentitySetup {
    PeriodicKernelSpec spec;
    BoxRegion box;
    std::vector<double> y;
    int surface_order = 16;
    int volume_order = 16;
    SingularPatch patch;
    TruncationPolicy truncation = TruncationPolicy::with_radius(30);
    int threads = 1;
    PairingVariant variant = PairingVariant::standard;

    // Kernel spec, lattice hypothesis on the box, y interior.
    void validate() const;
};

struct Reconstruction {
    std::string identity;
    FloatPoly boundary;   // boundary term
    FloatPoly volume;     // volume term (zero polynomial when not computed)
    FloatPoly value;      // reconstructed polynomial in v
    FloatPoly reference;  // analytic value
    double abs_error = 0.0;
    double rel_error = 0.0;
    TruncationReport truncation;
    std::size_t surface_nodes = 0;
    std::size_t volume_nodes = 0;
    double patch_radius = 0.0;
};

// Reconstructing kernel sign: the identities read
// f(y) = int_dV (K, proj(n f)) - int_V (K, proj(D_x f)) with K = -(periodic E_k)
// for family R and K = +(periodic H_k) for family Q.
double reconstructing_sign(Family family);

// Boundary term alone (f annihilated by the operator).
Reconstruction cauchy_rhs(const IdentitySetup& setup, const TestField& f);
Reconstruction cauchy_rhs_R(const IdentitySetup& setup, const TestField& f);
Reconstruction cauchy_rhs_Q(const IdentitySetup& setup, const TestField& g);

// Boundary term minus volume term.
Reconstruction borel_pompeiu(const IdentitySetup& setup, const TestField& f);
Reconstruction borel_pompeiu_R(const IdentitySetup& setup, const TestField& f);
Reconstruction borel_pompeiu_Q(const IdentitySetup& setup, const TestField& g);

// Minus the volume term; for f supported inside V this reproduces f(y).
Reconstruction compact_support(const IdentitySetup& setup, const TestField& f);

// (T f)(y) = -int_V (periodic kernel, f(x, .)) dx, and T applied to the
// operator image proj(D_x f).
FloatPoly cauchy_transform(const IdentitySetup& setup, const TestField& f);
FloatPoly cauchy_transform_of_operator(const IdentitySetup& setup, const TestField& f);

// max |a - b| / max |b| over coefficients (b != 0), else max |a - b|.
double relative_coefficient_error(const FloatPoly& a, const FloatPoly& b);

struct StokesSetup {
    BoxRegion box;
    int order = 16;
    int threads = 1;
};

struct StokesResult {
    Multivector<double> volume;
    Multivector<double> boundary;
    double residual = 0.0;  // coefficient norm of volume - boundary
    double scale = 0.0;     // max coefficient norm of the two sides
};

// int_V [(g op_r, f) + (g, op f)] dx against int_dV (g, proj(n f)) with f
// left-sided and g right-sided of the same family and weight.
StokesResult stokes_residual(const StokesSetup& setup, const TestField& f, const TestField& g);

} // namespace rscyl
