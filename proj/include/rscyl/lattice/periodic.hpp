#pragma once

#include "rscyl/kernels/fundamental.hpp"
#include "rscyl/lattice/lattice.hpp"

#include <optional>
#include <string>

namespace rscyl {

enum class SummationMode { direct, symmetrized };

struct PeriodicKernelSpec {
    Family family = Family::R;
    int n = 3;
    int k = 1;
    int l = 1;
    int p = 0;  // twist rank, 0 = untwisted

    void validate() const;
    // direct for l <= n-2 (absolutely convergent), symmetrized for l = n-1.
    SummationMode mode() const;
};

struct TruncationPolicy {
    std::optional<int> radius;
    std::optional<double> target_tail;

    static TruncationPolicy with_radius(int m) { return {m, std::nullopt}; }
    static TruncationPolicy with_target(double t) { return {std::nullopt, t}; }
};

struct TruncationReport {
    int M = 0;
    double bound = 0.0;
    long terms_summed = 0;
    double rdom = 0.0;         // domain radius the bound holds for
    double zsup = 0.0;         // scaled sup bound of the zonal factor
    double zlip = 0.0;         // scaled Lipschitz bound (symmetrized mode)
    std::string bound_kind;    // "direct" or "symmetrized-pair"
};

// Rigorous scaled norms of the base kernel's zonal factor on S x S:
// sup <= sum ||c_ab|| / (omega c_k), Lipschitz in the first slot <= sum ||c_ab|| |a| / (omega c_k).
struct ZonalNorms {
    double zsup = 0.0;
    double zlip = 0.0;
};
ZonalNorms zonal_norms(Family family, int n, int k);

struct TailBoundInput {
    int n = 3;
    int l = 1;
    int M = 1;
    double rdom = 0.0;
    double zsup = 0.0;
    double zlip = 0.0;
};

// Overestimate of the norm of all dropped shells r > M. Requires M > n * rdom.
double tail_bound(const TailBoundInput& in);
double tail_bound(int n, int k, int l, int M, double rdom, double zsup);

// Smallest M with tail_bound < target (throws PolicyError when unreachable).
int resolve_radius(const PeriodicKernelSpec& spec, double rdom, double target);

// Lattice distance of x from Z^l (first l coordinates), used as singular-set guard.
double lattice_distance(std::span<const double> x, int l);

constexpr double kSingularGuard = 1e-9;

// Truncated periodic kernel with a precomputed lattice list.
class PeriodicKernel {
public:
    PeriodicKernel(const PeriodicKernelSpec& spec, int radius);

    const PeriodicKernelSpec& spec() const { return spec_; }
    int radius() const { return radius_; }
    std::size_t terms() const { return points_.size(); }

    // Sum over shells 0..M of sign * K(x + m).
    KernelPoly evaluate(std::span<const double> x) const;
    // Sum over shells lo..hi (inclusive) only.
    KernelPoly evaluate_shells(std::span<const double> x, int lo, int hi) const;
    TruncationReport report(double rdom) const;

private:
    PeriodicKernelSpec spec_;
    int radius_;
    std::vector<LatticeVector> points_;  // shell-major, lexicographic in each shell
    std::vector<int> shell_start_;       // index of first point of shell r
    std::vector<double> signs_;
    ZonalNorms norms_;
};

struct PeriodicKernelValue {
    KernelPoly value;
    TruncationReport report;
};

PeriodicKernelValue periodic_kernel(const PeriodicKernelSpec& spec, const VectorN<double>& x,
                                    const TruncationPolicy& policy);

// Sampled sup over unit (u, v) of ||K(u, v)||; a lower estimate of the true sup.
double sampled_sup_norm(const KernelPoly& k, int samples_per_slot, unsigned seed);

} // namespace rscyl
