#include "rscyl/lattice/periodic.hpp"

#include "rscyl/util/gauss.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace rscyl {

void PeriodicKernelSpec::validate() const {
    if (n < 3 || n > kMaxDim) throw UsageError("periodic kernel needs 3 <= n <= 8, got n=" + std::to_string(n));
    if (k < 0) throw UsageError("periodic kernel needs k >= 0");
    if (family == Family::Q && k < 1) throw UsageError("Q-family kernels need k >= 1 (M_{-1} is empty)");
    if (l == n) throw UsageError("lattice rank l = n (torus) is not supported");
    if (l < 1 || l > n - 1)
        throw UsageError("lattice rank l must satisfy 1 <= l <= n-1, got l=" + std::to_string(l));
    if (p < 0 || p > l) throw UsageError("twist rank p must satisfy 0 <= p <= l, got p=" + std::to_string(p));
}

SummationMode PeriodicKernelSpec::mode() const {
    return eisenstein_converges(l, static_cast<double>(n - 1 - l)) ? SummationMode::direct : SummationMode::symmetrized;
}

ZonalNorms zonal_norms(Family family, int n, int k) {
    const int zdeg = family == Family::R ? k : k - 1;
    if (zdeg < 0) throw UsageError("Q-family kernels need k >= 1");
    const auto& z = zonal_kernel(n, zdeg);
    const Rational ck = family == Family::R ? ck_rarita_schwinger(n, k) : ck_remaining(n, k);
    const double w = sphere_area(n);
    const double scale = std::pow(w, z.omega_power) / (w * ck.get_d());
    double sum = 0.0;
    for (const auto& [key, c] : z.terms) sum += norm(to_double(c));
    return {sum * scale, sum * scale * zdeg};
}

namespace {

double factorial(int m) {
    double f = 1.0;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
}

} // namespace

double tail_bound(const TailBoundInput& in) {
    const int n = in.n;
    const int l = in.l;
    if (l < 1 || l > n - 1) throw UsageError("tail bound needs 1 <= l <= n-1");
    if (in.M < 1) throw PolicyError("truncation radius M must be >= 1");
    if (!(in.M > n * in.rdom)) {
        std::ostringstream os;
        os << "truncation radius M=" << in.M << " must exceed n*R=" << n * in.rdom
           << " for the tail estimate; choose M >= " << static_cast<int>(std::floor(n * in.rdom)) + 1;
        throw PolicyError(os.str());
    }
    const double R = in.rdom;
    const double c = factorial(n - 2);
    const bool direct = l <= n - 2;
    // integrand in t (continuous shell radius), bounding the shell-r contribution
    auto per_t = [&](double t) {
        const double geo = std::pow(1.0 - n * R / t, -(n - 1));
        if (direct) {
            const double count = 2.0 * l * std::pow(2.0 * t + 1.0, l - 1);
            return count * in.zsup * c * geo / std::pow(t, n - 1);
        }
        const double pairs = l * std::pow(2.0 * t + 1.0, l - 1);
        const double even = in.zsup * 2.0 * c * (geo - 1.0) / std::pow(t, n - 1);
        const double odd = in.zlip * 16.0 * R / std::pow(t - R, n);
        return pairs * (even + odd);
    };
    // int_M^inf per_t(t) dt with t = 1/s
    const auto rule = gauss_legendre(64, 0.0, 1.0 / in.M);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double s = rule.nodes[i];
        sum += rule.weights[i] * per_t(1.0 / s) / (s * s);
    }
    return sum * (1.0 + 1e-9);
}

double tail_bound(int n, int k, int l, int M, double rdom, double zsup) {
    (void)k;
    if (l == n - 1) throw UsageError("symmetrized tail bound needs the Lipschitz constant; use TailBoundInput");
    return tail_bound(TailBoundInput{n, l, M, rdom, zsup, 0.0});
}

int resolve_radius(const PeriodicKernelSpec& spec, double rdom, double target) {
    if (!(target > 0.0)) throw PolicyError("target tail must be positive");
    const auto norms = zonal_norms(spec.family, spec.n, spec.k);
    auto bound = [&](int M) { return tail_bound(TailBoundInput{spec.n, spec.l, M, rdom, norms.zsup, norms.zlip}); };
    int lo = static_cast<int>(std::floor(spec.n * rdom)) + 1;
    if (bound(lo) < target) return lo;
    int hi = lo;
    while (bound(hi) >= target) {
        lo = hi;
        hi *= 2;
        if (hi > 100000) throw PolicyError("target tail unreachable with M <= 100000");
    }
    while (hi - lo > 1) {
        const int mid = lo + (hi - lo) / 2;
        if (bound(mid) < target) hi = mid;
        else lo = mid;
    }
    return hi;
}

double lattice_distance(std::span<const double> x, int l) {
    double d2 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = static_cast<int>(i) < l ? x[i] - std::round(x[i]) : x[i];
        d2 += r * r;
    }
    return std::sqrt(d2);
}

PeriodicKernel::PeriodicKernel(const PeriodicKernelSpec& spec, int radius) : spec_(spec), radius_(radius) {
    spec_.validate();
    if (radius < 1) throw PolicyError("truncation radius M must be >= 1");
    for (int r = 0; r <= radius; ++r) {
        shell_start_.push_back(static_cast<int>(points_.size()));
        for (auto& m : enumerate_shell(spec.l, r)) {
            signs_.push_back(spec.p > 0 ? twist_sign(m, spec.p) : 1.0);
            points_.push_back(std::move(m));
        }
    }
    shell_start_.push_back(static_cast<int>(points_.size()));
    norms_ = zonal_norms(spec.family, spec.n, spec.k);
}

KernelPoly PeriodicKernel::evaluate(std::span<const double> x) const { return evaluate_shells(x, 0, radius_); }

KernelPoly PeriodicKernel::evaluate_shells(std::span<const double> x, int lo, int hi) const {
    if (static_cast<int>(x.size()) != spec_.n) throw UsageError("periodic kernel point dimension mismatch");
    if (lo < 0 || hi > radius_ || lo > hi) throw UsageError("shell range outside the precomputed lattice");
    const double dist = lattice_distance(x, spec_.l);
    if (dist <= kSingularGuard) {
        std::ostringstream os;
        os << "periodic kernel evaluated on the singular set x + Z^" << spec_.l << " (distance " << dist
           << " <= " << kSingularGuard << ")";
        throw SingularityError(os.str());
    }
    KernelAccumulator acc(spec_.family, spec_.n, spec_.k);
    std::vector<double> xm(x.begin(), x.end());
    for (int i = shell_start_[static_cast<std::size_t>(lo)]; i < shell_start_[static_cast<std::size_t>(hi + 1)]; ++i) {
        const auto& m = points_[static_cast<std::size_t>(i)];
        for (int j = 0; j < spec_.l; ++j) xm[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j)] + m[static_cast<std::size_t>(j)];
        acc.add(xm, signs_[static_cast<std::size_t>(i)]);
    }
    return acc.finish();
}

TruncationReport PeriodicKernel::report(double rdom) const {
    TruncationReport rep;
    rep.M = radius_;
    rep.terms_summed = static_cast<long>(points_.size());
    rep.rdom = rdom;
    rep.zsup = norms_.zsup;
    rep.zlip = spec_.mode() == SummationMode::symmetrized ? norms_.zlip : 0.0;
    rep.bound_kind = spec_.mode() == SummationMode::direct ? "direct" : "symmetrized-pair";
    rep.bound = tail_bound(TailBoundInput{spec_.n, spec_.l, radius_, rdom, rep.zsup, rep.zlip});
    return rep;
}

PeriodicKernelValue periodic_kernel(const PeriodicKernelSpec& spec, const VectorN<double>& x,
                                    const TruncationPolicy& policy) {
    spec.validate();
    if (x.dim() != spec.n) throw UsageError("periodic kernel point dimension mismatch");
    const double rdom = norm(x);
    int M = 0;
    if (policy.radius) M = *policy.radius;
    else if (policy.target_tail) M = resolve_radius(spec, rdom, *policy.target_tail);
    else throw PolicyError("truncation policy needs a radius or a target tail");
    PeriodicKernel pk(spec, M);
    auto value = pk.evaluate(x.components());
    return {std::move(value), pk.report(rdom)};
}

double sampled_sup_norm(const KernelPoly& k, int samples_per_slot, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    const int n = k.dim();
    auto sample = [&]() {
        std::vector<double> w(static_cast<std::size_t>(n));
        double r = 0.0;
        for (double& c : w) {
            c = g(rng);
            r += c * c;
        }
        r = std::sqrt(r);
        for (double& c : w) c /= r;
        return w;
    };
    std::vector<std::vector<double>> us, vs;
    for (int i = 0; i < samples_per_slot; ++i) {
        us.push_back(sample());
        vs.push_back(sample());
    }
    double best = 0.0;
    for (const auto& u : us)
        for (const auto& v : vs) best = std::max(best, norm(k.evaluate(u, v)));
    return best;
}

} // namespace rscyl
