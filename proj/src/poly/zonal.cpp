#include "rscyl/poly/zonal.hpp"

#include "rscyl/poly/rational_matrix.hpp"

#include <json.hpp>

#include <cmath>
#include <memory>
#include <mutex>

namespace rscyl {

namespace {

ZonalKernel build(int n, int k) {
    const MonogenicBasis left = fueter_basis(n, k, Side::left);
    const MonogenicBasis right = fueter_basis(n, k, Side::right);
    const int count = static_cast<int>(left.size());
    const int blades = 1 << n;
    const int dim = count * blades;

    // gram[tau][rho] = (conj P_tau, P_rho)_v / omega_n
    std::vector<std::vector<Multivector<Rational>>> gram(static_cast<std::size_t>(count));
    for (int t = 0; t < count; ++t)
        for (int r = 0; r < count; ++r)
            gram[static_cast<std::size_t>(t)].push_back(
                sphere_pair(right.elements[static_cast<std::size_t>(t)], left.elements[static_cast<std::size_t>(r)]).value);

    // Unknown (tau, A) is the e_A coefficient of C_{sigma tau}; row
    // (rho, B) is the e_B coefficient of sum_tau C_{sigma tau} gram[tau][rho].
    RationalMatrix a(dim, dim);
    for (int t = 0; t < count; ++t)
        for (int ab = 0; ab < blades; ++ab) {
            const auto ea = Multivector<Rational>::basis(n, static_cast<Blade>(ab));
            for (int r = 0; r < count; ++r) {
                const auto prod = ea * gram[static_cast<std::size_t>(t)][static_cast<std::size_t>(r)];
                for (int bb = 0; bb < blades; ++bb)
                    a(r * blades + bb, t * blades + ab) = prod[static_cast<Blade>(bb)];
            }
        }
    RationalMatrix rhs(dim, count);
    for (int s = 0; s < count; ++s) rhs(s * blades, s) = 1;
    const RationalMatrix x = solve(std::move(a), std::move(rhs));

    ZonalKernel z;
    z.n = n;
    z.k = k;
    z.omega_power = -1;
    for (int s = 0; s < count; ++s)
        for (int t = 0; t < count; ++t) {
            Multivector<Rational> c(n);
            for (int ab = 0; ab < blades; ++ab) c[static_cast<Blade>(ab)] = x(t * blades + ab, s);
            if (c.is_zero()) continue;
            for (const auto& [alpha, pa] : left.elements[static_cast<std::size_t>(s)].terms()) {
                const auto pc = pa * c;
                for (const auto& [beta, rb] : right.elements[static_cast<std::size_t>(t)].terms()) {
                    auto [it, inserted] = z.terms.try_emplace({alpha, beta}, pc * rb);
                    if (!inserted) it->second += pc * rb;
                }
            }
        }
    std::erase_if(z.terms, [](const auto& kv) { return kv.second.is_zero(); });
    return z;
}

} // namespace

const ZonalKernel& zonal_kernel(int n, int k) {
    if (n < 3 || n > kMaxDim) throw UsageError("zonal kernel needs 3 <= n <= 8");
    if (k < 0) throw UsageError("zonal kernel degree must be >= 0");
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<ZonalKernel>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find({n, k}); it != cache.end()) return *it->second;
    }
    auto built = std::make_unique<ZonalKernel>(build(n, k));
    std::lock_guard lock(mu);
    auto& slot = cache[{n, k}];
    if (!slot) slot = std::move(built);
    return *slot;
}

ExactPoly reproduce(const ZonalKernel& z, const ExactPoly& p) {
    if (p.dim() != z.n) throw UsageError("reproduce: dimension mismatch");
    if (z.omega_power != -1) throw UsageError("reproduce: kernel normalization is not omega^-1");
    ExactPoly out(z.n, z.k, Var::u);
    for (const auto& [key, c] : z.terms)
        for (const auto& [gamma, pc] : p.terms()) {
            const Rational m = sphere_moment_ratio(z.n, key.second + gamma);
            if (sgn(m) == 0) continue;
            out.add_term(key.first, c * pc * m);
        }
    return out;
}

ExactPoly u_section(const ZonalKernel& z, std::span<const Rational> v) {
    if (static_cast<int>(v.size()) != z.n) throw UsageError("u_section: dimension mismatch");
    ExactPoly out(z.n, z.k, Var::u);
    for (const auto& [key, c] : z.terms) {
        Rational m(1);
        for (int i = 0; i < z.n; ++i)
            for (int e = 0; e < key.second[static_cast<std::size_t>(i)]; ++e) m *= v[static_cast<std::size_t>(i)];
        out.add_term(key.first, c * m);
    }
    return out;
}

Multivector<double> evaluate(const ZonalKernel& z, std::span<const double> u, std::span<const double> v) {
    Multivector<double> out(z.n);
    for (const auto& [key, c] : z.terms) {
        double m = 1.0;
        for (int i = 0; i < z.n; ++i) {
            m *= std::pow(u[static_cast<std::size_t>(i)], key.first[static_cast<std::size_t>(i)]);
            m *= std::pow(v[static_cast<std::size_t>(i)], key.second[static_cast<std::size_t>(i)]);
        }
        out += to_double(c) * m;
    }
    return out * std::pow(sphere_area(z.n), z.omega_power);
}

std::string zonal_to_json(const ZonalKernel& z) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, c] : z.terms)
        for (Blade b = 0; b < c.size(); ++b) {
            if (sgn(c[b]) == 0) continue;
            const mpz_class& num = c[b].get_num();
            const mpz_class& den = c[b].get_den();
            if (!num.fits_slong_p() || !den.fits_slong_p())
                throw InternalError("zonal coefficient exceeds 64-bit integer range");
            terms.push_back({{"alpha_u", key.first.to_vector(z.n)},
                             {"alpha_v", key.second.to_vector(z.n)},
                             {"blade", blade_name(b)},
                             {"numerator", num.get_si()},
                             {"denominator", den.get_si()},
                             {"omega_exponent", z.omega_power}});
        }
    nlohmann::json doc = {{"n", z.n}, {"k", z.k}, {"terms", terms}};
    return doc.dump(2);
}

namespace {

Blade parse_blade(const std::string& name, int n) {
    if (name == "1") return 0;
    if (name.size() < 2 || name[0] != 'e') throw UsageError("bad blade name '" + name + "'");
    Blade b = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        const int idx = name[i] - '0';
        if (idx < 1 || idx > n) throw UsageError("bad blade name '" + name + "'");
        b |= basis_vector_blade(idx);
    }
    return b;
}

} // namespace

ZonalKernel zonal_from_json(const std::string& text) {
    const auto doc = nlohmann::json::parse(text);
    ZonalKernel z;
    z.n = doc.at("n").get<int>();
    z.k = doc.at("k").get<int>();
    check_dimension(z.n);
    for (const auto& t : doc.at("terms")) {
        const auto au = Exponent::from_vector(t.at("alpha_u").get<std::vector<int>>());
        const auto av = Exponent::from_vector(t.at("alpha_v").get<std::vector<int>>());
        z.omega_power = t.at("omega_exponent").get<int>();
        Rational q(t.at("numerator").get<long>(), t.at("denominator").get<long>());
        q.canonicalize();
        auto [it, inserted] = z.terms.try_emplace({au, av}, Multivector<Rational>(z.n));
        it->second[parse_blade(t.at("blade").get<std::string>(), z.n)] = q;
    }
    return z;
}

} // namespace rscyl
