#include "rscyl/poly/monogenic.hpp"

#include "rscyl/poly/rational_matrix.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace rscyl {

namespace {

// z_i = u_i + u_1 e_1 e_i, the left-monogenic Fueter variable.
ExactPoly fueter_variable(int n, int i) {
    ExactPoly z = ExactPoly::coordinate(n, i);
    const auto e1ei = Multivector<Rational>::e(n, 1) * Multivector<Rational>::e(n, i);
    z.add_term(Exponent::unit(0), e1ei);
    return z;
}

MonogenicBasis build_left(int n, int k) {
    MonogenicBasis basis;
    basis.n = n;
    basis.k = k;
    basis.side = Side::left;
    const Multivector<Rational> one(n, Rational(1));
    if (k == 0) {
        basis.indices.push_back(std::vector<int>(static_cast<std::size_t>(n - 1), 0));
        basis.elements.push_back(ExactPoly::constant(one));
        return basis;
    }
    std::vector<ExactPoly> z;
    for (int i = 2; i <= n; ++i) z.push_back(fueter_variable(n, i));
    for (const Exponent& sigma : MonomialBasis::get(n - 1, k).list()) {
        std::vector<int> factors;
        for (int s = 0; s < n - 1; ++s)
            for (int r = 0; r < sigma[static_cast<std::size_t>(s)]; ++r) factors.push_back(s);
        ExactPoly sum(n, k);
        long arrangements = 0;
        do {
            ExactPoly prod = ExactPoly::constant(one);
            for (int f : factors) prod = prod * z[static_cast<std::size_t>(f)];
            sum += prod;
            ++arrangements;
        } while (std::next_permutation(factors.begin(), factors.end()));
        sum /= Rational(arrangements);
        if (!is_monogenic(sum))
            throw InternalError("Fueter polynomial " + sigma.to_string(n - 1) + " is not left-monogenic");
        basis.indices.push_back(sigma.to_vector(n - 1));
        basis.elements.push_back(std::move(sum));
    }
    return basis;
}

} // namespace

MonogenicBasis fueter_basis(int n, int k, Side side) {
    check_dimension(n);
    if (k < 0) throw UsageError("Fueter basis degree must be >= 0");
    if (n < 2) throw UsageError("Fueter basis needs n >= 2");
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, MonogenicBasis> cache;
    const auto key = std::make_tuple(n, k, static_cast<int>(side));
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    MonogenicBasis basis = build_left(n, k);
    if (side == Side::right) {
        basis.side = Side::right;
        for (auto& p : basis.elements) {
            p = conjugate(p);
            if (!is_monogenic(p, Side::right))
                throw InternalError("conjugated Fueter polynomial is not right-monogenic");
        }
    }
    std::lock_guard lock(mu);
    return cache.emplace(key, std::move(basis)).first->second;
}

int real_rank(const std::vector<ExactPoly>& polys) {
    if (polys.empty()) return 0;
    const int n = polys.front().dim();
    const int d = polys.front().degree();
    const auto& mono = MonomialBasis::get(n, d);
    const int blades = 1 << n;
    RationalMatrix m(static_cast<int>(polys.size()), mono.size() * blades);
    for (std::size_t r = 0; r < polys.size(); ++r)
        for (const auto& [a, c] : polys[r].terms()) {
            const int col = mono.index_of(a) * blades;
            for (int b = 0; b < blades; ++b) m(static_cast<int>(r), col + b) = c[static_cast<Blade>(b)];
        }
    return rank(std::move(m));
}

} // namespace rscyl
