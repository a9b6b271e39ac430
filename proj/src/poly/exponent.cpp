#include "rscyl/poly/exponent.hpp"

#include "rscyl/errors.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace rscyl {

Exponent Exponent::from_vector(const std::vector<int>& v) {
    if (v.size() > kMaxDim) throw UsageError("multi-index longer than kMaxDim");
    Exponent a;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0 || v[i] > 255) throw UsageError("multi-index entry out of range");
        a.e[i] = static_cast<std::uint8_t>(v[i]);
    }
    return a;
}

std::string Exponent::to_string(int n) const {
    std::string s = "(";
    for (int i = 0; i < n; ++i) {
        if (i) s += ",";
        s += std::to_string(e[static_cast<std::size_t>(i)]);
    }
    return s + ")";
}

namespace {

void fill(int n, int d, int pos, Exponent& cur, std::vector<Exponent>& out) {
    if (pos == n - 1) {
        cur.e[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(d);
        out.push_back(cur);
        cur.e[static_cast<std::size_t>(pos)] = 0;
        return;
    }
    for (int v = d; v >= 0; --v) {
        cur.e[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(v);
        fill(n, d - v, pos + 1, cur, out);
    }
    cur.e[static_cast<std::size_t>(pos)] = 0;
}

} // namespace

MonomialBasis::MonomialBasis(int n, int d) : n_(n), d_(d) {
    if (d < 0) return;
    Exponent cur;
    fill(n, d, 0, cur, list_);
}

int MonomialBasis::index_of(const Exponent& alpha) const {
    // list_ is strictly decreasing lexicographically.
    auto it = std::lower_bound(list_.begin(), list_.end(), alpha,
                               [](const Exponent& a, const Exponent& b) { return a > b; });
    if (it == list_.end() || *it != alpha) return -1;
    return static_cast<int>(it - list_.begin());
}

const MonomialBasis& MonomialBasis::get(int n, int d) {
    if (n < 1 || n > kMaxDim) throw UsageError("monomial basis dimension out of range");
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<MonomialBasis>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{n, d}];
    if (!slot) slot.reset(new MonomialBasis(n, d));
    return *slot;
}

long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace rscyl
