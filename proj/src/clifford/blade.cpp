#include "rscyl/clifford/blade.hpp"

#include "rscyl/errors.hpp"

#include <array>
#include <memory>
#include <mutex>

namespace rscyl {

std::string blade_name(Blade a) {
    if (a == 0) return "1";
    std::string s = "e";
    for (int i = 0; i < 32; ++i)
        if (a & (Blade{1} << i)) s += std::to_string(i + 1);
    return s;
}

BladeTable::BladeTable(int n) : n_(n), size_(1 << n), signs_(std::size_t{1} << (2 * n)) {
    for (Blade a = 0; a < static_cast<Blade>(size_); ++a)
        for (Blade b = 0; b < static_cast<Blade>(size_); ++b)
            signs_[(a << n) | b] = static_cast<std::int8_t>(blade_product_sign(a, b));
}

const BladeTable& BladeTable::get(int n) {
    if (n < 1 || n > kMaxDim) throw UsageError("blade table dimension out of range");
    static std::array<std::unique_ptr<BladeTable>, kMaxDim + 1> tables;
    static std::once_flag flags[kMaxDim + 1];
    std::call_once(flags[n], [n] { tables[n].reset(new BladeTable(n)); });
    return *tables[n];
}

} // namespace rscyl
