#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace rscyl {

// Neumaier compensated summation.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Element-wise compensated accumulation of equally sized arrays.
class CompensatedArray {
public:
    CompensatedArray() = default;
    explicit CompensatedArray(std::size_t size) : sum_(size, 0.0), comp_(size, 0.0) {}

    std::size_t size() const { return sum_.size(); }

    void add(std::size_t i, double x) {
        double& s = sum_[i];
        const double t = s + x;
        if (std::abs(s) >= std::abs(x))
            comp_[i] += (s - t) + x;
        else
            comp_[i] += (x - t) + s;
        s = t;
    }
    void add(const double* values, double scale = 1.0) {
        for (std::size_t i = 0; i < sum_.size(); ++i) add(i, scale * values[i]);
    }
    std::vector<double> values() const {
        std::vector<double> out(sum_.size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = sum_[i] + comp_[i];
        return out;
    }
    void reset() {
        std::fill(sum_.begin(), sum_.end(), 0.0);
        std::fill(comp_.begin(), comp_.end(), 0.0);
    }

private:
    std::vector<double> sum_;
    std::vector<double> comp_;
};

} // namespace rscyl
