// Neumaier's compensated summation: tracks the rounding error of every add
// and reinjects it at the end. Point averages can sit many orders of
// magnitude above the differences we report, so plain accumulation would
// wash out the low bits.
#pragma once

#include <cmath>

namespace wafom {

class NeumaierSum {
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

} // namespace wafom
