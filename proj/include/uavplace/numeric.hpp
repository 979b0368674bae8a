#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace uavplace {

// Neumaier-compensated accumulator. Error stays O(eps * sum|x|) independent of
// the term count, which keeps weighted centroid updates within 1e-12 of their
// replica-expanded counterparts.
template <class Scalar = double>
class NeumaierSum {
public:
    void add(Scalar x) {
        Scalar t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    Scalar value() const { return sum_ + comp_; }

private:
    Scalar sum_{0};
    Scalar comp_{0};
};

// Pairwise (cascade) summation; error grows with log(n) instead of n.
template <class Scalar>
Scalar pairwise_sum(std::span<const Scalar> xs) {
    if (xs.size() <= 16) {
        Scalar s{0};
        for (Scalar x : xs) s += x;
        return s;
    }
    std::size_t mid = xs.size() / 2;
    return pairwise_sum(xs.subspan(0, mid)) + pairwise_sum(xs.subspan(mid));
}

}  // namespace uavplace
