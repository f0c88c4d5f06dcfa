#pragma once

#include <cmath>

namespace lrank {

template <typename Scalar>
inline Scalar logit(Scalar u) {
    return std::log(u / (Scalar(1) - u));
}

// Stable in both tails.
template <typename Scalar>
inline Scalar logistic(Scalar v) {
    if (v >= Scalar(0)) {
        const Scalar e = std::exp(-v);
        return Scalar(1) / (Scalar(1) + e);
    }
    const Scalar e = std::exp(v);
    return e / (Scalar(1) + e);
}

}  // namespace lrank
