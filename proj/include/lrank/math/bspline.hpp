#pragma once

// Cubic B-spline basis on a clamped knot vector (Cox-de Boor recursion) and
// the least-squares machinery used for trend curves with prediction bands.

#include <Eigen/Dense>
#include <algorithm>
#include <stdexcept>
#include <vector>

namespace lrank {

// Clamped knot vector: boundary knots repeated degree+1 times around the
// strictly increasing interior knots. Basis dimension = #interior + degree + 1.
inline Eigen::VectorXd clamped_knot_vector(double x_min, double x_max,
                                           const std::vector<double>& interior,
                                           int degree = 3) {
    if (!(x_min < x_max)) throw std::invalid_argument("clamped_knot_vector: degenerate range");
    for (std::size_t i = 0; i < interior.size(); ++i) {
        if (interior[i] <= x_min || interior[i] >= x_max)
            throw std::invalid_argument("clamped_knot_vector: interior knot outside (min, max)");
        if (i > 0 && interior[i] <= interior[i - 1])
            throw std::invalid_argument("clamped_knot_vector: interior knots must increase");
    }
    Eigen::VectorXd knots(2 * (degree + 1) + static_cast<Eigen::Index>(interior.size()));
    Eigen::Index k = 0;
    for (int i = 0; i <= degree; ++i) knots(k++) = x_min;
    for (double t : interior) knots(k++) = t;
    for (int i = 0; i <= degree; ++i) knots(k++) = x_max;
    return knots;
}

// All basis function values at x (row of the design matrix).
inline Eigen::VectorXd bspline_basis_row(double x, const Eigen::VectorXd& knots, int degree = 3) {
    const Eigen::Index n_basis = knots.size() - degree - 1;
    Eigen::VectorXd row = Eigen::VectorXd::Zero(n_basis);

    const double lo = knots(degree);
    const double hi = knots(knots.size() - degree - 1);
    x = std::clamp(x, lo, hi);

    // knot span index: largest i with knots(i) <= x < knots(i+1)
    Eigen::Index span;
    if (x >= hi) {
        span = n_basis - 1;
    } else {
        span = degree;
        while (span + 1 < knots.size() - degree - 1 && x >= knots(span + 1)) ++span;
    }

    // Cox-de Boor on the degree+1 basis functions alive on this span
    std::vector<double> N(degree + 1, 0.0), left(degree + 1), right(degree + 1);
    N[0] = 1.0;
    for (int j = 1; j <= degree; ++j) {
        left[j] = x - knots(span + 1 - j);
        right[j] = knots(span + j) - x;
        double saved = 0.0;
        for (int r = 0; r < j; ++r) {
            const double denom = right[r + 1] + left[j - r];
            const double temp = denom != 0.0 ? N[r] / denom : 0.0;
            N[r] = saved + right[r + 1] * temp;
            saved = left[j - r] * temp;
        }
        N[j] = saved;
    }
    for (int j = 0; j <= degree; ++j) row(span - degree + j) = N[j];
    return row;
}

inline Eigen::MatrixXd bspline_design(const Eigen::VectorXd& x, const Eigen::VectorXd& knots,
                                      int degree = 3) {
    const Eigen::Index n_basis = knots.size() - degree - 1;
    Eigen::MatrixXd B(x.size(), n_basis);
    for (Eigen::Index i = 0; i < x.size(); ++i)
        B.row(i) = bspline_basis_row(x(i), knots, degree).transpose();
    return B;
}

}  // namespace lrank
