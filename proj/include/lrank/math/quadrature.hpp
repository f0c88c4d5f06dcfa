#pragma once

// Gauss-Hermite quadrature adapted to the standard normal weight:
//   E[g(Z)] ~= sum_i w(i) * g(z(i)),  Z ~ N(0,1),  sum_i w(i) = 1.
// Nodes and weights come from the Golub-Welsch eigendecomposition of the
// Hermite Jacobi matrix; the rule is symmetrized afterwards so that odd
// integrands cancel exactly.

#include <Eigen/Dense>
#include <stdexcept>

namespace lrank {

struct GaussHermiteRule {
    Eigen::VectorXd z;  // abscissas on the N(0,1) scale, ascending
    Eigen::VectorXd w;  // positive weights summing to 1
};

inline GaussHermiteRule gauss_hermite_normal(int order) {
    if (order < 1) throw std::invalid_argument("gauss_hermite_normal: order must be >= 1");

    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(order, order);
    for (int i = 1; i < order; ++i) {
        const double b = std::sqrt(i / 2.0);
        J(i, i - 1) = b;
        J(i - 1, i) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("gauss_hermite_normal: eigensolver failed");

    GaussHermiteRule rule;
    rule.z.resize(order);
    rule.w.resize(order);
    for (int i = 0; i < order; ++i) {
        // physicists' nodes x; N(0,1) change of variable z = sqrt(2) x
        rule.z(i) = std::sqrt(2.0) * es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        rule.w(i) = v0 * v0;  // already normalized: weights/sqrt(pi)
    }

    // enforce exact symmetry of the rule
    for (int i = 0, j = order - 1; i < j; ++i, --j) {
        const double zs = (rule.z(j) - rule.z(i)) / 2.0;
        rule.z(i) = -zs;
        rule.z(j) = zs;
        const double ws = (rule.w(i) + rule.w(j)) / 2.0;
        rule.w(i) = ws;
        rule.w(j) = ws;
    }
    if (order % 2 == 1) rule.z((order - 1) / 2) = 0.0;
    rule.w /= rule.w.sum();
    return rule;
}

}  // namespace lrank
