#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace lrank {

inline Eigen::VectorXd column_means(const Eigen::MatrixXd& X) {
    return X.colwise().mean();
}

// Sample covariance with divisor n - ddof (ddof 0 matches the ML likelihood).
inline Eigen::MatrixXd sample_covariance(const Eigen::MatrixXd& X, int ddof = 0) {
    const Eigen::Index n = X.rows();
    if (n - ddof <= 0) throw std::invalid_argument("sample_covariance: too few rows");
    const Eigen::MatrixXd centered = X.rowwise() - X.colwise().mean();
    Eigen::MatrixXd S = (centered.transpose() * centered) / static_cast<double>(n - ddof);
    S = ((S + S.transpose()) / 2.0).eval();
    return S;
}

// Half-vectorization: stacks the lower triangle (including diagonal) column by
// column, so vech index of (i,j), i >= j, is j*P - j*(j-1)/2 + (i - j).
inline Eigen::Index vech_size(Eigen::Index p) { return p * (p + 1) / 2; }

inline Eigen::Index vech_index(Eigen::Index i, Eigen::Index j, Eigen::Index p) {
    if (i < j) std::swap(i, j);
    return j * p - j * (j - 1) / 2 + (i - j);
}

inline Eigen::VectorXd vech(const Eigen::MatrixXd& A) {
    const Eigen::Index p = A.rows();
    Eigen::VectorXd v(vech_size(p));
    Eigen::Index k = 0;
    for (Eigen::Index j = 0; j < p; ++j)
        for (Eigen::Index i = j; i < p; ++i) v(k++) = A(i, j);
    return v;
}

// Duplication matrix D with vec(A) = D * vech(A) for symmetric A.
inline Eigen::MatrixXd duplication_matrix(Eigen::Index p) {
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(p * p, vech_size(p));
    for (Eigen::Index j = 0; j < p; ++j) {
        for (Eigen::Index i = 0; i < p; ++i) {
            const Eigen::Index vec_idx = j * p + i;
            D(vec_idx, vech_index(i, j, p)) = 1.0;
        }
    }
    return D;
}

// Ranks starting at 1, ties get the average rank.
inline Eigen::VectorXd ranks_with_ties(const Eigen::VectorXd& x) {
    const Eigen::Index n = x.size();
    std::vector<Eigen::Index> order(n);
    std::iota(order.begin(), order.end(), Eigen::Index(0));
    std::sort(order.begin(), order.end(),
              [&](Eigen::Index a, Eigen::Index b) { return x(a) < x(b); });
    Eigen::VectorXd r(n);
    Eigen::Index i = 0;
    while (i < n) {
        Eigen::Index j = i;
        while (j + 1 < n && x(order[j + 1]) == x(order[i])) ++j;
        const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (Eigen::Index k = i; k <= j; ++k) r(order[k]) = avg;
        i = j + 1;
    }
    return r;
}

inline double pearson_correlation(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
    if (x.size() != y.size()) throw std::invalid_argument("pearson_correlation: length mismatch");
    const Eigen::VectorXd xc = x.array() - x.mean();
    const Eigen::VectorXd yc = y.array() - y.mean();
    const double sx = xc.norm();
    const double sy = yc.norm();
    if (sx == 0.0 || sy == 0.0) throw std::invalid_argument("pearson_correlation: zero variance");
    return xc.dot(yc) / (sx * sy);
}

inline double spearman_correlation(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
    return pearson_correlation(ranks_with_ties(x), ranks_with_ties(y));
}

// Kendall tau-b with tie correction, O(n^2) concordance counting.
inline double kendall_tau_b(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
    if (x.size() != y.size()) throw std::invalid_argument("kendall_tau_b: length mismatch");
    const Eigen::Index n = x.size();
    long long concordant = 0, discordant = 0, ties_x = 0, ties_y = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double dx = x(i) - x(j);
            const double dy = y(i) - y(j);
            if (dx == 0.0) ++ties_x;
            if (dy == 0.0) ++ties_y;
            if (dx == 0.0 || dy == 0.0) continue;
            if ((dx > 0) == (dy > 0)) ++concordant; else ++discordant;
        }
    }
    const double n0 = static_cast<double>(n) * (n - 1) / 2.0;
    const double denom = std::sqrt((n0 - static_cast<double>(ties_x)) * (n0 - static_cast<double>(ties_y)));
    if (denom == 0.0) throw std::invalid_argument("kendall_tau_b: zero variance");
    return (static_cast<double>(concordant) - static_cast<double>(discordant)) / denom;
}

}  // namespace lrank
