#pragma once

// Dense BFGS minimizer with Armijo backtracking. The objective may return
// +inf outside its domain (e.g. a covariance that is not positive definite);
// the line search backtracks into the domain. Small fixed-dimension problems
// only; the inverse Hessian approximation is kept dense.

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace lrank {

struct BfgsOptions {
    int max_iterations = 500;
    double gradient_tol = 1e-10;   // stop when ||g||_inf falls below this
    int max_line_search = 60;
    double armijo_c1 = 1e-4;
};

struct BfgsResult {
    Eigen::VectorXd x;
    double f = std::numeric_limits<double>::quiet_NaN();
    Eigen::VectorXd gradient;
    int iterations = 0;
    bool reached_gradient_tol = false;
    bool line_search_failed = false;
    bool hit_max_iterations = false;
    std::vector<double> f_history;  // accepted objective values, monotone nonincreasing
};

inline BfgsResult bfgs_minimize(const std::function<double(const Eigen::VectorXd&)>& f,
                                const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& grad,
                                Eigen::VectorXd x0,
                                const BfgsOptions& opts = {}) {
    const int n = static_cast<int>(x0.size());
    BfgsResult res;
    res.x = std::move(x0);
    res.f = f(res.x);
    if (!std::isfinite(res.f)) {
        res.line_search_failed = true;
        return res;
    }
    res.gradient = grad(res.x);
    res.f_history.push_back(res.f);

    Eigen::MatrixXd H = Eigen::MatrixXd::Identity(n, n);

    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        if (res.gradient.lpNorm<Eigen::Infinity>() <= opts.gradient_tol) {
            res.reached_gradient_tol = true;
            return res;
        }

        Eigen::VectorXd d = -(H * res.gradient);
        double slope = res.gradient.dot(d);
        if (!(slope < 0.0)) {
            H.setIdentity();
            d = -res.gradient;
            slope = res.gradient.dot(d);
            if (!(slope < 0.0)) {
                res.line_search_failed = true;
                return res;
            }
        }

        double t = 1.0;
        double f_new = std::numeric_limits<double>::infinity();
        Eigen::VectorXd x_new;
        bool accepted = false;
        for (int ls = 0; ls < opts.max_line_search; ++ls) {
            x_new = res.x + t * d;
            f_new = f(x_new);
            if (std::isfinite(f_new) && f_new <= res.f + opts.armijo_c1 * t * slope) {
                accepted = true;
                break;
            }
            t /= 2.0;
        }
        if (!accepted) {
            res.line_search_failed = true;
            return res;
        }

        const Eigen::VectorXd g_new = grad(x_new);
        const Eigen::VectorXd s = x_new - res.x;
        const Eigen::VectorXd y = g_new - res.gradient;
        const double sy = s.dot(y);
        if (sy > 1e-12 * s.norm() * y.norm()) {
            const double rho = 1.0 / sy;
            const Eigen::MatrixXd Hy = H * y;
            // H <- (I - rho s y^T) H (I - rho y s^T) + rho s s^T
            H -= rho * (s * Hy.transpose() + Hy * s.transpose());
            H += rho * (rho * y.dot(Hy) + 1.0) * (s * s.transpose());
        }

        res.x = x_new;
        res.f = f_new;
        res.gradient = g_new;
        res.iterations = iter + 1;
        res.f_history.push_back(res.f);
    }
    if (res.gradient.lpNorm<Eigen::Infinity>() <= opts.gradient_tol)
        res.reached_gradient_tol = true;
    else
        res.hit_max_iterations = true;
    return res;
}

}  // namespace lrank
