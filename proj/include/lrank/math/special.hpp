#pragma once

// Regularized incomplete gamma, central and noncentral chi-square CDFs, and
// the noncentrality inversion used for RMSEA confidence limits.

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace lrank {

namespace detail {

// Lower regularized incomplete gamma P(a,x) by power series, x < a+1.
template <typename Scalar>
Scalar gamma_p_series(Scalar a, Scalar x) {
    const int itmax = 10000;
    const Scalar eps = std::numeric_limits<Scalar>::epsilon();
    Scalar ap = a;
    Scalar sum = Scalar(1) / a;
    Scalar del = sum;
    for (int n = 0; n < itmax; ++n) {
        ap += Scalar(1);
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * eps)
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw std::runtime_error("gamma_p_series: no convergence");
}

// Upper regularized incomplete gamma Q(a,x) by Lentz continued fraction, x >= a+1.
template <typename Scalar>
Scalar gamma_q_cf(Scalar a, Scalar x) {
    const int itmax = 10000;
    const Scalar eps = std::numeric_limits<Scalar>::epsilon();
    const Scalar fpmin = std::numeric_limits<Scalar>::min() / eps;
    Scalar b = x + Scalar(1) - a;
    Scalar c = Scalar(1) / fpmin;
    Scalar d = Scalar(1) / b;
    Scalar h = d;
    for (int i = 1; i <= itmax; ++i) {
        const Scalar an = -Scalar(i) * (Scalar(i) - a);
        b += Scalar(2);
        d = an * d + b;
        if (std::abs(d) < fpmin) d = fpmin;
        c = b + an / c;
        if (std::abs(c) < fpmin) c = fpmin;
        d = Scalar(1) / d;
        const Scalar del = d * c;
        h *= del;
        if (std::abs(del - Scalar(1)) < eps)
            return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw std::runtime_error("gamma_q_cf: no convergence");
}

}  // namespace detail

// P(a,x) = gamma(a,x)/Gamma(a), the lower regularized incomplete gamma.
template <typename Scalar>
Scalar gamma_p(Scalar a, Scalar x) {
    if (a <= Scalar(0)) throw std::invalid_argument("gamma_p: a must be > 0");
    if (x < Scalar(0)) throw std::invalid_argument("gamma_p: x must be >= 0");
    if (x == Scalar(0)) return Scalar(0);
    if (x < a + Scalar(1)) return detail::gamma_p_series(a, x);
    return Scalar(1) - detail::gamma_q_cf(a, x);
}

template <typename Scalar>
Scalar gamma_q(Scalar a, Scalar x) {
    if (a <= Scalar(0)) throw std::invalid_argument("gamma_q: a must be > 0");
    if (x < Scalar(0)) throw std::invalid_argument("gamma_q: x must be >= 0");
    if (x == Scalar(0)) return Scalar(1);
    if (x < a + Scalar(1)) return Scalar(1) - detail::gamma_p_series(a, x);
    return detail::gamma_q_cf(a, x);
}

template <typename Scalar>
Scalar chi2_cdf(Scalar x, Scalar df) {
    if (x <= Scalar(0)) return Scalar(0);
    return gamma_p(df / Scalar(2), x / Scalar(2));
}

// Upper tail, used for p-values.
template <typename Scalar>
Scalar chi2_sf(Scalar x, Scalar df) {
    if (x <= Scalar(0)) return Scalar(1);
    return gamma_q(df / Scalar(2), x / Scalar(2));
}

// Noncentral chi-square CDF as a Poisson mixture of central CDFs,
//   F(x; df, ncp) = sum_j Pois(j; ncp/2) * F_central(x; df + 2j),
// iterated outward from the Poisson mode so the weights never underflow.
// Truncated when the unaccounted Poisson mass can no longer move the result
// beyond a 1e-13 relative tail.
template <typename Scalar>
Scalar noncentral_chi2_cdf(Scalar x, Scalar df, Scalar ncp) {
    if (ncp < Scalar(0)) throw std::invalid_argument("noncentral_chi2_cdf: ncp must be >= 0");
    if (x <= Scalar(0)) return Scalar(0);
    if (ncp < Scalar(1e-12)) return chi2_cdf(x, df);

    const Scalar half = ncp / Scalar(2);
    const long mode = static_cast<long>(std::floor(half));
    const Scalar rel_tol = Scalar(1e-13);
    const long max_terms = 200000;

    const Scalar logw_mode = -half + Scalar(mode) * std::log(half) - std::lgamma(Scalar(mode) + Scalar(1));
    const Scalar w_mode = std::exp(logw_mode);

    Scalar sum = Scalar(0);
    Scalar wsum = Scalar(0);

    // Forward pass, j = mode, mode+1, ... ; central CDF decreases with df.
    Scalar wf = w_mode;
    Scalar last_cdf = Scalar(1);
    for (long j = mode; j < mode + max_terms; ++j) {
        last_cdf = chi2_cdf(x, df + Scalar(2) * Scalar(j));
        sum += wf * last_cdf;
        wsum += wf;
        wf *= half / Scalar(j + 1);
        const Scalar tail_bound = (Scalar(1) - wsum) * last_cdf;
        if (j > mode && tail_bound <= rel_tol * (sum + tail_bound)) break;
        if (last_cdf == Scalar(0)) break;
    }

    // Backward pass, j = mode-1, ..., 0 ; terms bounded by remaining mass.
    Scalar wb = w_mode * Scalar(mode) / half;  // weight at mode-1 (zero if mode==0)
    for (long j = mode - 1; j >= 0; --j) {
        const Scalar cdf_j = chi2_cdf(x, df + Scalar(2) * Scalar(j));
        sum += wb * cdf_j;
        wsum += wb;
        const Scalar tail_bound = Scalar(1) - wsum;  // backward cdf terms <= 1
        if (tail_bound <= rel_tol * sum) break;
        wb *= Scalar(j) / half;
    }

    if (sum < Scalar(0)) sum = Scalar(0);
    if (sum > Scalar(1)) sum = Scalar(1);
    return sum;
}

// Solves F(x; df, ncp) = prob for the noncentrality ncp >= 0 by bracketed
// bisection. The CDF is strictly decreasing in ncp; when even ncp = 0 gives
// a value below prob there is no root and 0 is returned.
template <typename Scalar>
Scalar noncentral_chi2_ncp_for_prob(Scalar x, Scalar df, Scalar prob) {
    if (x <= Scalar(0)) return Scalar(0);
    if (noncentral_chi2_cdf(x, df, Scalar(0)) <= prob) return Scalar(0);

    Scalar lo = Scalar(0);
    Scalar hi = Scalar(1);
    int expand = 0;
    while (noncentral_chi2_cdf(x, df, hi) > prob) {
        lo = hi;
        hi *= Scalar(2);
        if (++expand > 200) throw std::runtime_error("noncentral_chi2_ncp_for_prob: bracket expansion failed");
    }
    for (int it = 0; it < 400; ++it) {
        const Scalar mid = (lo + hi) / Scalar(2);
        if (noncentral_chi2_cdf(x, df, mid) > prob)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= Scalar(1e-12) * (Scalar(1) + hi)) break;
    }
    return (lo + hi) / Scalar(2);
}

template <typename Scalar>
Scalar normal_pdf(Scalar z) {
    static const Scalar inv_sqrt_2pi = Scalar(0.3989422804014326779);
    return inv_sqrt_2pi * std::exp(-z * z / Scalar(2));
}

template <typename Scalar>
Scalar normal_cdf(Scalar z) {
    return std::erfc(-z / std::sqrt(Scalar(2))) / Scalar(2);
}

}  // namespace lrank
