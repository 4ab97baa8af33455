#pragma once

#include <cstddef>
#include <utility>

#include "hfnoise/core.hpp"

namespace hfnoise {

// MA(1) parameterization of noisy log-returns R_i = u_i + eta*u_{i-1}:
//   gamma^2 (1 + eta^2) = Var[R_i]        = sigma^2*delta + 2a^2
//   gamma^2 eta         = Cov[R_i,R_i-1]  = -a^2
// The noise-induced root satisfies -1 < eta <= 0.
struct Ma1Params {
    double gamma2 = 0.0;  // innovation variance, > 0
    double eta = 0.0;     // MA(1) coefficient
};

struct MleFitOptions {
    double eta_tol = 1e-10;          // golden-section bracket tolerance
    double eta_lower = -1.0 + 1e-9;  // search floor, guards the eta=-1 singularity
    int max_iter = 200;              // golden-section iteration budget
    std::size_t min_obs = 10;        // smallest usable return count
};

// (sigma2, a2, delta) -> (gamma2, eta). Throws DegenerateInput when
// sigma2*delta + a2 = 0 or when sigma2*delta = 0 with a2 > 0 (eta = -1).
Ma1Params to_ma1(double sigma2, double a2, double delta);

// Inverse map: a2 = -gamma2*eta, sigma2 = gamma2*(1+eta)^2/delta.
std::pair<double, double> from_ma1(const Ma1Params& p, double delta);

// Exact Gaussian MA(1) log-likelihood in O(n) via the LDL' factorization of
// the tridiagonal return covariance:
//   d_1 = 1+eta^2,  d_i = 1+eta^2 - eta^2/d_{i-1}
//   e_1 = R_1,      e_i = R_i - (eta/d_{i-1}) e_{i-1}
//   l = -sum(ln d_i)/2 - n ln(2 pi gamma2)/2 - sum(e_i^2/d_i)/(2 gamma2)
double loglik(const ReturnSeries& r, const Ma1Params& p);

// Closed-form inner maximizer of the likelihood over gamma2 at fixed eta:
// gamma2_hat(eta) = (1/n) sum e_i^2/d_i.
double profile_gamma2(const ReturnSeries& r, double eta);

// Profiled likelihood value at (profile_gamma2(r,eta), eta).
double profile_loglik(const ReturnSeries& r, double eta);

// MLE of (sigma2, a2): golden-section search of the profiled likelihood over
// eta in (eta_lower, 0], mapped back with delta = T_years/n. A boundary
// solution eta = 0 is reported as a2 = 0 with converged left true.
NoiseVolEstimate fit_mle(const ReturnSeries& r, const MleFitOptions& opts = {});

// Asymptotic covariance of (sigma2_hat, a2_hat) under Gaussian noise, with
// h = 2a^2 + (sigma^2 delta (4a^2 + sigma^2 delta))^(1/2) + sigma^2 delta:
//   [ 4 sigma^2 sqrt(sigma^2 d (4a^2+sigma^2 d)) + 2 sigma^4 d    -sigma^2 d h          ]
//   [ .                                                   (d/2)(2a^2+sigma^2 d) h      ]
Sym2 avar_normal(double sigma2, double a2, double delta);

// Misspecification-robust covariance: avar_normal plus Cum4[eps]*delta on
// the (a2, a2) entry.
Sym2 avar_true(double sigma2, double a2, double delta, double cum4);

// Fourth cumulant from raw moments, Cum4 = E[eps^4] - 3 E[eps^2]^2.
double cum4_from_moments(double m2, double m4);

}  // namespace hfnoise
