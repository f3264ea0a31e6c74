#include "cdrtarget/learn/linear.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cdrtarget::learn {

namespace {

constexpr double kJitter = 1e-10;       // diagonal ridge for Cholesky stability
constexpr double kGradTol = 1e-8;       // mean-gradient infinity norm
constexpr int kMaxIrlsIters = 100;
constexpr int kMaxCdSweeps = 2000;
constexpr double kCdTol = 1e-10;        // max absolute coefficient change

// Solves A x = b for symmetric positive definite A (row-major, n x n).
std::vector<double> cholesky_solve(std::vector<double> a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t i = 0; i < n; ++i) a[i * n + i] += kJitter;
  // in-place LL^T
  for (std::size_t j = 0; j < n; ++j) {
    double d = a[j * n + j];
    for (std::size_t k = 0; k < j; ++k) d -= a[j * n + k] * a[j * n + k];
    if (d <= 0.0) throw std::runtime_error("linear solve failed: matrix not positive definite");
    const double ljj = std::sqrt(d);
    a[j * n + j] = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = a[i * n + j];
      for (std::size_t k = 0; k < j; ++k) s -= a[i * n + k] * a[j * n + k];
      a[i * n + j] = s / ljj;
    }
  }
  // forward, then backward substitution
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[i];
    for (std::size_t k = 0; k < i; ++k) s -= a[i * n + k] * b[k];
    b[i] = s / a[i * n + i];
  }
  for (std::size_t ii = n; ii > 0; --ii) {
    const std::size_t i = ii - 1;
    double s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= a[k * n + i] * b[k];
    b[i] = s / a[i * n + i];
  }
  return b;
}

double soft_threshold(double z, double t) {
  if (z > t) return z - t;
  if (z < -t) return z + t;
  return 0.0;
}

// Weighted least squares with an implicit intercept column.
LinearFit solve_wls(const Dataset& d, const std::vector<double>& weights,
                    const std::vector<double>& target) {
  const std::size_t p = d.n_cols;
  const std::size_t np = p + 1;  // intercept first
  std::vector<double> gram(np * np, 0.0);
  std::vector<double> rhs(np, 0.0);
  std::vector<double> xr(np);
  for (std::size_t r = 0; r < d.n_rows; ++r) {
    const double w = weights[r];
    if (w <= 0.0) continue;
    xr[0] = 1.0;
    for (std::size_t c = 0; c < p; ++c) xr[c + 1] = d.at(r, c);
    for (std::size_t i = 0; i < np; ++i) {
      const double wxi = w * xr[i];
      rhs[i] += wxi * target[r];
      for (std::size_t j = i; j < np; ++j) gram[i * np + j] += wxi * xr[j];
    }
  }
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t j = 0; j < i; ++j) gram[i * np + j] = gram[j * np + i];
  std::vector<double> beta = cholesky_solve(std::move(gram), std::move(rhs));
  LinearFit fit;
  fit.intercept = beta[0];
  fit.coef.assign(beta.begin() + 1, beta.end());
  return fit;
}

// Coordinate descent for (1/(2 sum_w)) sum w (t - b0 - x.b)^2 + penalty * |b|_1.
LinearFit lasso_cd(const Dataset& d, const std::vector<double>& weights,
                   const std::vector<double>& target, double penalty,
                   LinearFit warm) {
  const std::size_t n = d.n_rows, p = d.n_cols;
  double w_total = 0.0;
  for (std::size_t r = 0; r < n; ++r) w_total += weights[r];
  if (w_total <= 0.0) throw std::runtime_error("lasso: zero total weight");

  std::vector<double>& beta = warm.coef;
  beta.resize(p, 0.0);
  double& beta0 = warm.intercept;

  // col_ss[c] = (1/sum_w) sum_r w x_rc^2
  std::vector<double> col_ss(p, 0.0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < p; ++c) col_ss[c] += weights[r] * d.at(r, c) * d.at(r, c);
  for (std::size_t c = 0; c < p; ++c) col_ss[c] /= w_total;

  std::vector<double> resid(n);  // target - prediction
  for (std::size_t r = 0; r < n; ++r) {
    double pred = beta0;
    for (std::size_t c = 0; c < p; ++c) pred += beta[c] * d.at(r, c);
    resid[r] = target[r] - pred;
  }

  for (int sweep = 0; sweep < kMaxCdSweeps; ++sweep) {
    double max_delta = 0.0;
    // intercept (unpenalized)
    {
      double g = 0.0;
      for (std::size_t r = 0; r < n; ++r) g += weights[r] * resid[r];
      const double delta = g / w_total;
      beta0 += delta;
      for (std::size_t r = 0; r < n; ++r) resid[r] -= delta;
      max_delta = std::max(max_delta, std::abs(delta));
    }
    for (std::size_t c = 0; c < p; ++c) {
      if (col_ss[c] <= 0.0) continue;
      double g = 0.0;
      for (std::size_t r = 0; r < n; ++r) g += weights[r] * d.at(r, c) * resid[r];
      g /= w_total;
      const double z = g + col_ss[c] * beta[c];
      const double new_beta = soft_threshold(z, penalty) / col_ss[c];
      const double delta = new_beta - beta[c];
      if (delta != 0.0) {
        beta[c] = new_beta;
        for (std::size_t r = 0; r < n; ++r) resid[r] -= delta * d.at(r, c);
        max_delta = std::max(max_delta, std::abs(delta));
      }
    }
    if (max_delta < kCdTol) break;
  }
  return warm;
}

}  // namespace

double sigmoid(double z) {
  if (z >= 0.0) {
    const double e = std::exp(-z);
    return 1.0 / (1.0 + e);
  }
  const double e = std::exp(z);
  return e / (1.0 + e);
}

LinearFit fit_linear_regression(const Dataset& d, double l1_penalty) {
  std::vector<double> weights(d.n_rows);
  for (std::size_t r = 0; r < d.n_rows; ++r) weights[r] = d.weight(r);
  if (l1_penalty <= 0.0) return solve_wls(d, weights, d.y);
  return lasso_cd(d, weights, d.y, l1_penalty, LinearFit{0.0, std::vector<double>(d.n_cols, 0.0)});
}

LinearFit fit_logistic_regression(const Dataset& d, double l1_penalty) {
  const std::size_t n = d.n_rows, p = d.n_cols;
  LinearFit fit;
  fit.coef.assign(p, 0.0);

  double w_total = 0.0;
  for (std::size_t r = 0; r < n; ++r) w_total += d.weight(r);
  if (w_total <= 0.0) throw std::runtime_error("logistic: zero total weight");

  std::vector<double> eta(n, 0.0), prob(n), irls_w(n), z(n);
  for (int iter = 0; iter < kMaxIrlsIters; ++iter) {
    for (std::size_t r = 0; r < n; ++r) prob[r] = sigmoid(eta[r]);

    if (l1_penalty <= 0.0) {
      double grad_inf = 0.0;
      std::vector<double> grad(p + 1, 0.0);
      for (std::size_t r = 0; r < n; ++r) {
        const double res = d.weight(r) * (d.y[r] - prob[r]);
        grad[0] += res;
        for (std::size_t c = 0; c < p; ++c) grad[c + 1] += res * d.at(r, c);
      }
      for (std::size_t c = 0; c <= p; ++c)
        grad_inf = std::max(grad_inf, std::abs(grad[c]) / w_total);
      if (grad_inf < kGradTol) break;
    }

    // IRLS working response on the current linearization.
    double irls_w_total = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      const double v = std::max(prob[r] * (1.0 - prob[r]), 1e-12);
      irls_w[r] = d.weight(r) * v;
      irls_w_total += irls_w[r];
      z[r] = eta[r] + (d.y[r] - prob[r]) / v;
    }
    // lasso_cd normalizes by its own weight total; rescale the penalty so the
    // composite objective stays mean-NLL + l1_penalty * |beta|_1.
    LinearFit next =
        l1_penalty <= 0.0
            ? solve_wls(d, irls_w, z)
            : lasso_cd(d, irls_w, z, l1_penalty * w_total / irls_w_total, fit);

    double step = std::abs(next.intercept - fit.intercept);
    for (std::size_t c = 0; c < p; ++c)
      step = std::max(step, std::abs(next.coef[c] - fit.coef[c]));
    fit = std::move(next);
    for (std::size_t r = 0; r < n; ++r) eta[r] = fit.linear_value(d.row(r), p);
    if (l1_penalty > 0.0 && step < 1e-9) break;
  }
  return fit;
}

nlohmann::json LinearFit::to_json() const {
  return {{"intercept", intercept}, {"coef", coef}};
}

LinearFit LinearFit::from_json(const nlohmann::json& j) {
  LinearFit f;
  f.intercept = j.at("intercept").get<double>();
  f.coef = j.at("coef").get<std::vector<double>>();
  return f;
}

}  // namespace cdrtarget::learn
