#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coinduel::fit {

struct FitResult {
    std::map<std::string, double> params;
    double residual_sum_squares = 0.0;
    bool converged = false;
    int iterations = 0;
    double grad_norm = 0.0;
};

/// Ordinary least squares of log(p) on log(k). params: intercept, slope.
inline FitResult powerlaw_fit(std::span<const std::pair<double, double>> points) {
    if (points.size() < 2) throw std::invalid_argument("powerlaw_fit: need at least 2 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [k, p] : points) {
        if (!(k > 0.0)) throw std::invalid_argument("powerlaw_fit: k must be positive");
        if (!(p > 0.0)) throw std::invalid_argument("powerlaw_fit: probabilities must be positive");
        const double x = std::log(k), y = std::log(p);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(points.size());
    const double det = n * sxx - sx * sx;
    if (det == 0.0) throw std::invalid_argument("powerlaw_fit: all abscissae equal");
    const double slope = (n * sxy - sx * sy) / det;
    const double intercept = (sy - slope * sx) / n;
    FitResult out;
    out.params["intercept"] = intercept;
    out.params["slope"] = slope;
    double rss = 0;
    for (const auto& [k, p] : points) {
        const double r = intercept + slope * std::log(k) - std::log(p);
        rss += r * r;
    }
    out.residual_sum_squares = rss;
    out.converged = true;
    out.iterations = 0;
    out.grad_norm = 0.0;
    return out;
}

inline double powerlaw_predict(const FitResult& fit, double k) {
    return std::exp(fit.params.at("intercept")) * std::pow(k, fit.params.at("slope"));
}

inline double gompertz_eval(double L, double g, double lambda0, double lambda) {
    const double e = -g * std::exp(-lambda0 * lambda);
    return L * std::exp(std::clamp(e, -700.0, 700.0));
}

namespace detail {

/// Solve the damped 3x3 normal equations (A + mu*diag(A)) x = b in place.
/// Returns false when the pivot degenerates.
inline bool solve3(double A[3][3], const double b[3], double mu, double x[3]) {
    double m[3][4];
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) m[i][j] = A[i][j];
        m[i][i] *= 1.0 + mu;
        m[i][i] += 1e-300;  // keep an exactly-zero diagonal factorable
        m[i][3] = b[i];
    }
    for (int c = 0; c < 3; ++c) {
        int piv = c;
        for (int r = c + 1; r < 3; ++r)
            if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
        if (m[piv][c] == 0.0) return false;
        std::swap(m[c], m[piv]);
        for (int r = 0; r < 3; ++r) {
            if (r == c) continue;
            const double f = m[r][c] / m[c][c];
            for (int cc = c; cc < 4; ++cc) m[r][cc] -= f * m[c][cc];
        }
    }
    for (int i = 0; i < 3; ++i) x[i] = m[i][3] / m[i][i];
    return std::isfinite(x[0]) && std::isfinite(x[1]) && std::isfinite(x[2]);
}

}  // namespace detail

/// Nonlinear least squares of the Gompertz curve L * exp(-g * exp(-l0 * x))
/// by damped Gauss-Newton (Levenberg-Marquardt). Initialization: L from the
/// largest y, g from inverting the model at the smallest x with l0 = 1.
/// Converged when the accepted parameter step drops below 1e-9; gives up
/// (converged = false) after 500 iterations. params: L, g, lambda0.
inline FitResult gompertz_fit(std::span<const std::pair<double, double>> points) {
    if (points.size() < 4) throw std::invalid_argument("gompertz_fit: need at least 4 points");

    std::size_t i_min = 0;
    double y_max = points[0].second;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].first < points[i_min].first) i_min = i;
        y_max = std::max(y_max, points[i].second);
    }
    double L = std::max(y_max, 1e-12);
    const double ratio = std::clamp(points[i_min].second / L, 1e-12, 1.0);
    double g = -std::log(ratio) * std::exp(points[i_min].first);
    double l0 = 1.0;

    auto rss_of = [&](double pL, double pg, double pl0) {
        double s = 0;
        for (const auto& [x, y] : points) {
            const double r = gompertz_eval(pL, pg, pl0, x) - y;
            s += r * r;
        }
        return s;
    };

    double rss = rss_of(L, g, l0);
    double mu = 1e-3;
    FitResult out;
    int it = 0;
    bool converged = false;
    for (; it < 500; ++it) {
        double JTJ[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
        double JTr[3] = {0, 0, 0};
        for (const auto& [x, y] : points) {
            const double E = std::exp(std::clamp(-l0 * x, -700.0, 700.0));
            const double F = std::exp(std::clamp(-g * E, -700.0, 700.0));
            const double r = L * F - y;
            const double d[3] = {F, -L * E * F, L * g * x * E * F};
            for (int a = 0; a < 3; ++a) {
                JTr[a] += d[a] * r;
                for (int b = 0; b < 3; ++b) JTJ[a][b] += d[a] * d[b];
            }
        }
        const double neg[3] = {-JTr[0], -JTr[1], -JTr[2]};
        double step[3];
        if (!detail::solve3(JTJ, neg, mu, step)) break;
        const double step_norm =
            std::sqrt(step[0] * step[0] + step[1] * step[1] + step[2] * step[2]);
        if (step_norm < 1e-9) {
            converged = true;
            break;
        }
        const double nL = L + step[0], ng = g + step[1], nl0 = l0 + step[2];
        const double nrss = rss_of(nL, ng, nl0);
        if (std::isfinite(nrss) && nrss < rss) {
            L = nL;
            g = ng;
            l0 = nl0;
            rss = nrss;
            mu = std::max(mu / 3.0, 1e-12);
        } else {
            mu *= 3.0;
            if (mu > 1e12) break;
        }
    }

    double grad[3] = {0, 0, 0};
    for (const auto& [x, y] : points) {
        const double E = std::exp(std::clamp(-l0 * x, -700.0, 700.0));
        const double F = std::exp(std::clamp(-g * E, -700.0, 700.0));
        const double r = L * F - y;
        grad[0] += F * r;
        grad[1] += -L * E * F * r;
        grad[2] += L * g * x * E * F * r;
    }

    out.params["L"] = L;
    out.params["g"] = g;
    out.params["lambda0"] = l0;
    out.residual_sum_squares = rss;
    out.converged = converged;
    out.iterations = it;
    out.grad_norm = std::sqrt(grad[0] * grad[0] + grad[1] * grad[1] + grad[2] * grad[2]);
    return out;
}

/// Sample Pearson correlation; both sequences must be non-constant.
inline double pearson(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("pearson: length mismatch");
    if (xs.size() < 2) throw std::invalid_argument("pearson: need at least 2 points");
    const double n = static_cast<double>(xs.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx, dy = ys[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) throw std::invalid_argument("pearson: constant input sequence");
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace coinduel::fit
