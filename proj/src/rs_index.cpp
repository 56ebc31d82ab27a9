#include "sbl/rs_index.hpp"
#include <cmath>
#include <stdexcept>
#include <vector>

namespace sbl {

namespace {

using Eigen::Matrix2d;
using Eigen::Vector2d;

Matrix2d Jmat() {
    Matrix2d J;
    J << 0, -1, 1, 0;
    return J;
}

Matrix2d path_deriv(const std::function<Matrix2d(double)>& P, double t) {
    double h = 1e-6;
    double lo = std::max(0.0, t - h), hi = std::min(1.0, t + h);
    return (P(hi) - P(lo)) / (hi - lo);
}

// Signature of the crossing form at time t on ker(P(t) - I).
int crossing_signature(const std::function<Matrix2d(double)>& P, double t) {
    Matrix2d Pt = P(t);
    Matrix2d D = Pt - Matrix2d::Identity();
    Matrix2d Pd = path_deriv(P, t);
    Matrix2d B = Jmat().transpose() * Pd; // bilinear form omega(u, P' v)
    Matrix2d S = 0.5 * (B + B.transpose());
    double scale = std::max(1.0, S.cwiseAbs().maxCoeff());

    Eigen::JacobiSVD<Matrix2d> svd(D, Eigen::ComputeFullV);
    double smax = svd.singularValues()(0);
    double ker_tol = 1e-5 * std::max(1.0, smax);
    int kdim = 0;
    for (int i = 0; i < 2; ++i)
        if (svd.singularValues()(i) <= ker_tol) ++kdim;
    if (kdim == 0) return 0;
    if (kdim == 2) {
        Eigen::SelfAdjointEigenSolver<Matrix2d> es(S);
        int sig = 0;
        for (int i = 0; i < 2; ++i) {
            double l = es.eigenvalues()(i);
            if (l > 1e-9 * scale) ++sig;
            else if (l < -1e-9 * scale) --sig;
        }
        return sig;
    }
    Vector2d v = svd.matrixV().col(1); // smallest singular value
    double q = v.dot(S * v);
    if (q > 1e-9 * scale) return 1;
    if (q < -1e-9 * scale) return -1;
    return 0;
}

} // namespace

double rs_index(const std::function<Matrix2d(double)>& path, int samples) {
    if (samples < 16) samples = 16;
    {
        Matrix2d P0 = path(0.0);
        if ((P0 - Matrix2d::Identity()).cwiseAbs().maxCoeff() > 1e-9)
            throw std::invalid_argument("rs_index: path must start at the identity");
    }
    std::vector<double> ts(samples + 1), g(samples + 1);
    double gmax = 0;
    for (int i = 0; i <= samples; ++i) {
        double t = double(i) / samples;
        Matrix2d P = path(t);
        if (std::abs(P.determinant() - 1.0) > 1e-6)
            throw std::invalid_argument("rs_index: path is not symplectic");
        ts[i] = t;
        g[i] = 2.0 - P.trace(); // det(P - I) for det P = 1
        gmax = std::max(gmax, std::abs(g[i]));
    }
    double eps = 1e-8 * std::max(1.0, gmax);

    std::vector<double> crossings;
    // Sign-change roots (transversal hyperbolic/elliptic crossings).
    for (int i = 0; i < samples; ++i) {
        if (g[i] == 0.0 || g[i] * g[i + 1] >= 0) continue;
        double a = ts[i], b = ts[i + 1], ga = g[i];
        for (int it = 0; it < 80; ++it) {
            double m = 0.5 * (a + b);
            double gm = 2.0 - path(m).trace();
            if (gm == 0.0) { a = b = m; break; }
            if ((gm > 0) == (ga > 0)) { a = m; ga = gm; }
            else b = m;
        }
        crossings.push_back(0.5 * (a + b));
    }
    // Tangential touches (e.g. full rotations through the identity).
    for (int i = 1; i < samples; ++i) {
        if (!(g[i] <= g[i - 1] && g[i] <= g[i + 1])) continue;
        if (std::abs(g[i]) > 1e-3 * std::max(1.0, gmax) && std::abs(g[i]) > 1e-6)
            continue;
        double a = ts[i - 1], b = ts[i + 1];
        const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
        double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
        double f1 = std::abs(2.0 - path(x1).trace());
        double f2 = std::abs(2.0 - path(x2).trace());
        for (int it = 0; it < 100; ++it) {
            if (f1 < f2) {
                b = x2; x2 = x1; f2 = f1;
                x1 = b - phi * (b - a);
                f1 = std::abs(2.0 - path(x1).trace());
            } else {
                a = x1; x1 = x2; f1 = f2;
                x2 = a + phi * (b - a);
                f2 = std::abs(2.0 - path(x2).trace());
            }
        }
        double t = 0.5 * (a + b);
        if (std::abs(2.0 - path(t).trace()) <= std::max(eps, 1e-10))
            crossings.push_back(t);
    }

    std::sort(crossings.begin(), crossings.end());
    std::vector<double> interior;
    for (double t : crossings) {
        if (t < 1e-6 || t > 1.0 - 1e-6) continue;
        if (!interior.empty() && t - interior.back() < 1e-6) continue;
        interior.push_back(t);
    }

    double idx = 0.5 * crossing_signature(path, 0.0); // P(0) = I always crosses
    for (double t : interior) idx += crossing_signature(path, t);
    if (std::abs(g[samples]) <= std::max(eps, 1e-10))
        idx += 0.5 * crossing_signature(path, 1.0);
    return idx;
}

} // namespace sbl
