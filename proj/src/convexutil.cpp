#include "ballpoly/convexutil.hpp"

#include <limits>
#include <numeric>

namespace ballpoly::convexutil {

namespace {

// Projection of the origin onto the affine hull of pts[idx]; returns false
// when the subset is affinely dependent.
bool affine_projection(std::span<const Vec> pts, const std::vector<int>& idx,
                       Vec& point, std::vector<double>& lambda) {
    const int k = static_cast<int>(idx.size()) - 1;
    const Vec& p0 = pts[idx[0]];
    lambda.assign(idx.size(), 0.0);
    if (k == 0) {
        point = p0;
        lambda[0] = 1.0;
        return true;
    }
    Mat D(p0.size(), k);
    for (int i = 0; i < k; ++i) D.col(i) = pts[idx[i + 1]] - p0;
    Mat G = D.transpose() * D;
    Eigen::FullPivLU<Mat> lu(G);
    lu.setThreshold(1e-12);
    if (lu.rank() < k) return false;
    Eigen::VectorXd mu = lu.solve(-D.transpose() * p0);
    point = p0 + D * mu;
    double s = 0.0;
    for (int i = 0; i < k; ++i) {
        lambda[i + 1] = mu(i);
        s += mu(i);
    }
    lambda[0] = 1.0 - s;
    return true;
}

}  // namespace

MinNormPoint min_norm_point(std::span<const Vec> pts) {
    if (pts.empty()) throw std::invalid_argument("min_norm_point: empty set");
    const int n = static_cast<int>(pts[0].size());
    const int N = static_cast<int>(pts.size());
    const int maxk = std::min(N, n + 1);

    MinNormPoint best;
    double best_norm = std::numeric_limits<double>::infinity();
    std::vector<double> lambda;
    Vec point;

    for (int k = 1; k <= maxk; ++k) {
        std::vector<int> comb(k);
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            if (affine_projection(pts, comb, point, lambda)) {
                bool nonneg = true;
                for (double l : lambda)
                    if (l < -1e-10) { nonneg = false; break; }
                if (nonneg && point.norm() < best_norm) {
                    best_norm = point.norm();
                    best.point = point;
                    best.coeffs.assign(N, 0.0);
                    for (size_t i = 0; i < comb.size(); ++i)
                        best.coeffs[comb[i]] = lambda[i];
                }
            }
            int i = k - 1;
            while (i >= 0 && comb[i] == N - k + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    if (!std::isfinite(best_norm))
        throw std::runtime_error("min_norm_point: no valid support subset");
    return best;
}

bool in_convex_hull(std::span<const Vec> pts, const Vec& q, double tol) {
    std::vector<Vec> shifted;
    shifted.reserve(pts.size());
    for (const Vec& p : pts) shifted.push_back(p - q);
    return min_norm_point(shifted).point.norm() <= tol;
}

}  // namespace ballpoly::convexutil
