#include "qms/hermitian_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qms {

namespace {

double off_diagonal_norm(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (r != c) s += a[static_cast<std::size_t>(r) * n + c] * a[static_cast<std::size_t>(r) * n + c];
    return std::sqrt(s);
}

cdouble cinner(const std::vector<cdouble>& a, const std::vector<cdouble>& b) {
    cdouble s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

double cnorm(const std::vector<cdouble>& a) {
    double s = 0.0;
    for (const auto& z : a) s += std::norm(z);
    return std::sqrt(s);
}

}  // namespace

void jacobi_real_symmetric(std::vector<double>& a, int n, std::vector<double>& values,
                           std::vector<std::vector<double>>* vectors) {
    auto at = [&](int r, int c) -> double& { return a[static_cast<std::size_t>(r) * n + c]; };

    std::vector<std::vector<double>> v;
    if (vectors) {
        v.assign(n, std::vector<double>(n, 0.0));
        for (int i = 0; i < n; ++i) v[i][i] = 1.0;  // v[k] is the k-th column
    }

    double scale = 0.0;
    for (const double x : a) scale += x * x;
    scale = std::sqrt(scale);
    const double stop = 1e-14 * std::max(1.0, scale);

    const int max_sweeps = 64;
    int sweep = 0;
    while (off_diagonal_norm(a, n) > stop) {
        if (++sweep > max_sweeps) throw std::runtime_error("jacobi: failed to converge");
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (std::abs(apq) <= stop / (static_cast<double>(n) * n)) continue;
                const double tau = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
                if (vectors) {
                    for (int k = 0; k < n; ++k) {
                        const double vkp = v[p][k], vkq = v[q][k];
                        v[p][k] = c * vkp - s * vkq;
                        v[q][k] = s * vkp + c * vkq;
                    }
                }
            }
        }
    }

    values.resize(n);
    for (int i = 0; i < n; ++i) values[i] = at(i, i);
    if (vectors) *vectors = std::move(v);
}

namespace {

// Real symmetric embedding of a Hermitian matrix: [[Re H, -Im H], [Im H, Re H]].
// Each eigenvalue of H shows up twice; the 2m-dimensional real eigenspace of a
// doubled eigenvalue maps onto the m-dimensional complex one via
// (u; v) -> u + iv.
std::vector<double> embed(const ComplexMatrix& h) {
    const int n = h.dim();
    std::vector<double> m(static_cast<std::size_t>(2 * n) * (2 * n), 0.0);
    auto at = [&](int r, int c) -> double& { return m[static_cast<std::size_t>(r) * 2 * n + c]; };
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            // Symmetrize to wash out roundoff in the input.
            const cdouble z = 0.5 * (h(r, c) + std::conj(h(c, r)));
            at(r, c) = z.real();
            at(n + r, n + c) = z.real();
            at(r, n + c) = -z.imag();
            at(n + r, c) = z.imag();
        }
    return m;
}

}  // namespace

EigenDecomposition eigendecompose_hermitian(const ComplexMatrix& h, double hermiticity_tol) {
    const double herm_err = h.hermiticity_error();
    if (herm_err > hermiticity_tol) {
        std::ostringstream msg;
        msg << "eigendecompose_hermitian: matrix is not Hermitian, worst |a_ij - conj(a_ji)| = "
            << herm_err << " exceeds tolerance " << hermiticity_tol;
        throw std::invalid_argument(msg.str());
    }

    const int n = h.dim();
    std::vector<double> m = embed(h);
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;
    jacobi_real_symmetric(m, 2 * n, values, &vectors);

    std::vector<int> order(2 * n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return values[i] > values[j]; });

    const double cluster_tol = 1e-11 * std::max(1.0, h.max_abs());

    EigenDecomposition out;
    int pos = 0;
    while (pos < 2 * n) {
        int end = pos + 1;
        while (end < 2 * n && values[order[end - 1]] - values[order[end]] <= cluster_tol) ++end;
        if ((end - pos) % 2 != 0 && end < 2 * n) ++end;  // doubled spectrum: clusters are even
        const int count = end - pos;
        const int want = count / 2;

        double mean = 0.0;
        for (int i = pos; i < end; ++i) mean += values[order[i]];
        mean /= count;

        // Candidates: real eigenvectors of the cluster read as complex vectors.
        std::vector<std::vector<cdouble>> cand;
        cand.reserve(count);
        for (int i = pos; i < end; ++i) {
            const auto& w = vectors[order[i]];
            std::vector<cdouble> z(n);
            for (int k = 0; k < n; ++k) z[k] = cdouble{w[k], w[n + k]};
            cand.push_back(std::move(z));
        }

        // Greedy complex Gram-Schmidt: each round keeps the candidate with the
        // largest residual, which is bounded away from zero by dimension count.
        std::vector<std::vector<cdouble>> accepted;
        for (int round = 0; round < want; ++round) {
            double best_norm = -1.0;
            std::vector<cdouble> best;
            for (const auto& z : cand) {
                std::vector<cdouble> r = z;
                for (const auto& acc : accepted) {
                    const cdouble proj = cinner(acc, r);
                    for (int k = 0; k < n; ++k) r[k] -= proj * acc[k];
                }
                const double nr = cnorm(r);
                if (nr > best_norm) {
                    best_norm = nr;
                    best = std::move(r);
                }
            }
            if (best_norm < 1e-6) throw std::runtime_error("eigendecompose_hermitian: eigenvector extraction failed");
            for (auto& z : best) z /= best_norm;
            accepted.push_back(std::move(best));
        }

        for (auto& z : accepted) {
            out.eigenvalues.push_back(mean);
            out.eigenvectors.push_back(std::move(z));
        }
        pos = end;
    }

    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h, double hermiticity_tol) {
    const double herm_err = h.hermiticity_error();
    if (herm_err > hermiticity_tol)
        throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian");
    const int n = h.dim();
    std::vector<double> m = embed(h);
    std::vector<double> values;
    jacobi_real_symmetric(m, 2 * n, values, nullptr);
    std::sort(values.begin(), values.end(), std::greater<>());
    // Doubled spectrum: keep one of each pair.
    std::vector<double> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.push_back(0.5 * (values[2 * i] + values[2 * i + 1]));
    return out;
}

double lambda_max(const ComplexMatrix& hermitian) { return hermitian_eigenvalues(hermitian).front(); }

double lambda_min(const ComplexMatrix& hermitian) { return hermitian_eigenvalues(hermitian).back(); }

}  // namespace qms
