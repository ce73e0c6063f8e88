#include "spinring/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spinring {

const LinalgConfig& default_linalg_config() {
    static const LinalgConfig cfg{};
    return cfg;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, const LinalgConfig& cfg) {
    const std::size_t na = a.dim(), nb = b.dim();
    if (na * nb > cfg.max_dim) {
        std::ostringstream msg;
        msg << "kron: result dimension " << na * nb << " exceeds size limit " << cfg.max_dim;
        throw std::length_error(msg.str());
    }
    ComplexMatrix out(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex(0.0, 0.0)) continue;
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l)
                    out(i * nb + k, j * nb + l) = aij * b(k, l);
        }
    return out;
}

namespace {

double offdiag_norm(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s += std::norm(a(i, j));
    return std::sqrt(2.0 * s);
}

// Cyclic Jacobi rotations; A is overwritten with (nearly) diagonal form,
// V accumulates the unitary so that input = V diag V†.
void jacobi_diagonalize(ComplexMatrix& a, ComplexMatrix& v, const LinalgConfig& cfg) {
    const std::size_t n = a.dim();
    v = ComplexMatrix::identity(n);
    const double fnorm = a.frobenius_norm();
    if (fnorm == 0.0) return;
    const double threshold = cfg.jacobi_rel_threshold * fnorm;
    const double skip = threshold / (10.0 * static_cast<double>(n));

    for (int sweep = 0; sweep < cfg.jacobi_sweep_cap; ++sweep) {
        if (offdiag_norm(a) <= threshold) return;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double r = std::abs(apq);
                if (r <= skip) continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const Complex phase = apq / r;
                const Complex phase_conj = std::conj(phase);

                const double tau = (aqq - app) / (2.0 * r);
                const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                              : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // Unitary on the (p,q) plane:
                //   G[p][p]=c, G[p][q]=s, G[q][p]=-s*conj(phase), G[q][q]=c*conj(phase)
                // applied as A <- G† A G, V <- V G.
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex ap = a(k, p), aq = a(k, q);
                    a(k, p) = c * ap - s * phase_conj * aq;
                    a(k, q) = s * ap + c * phase_conj * aq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex rp = a(p, k), rq = a(q, k);
                    a(p, k) = c * rp - s * phase * rq;
                    a(q, k) = s * rp + c * phase * rq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vp = v(k, p), vq = v(k, q);
                    v(k, p) = c * vp - s * phase_conj * vq;
                    v(k, q) = s * vp + c * phase_conj * vq;
                }
                a(p, q) = Complex(0.0, 0.0);
                a(q, p) = Complex(0.0, 0.0);
                a(p, p) = Complex(a(p, p).real(), 0.0);
                a(q, q) = Complex(a(q, q).real(), 0.0);
            }
        }
    }
    if (offdiag_norm(a) > threshold) {
        std::ostringstream msg;
        msg << "eigh: Jacobi sweeps did not converge after " << cfg.jacobi_sweep_cap
            << " sweeps; off-diagonal residual " << offdiag_norm(a) << " (threshold " << threshold
            << ")";
        throw std::runtime_error(msg.str());
    }
}

// Householder reduction of a Hermitian matrix to real symmetric tridiagonal
// form, followed by implicit-shift QL with accumulated transforms. Used for
// dimensions where Jacobi sweeps get too expensive.
void tridiagonal_diagonalize(ComplexMatrix a, std::vector<double>& d, ComplexMatrix& v,
                             const LinalgConfig& cfg) {
    const std::size_t n = a.dim();
    std::vector<std::vector<Complex>> hv(n);  // Householder vectors per step
    std::vector<double> hsigma(n, 0.0);       // 2/|v|^2 per step

    for (std::size_t k = 0; k + 2 < n; ++k) {
        const std::size_t m = n - k - 1;  // length of the column below the diagonal
        double normx2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) normx2 += std::norm(a(i, k));
        const double normx = std::sqrt(normx2);
        if (normx == 0.0) continue;

        const Complex x0 = a(k + 1, k);
        const double ax0 = std::abs(x0);
        const Complex ph = (ax0 == 0.0) ? Complex(1.0, 0.0) : x0 / ax0;
        const Complex beta = -ph * normx;

        std::vector<Complex> hvk(m);
        hvk[0] = x0 - beta;
        for (std::size_t i = 1; i < m; ++i) hvk[i] = a(k + 1 + i, k);
        const double vn2 = 2.0 * normx * (normx + ax0);
        if (vn2 == 0.0) continue;
        const double sigma = 2.0 / vn2;

        // Rank-2 update of the trailing block B = A[k+1.., k+1..]:
        //   p = sigma B v; w = p - (sigma/2)(v†p) v; B -= v w† + w v†
        std::vector<Complex> p(m, Complex(0.0, 0.0));
        for (std::size_t i = 0; i < m; ++i) {
            const Complex* row = a.row(k + 1 + i) + (k + 1);
            Complex acc(0.0, 0.0);
            for (std::size_t j = 0; j < m; ++j) acc += row[j] * hvk[j];
            p[i] = sigma * acc;
        }
        Complex vp(0.0, 0.0);
        for (std::size_t i = 0; i < m; ++i) vp += std::conj(hvk[i]) * p[i];
        const double kcoef = 0.5 * sigma * vp.real();
        std::vector<Complex> w(m);
        for (std::size_t i = 0; i < m; ++i) w[i] = p[i] - kcoef * hvk[i];
        for (std::size_t i = 0; i < m; ++i) {
            Complex* row = a.row(k + 1 + i) + (k + 1);
            const Complex vi = hvk[i], wi = w[i];
            for (std::size_t j = 0; j < m; ++j)
                row[j] -= vi * std::conj(w[j]) + wi * std::conj(hvk[j]);
        }

        a(k + 1, k) = beta;
        a(k, k + 1) = std::conj(beta);
        for (std::size_t i = k + 2; i < n; ++i) {
            a(i, k) = Complex(0.0, 0.0);
            a(k, i) = Complex(0.0, 0.0);
        }
        hv[k] = std::move(hvk);
        hsigma[k] = sigma;
    }

    d.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i).real();
    std::vector<Complex> esub(n, Complex(0.0, 0.0));
    for (std::size_t i = 0; i + 1 < n; ++i) esub[i] = a(i + 1, i);

    // Phase similarity making the subdiagonal real non-negative.
    std::vector<Complex> delta(n, Complex(1.0, 0.0));
    std::vector<double> e(n, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double ae = std::abs(esub[i]);
        e[i] = ae;
        delta[i + 1] = (ae == 0.0) ? delta[i] : esub[i] * delta[i] / ae;
    }

    // Q = H_0 H_1 ... H_{n-3} diag(delta); nonzero pattern grows from the
    // bottom-right corner, so column loops start at k+1.
    ComplexMatrix q(n);
    for (std::size_t i = 0; i < n; ++i) q(i, i) = delta[i];
    for (std::size_t k = n; k-- > 0;) {
        if (hv[k].empty()) continue;
        const std::size_t m = hv[k].size();
        const double sigma = hsigma[k];
        std::vector<Complex> t(n - k - 1, Complex(0.0, 0.0));
        for (std::size_t i = 0; i < m; ++i) {
            const Complex cv = std::conj(hv[k][i]);
            const Complex* row = q.row(k + 1 + i) + (k + 1);
            for (std::size_t j = 0; j < n - k - 1; ++j) t[j] += cv * row[j];
        }
        for (std::size_t i = 0; i < m; ++i) {
            const Complex sv = sigma * hv[k][i];
            Complex* row = q.row(k + 1 + i) + (k + 1);
            for (std::size_t j = 0; j < n - k - 1; ++j) row[j] -= sv * t[j];
        }
    }

    // Row-major transpose: zt rows are eigenvector candidates, so the QL
    // plane rotations touch contiguous memory.
    ComplexMatrix zt = q.transpose();

    const double eps = std::numeric_limits<double>::epsilon();
    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
            }
            if (m != l) {
                if (iter++ == cfg.ql_iteration_cap) {
                    std::ostringstream msg;
                    msg << "eigh: QL iteration did not converge after " << cfg.ql_iteration_cap
                        << " iterations; residual subdiagonal " << std::abs(e[l]);
                    throw std::runtime_error(msg.str());
                }
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                std::size_t i = m;
                while (i-- > l) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    Complex* ri = zt.row(i);
                    Complex* ri1 = zt.row(i + 1);
                    for (std::size_t idx = 0; idx < n; ++idx) {
                        const Complex fz = ri1[idx];
                        ri1[idx] = s * ri[idx] + c * fz;
                        ri[idx] = c * ri[idx] - s * fz;
                    }
                }
                if (underflow) continue;  // split off a converged block, restart the scan
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }

    v = zt.transpose();
}

void sort_ascending(std::vector<double>& d, ComplexMatrix& v) {
    const std::size_t n = d.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&d](std::size_t x, std::size_t y) { return d[x] < d[y]; });
    std::vector<double> ds(n);
    ComplexMatrix vs(n);
    for (std::size_t c = 0; c < n; ++c) {
        ds[c] = d[perm[c]];
        for (std::size_t r = 0; r < n; ++r) vs(r, c) = v(r, perm[c]);
    }
    d = std::move(ds);
    v = std::move(vs);
}

}  // namespace

EigenDecomposition eigh(const ComplexMatrix& m, const LinalgConfig& cfg) {
    if (!m.is_finite()) throw std::invalid_argument("eigh: matrix has non-finite entries");
    const double herr = m.hermiticity_error();
    if (herr > cfg.hermiticity_tol) {
        std::ostringstream msg;
        msg << "eigh: matrix is not Hermitian; max |M - M†| = " << herr << " exceeds tolerance "
            << cfg.hermiticity_tol;
        throw std::invalid_argument(msg.str());
    }

    ComplexMatrix a = m.hermitized();
    const std::size_t n = a.dim();
    EigenDecomposition out;
    if (n == 1) {
        out.eigenvalues = {a(0, 0).real()};
        out.eigenvectors = ComplexMatrix::identity(1);
        return out;
    }

    ComplexMatrix v(n);
    std::vector<double> d;
    if (n <= cfg.jacobi_dim_limit) {
        jacobi_diagonalize(a, v, cfg);
        d.resize(n);
        for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i).real();
    } else {
        tridiagonal_diagonalize(a, d, v, cfg);
    }
    sort_ascending(d, v);
    out.eigenvalues = std::move(d);
    out.eigenvectors = std::move(v);
    return out;
}

ComplexMatrix func_of_hermitian(const ComplexMatrix& m, const std::function<double(double)>& f,
                                const LinalgConfig& cfg) {
    const EigenDecomposition ed = eigh(m, cfg);
    const std::size_t n = m.dim();
    std::vector<double> fx(n);
    for (std::size_t i = 0; i < n; ++i) {
        fx[i] = f(ed.eigenvalues[i]);
        if (!std::isfinite(fx[i])) {
            std::ostringstream msg;
            msg << "func_of_hermitian: function is non-finite at eigenvalue "
                << ed.eigenvalues[i];
            throw std::domain_error(msg.str());
        }
    }
    const ComplexMatrix& v = ed.eigenvectors;
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Complex acc(0.0, 0.0);
            for (std::size_t k = 0; k < n; ++k) acc += v(i, k) * fx[k] * std::conj(v(j, k));
            out(i, j) = acc;
            out(j, i) = std::conj(acc);
        }
        out(i, i) = Complex(out(i, i).real(), 0.0);
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const std::vector<int>& keep, int n_sites) {
    if (n_sites < 1 || n_sites > 10)
        throw std::invalid_argument("partial_trace: n_sites must be in [1, 10]");
    const std::size_t full_dim = std::size_t(1) << n_sites;
    if (rho.dim() != full_dim)
        throw std::invalid_argument("partial_trace: matrix dimension does not equal 2^n_sites");
    if (keep.empty()) throw std::invalid_argument("partial_trace: keep set must be nonempty");
    for (std::size_t j = 0; j < keep.size(); ++j) {
        if (keep[j] < 0 || keep[j] >= n_sites)
            throw std::invalid_argument("partial_trace: site index out of range");
        if (j > 0 && keep[j] <= keep[j - 1])
            throw std::invalid_argument("partial_trace: keep set must be strictly increasing");
    }

    const std::size_t nk = keep.size();
    const std::size_t nt = static_cast<std::size_t>(n_sites) - nk;
    std::vector<int> traced;
    traced.reserve(nt);
    for (int s = 0; s < n_sites; ++s)
        if (std::find(keep.begin(), keep.end(), s) == keep.end()) traced.push_back(s);

    // Site s occupies bit position n_sites-1-s (site 0 = most significant).
    const auto bitpos = [n_sites](int site) { return n_sites - 1 - site; };

    const std::size_t red_dim = std::size_t(1) << nk;
    const std::size_t env_dim = std::size_t(1) << nt;
    std::vector<std::size_t> expand_keep(red_dim, 0);
    for (std::size_t r = 0; r < red_dim; ++r)
        for (std::size_t j = 0; j < nk; ++j)
            if ((r >> (nk - 1 - j)) & 1) expand_keep[r] |= std::size_t(1) << bitpos(keep[j]);
    std::vector<std::size_t> expand_env(env_dim, 0);
    for (std::size_t e = 0; e < env_dim; ++e)
        for (std::size_t j = 0; j < nt; ++j)
            if ((e >> (nt - 1 - j)) & 1) expand_env[e] |= std::size_t(1) << bitpos(traced[j]);

    ComplexMatrix out(red_dim);
    for (std::size_t r = 0; r < red_dim; ++r)
        for (std::size_t c = 0; c < red_dim; ++c) {
            Complex acc(0.0, 0.0);
            for (std::size_t e = 0; e < env_dim; ++e)
                acc += rho(expand_keep[r] | expand_env[e], expand_keep[c] | expand_env[e]);
            out(r, c) = acc;
        }
    return out;
}

}  // namespace spinring
