#include "bec/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

namespace bec::num {

SymmetricMatrix::SymmetricMatrix(int dim) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("SymmetricMatrix: dim must be >= 1");
    tri_.assign(static_cast<std::size_t>(dim) * (dim + 1) / 2, 0.0);
}

std::size_t SymmetricMatrix::index(int i, int j) const {
    if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
        throw std::invalid_argument("SymmetricMatrix: index out of range");
    if (i < j) std::swap(i, j);
    return static_cast<std::size_t>(i) * (i + 1) / 2 + j;
}

double SymmetricMatrix::inf_norm() const {
    double worst = 0.0;
    for (int i = 0; i < dim_; ++i) {
        double row = 0.0;
        for (int j = 0; j < dim_; ++j) row += std::fabs((*this)(i, j));
        worst = std::max(worst, row);
    }
    return worst;
}

double SymmetricMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

namespace {

// Householder reduction of z (dense symmetric, row-major) to tridiagonal
// form with the accumulated orthogonal transform left in z. d receives the
// diagonal, e the subdiagonal in e[1..n-1].
void householder_tridiag(std::vector<double>& z, int n, std::vector<double>& d,
                         std::vector<double>& e) {
    auto at = [&](int i, int j) -> double& { return z[static_cast<std::size_t>(i) * n + j]; };

    for (int i = n - 1; i >= 1; --i) {
        int l = i - 1;
        double h = 0.0;
        if (l > 0) {
            double scale = 0.0;
            for (int k = 0; k <= l; ++k) scale += std::fabs(at(i, k));
            if (scale == 0.0) {
                e[i] = at(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    at(i, k) /= scale;
                    h += at(i, k) * at(i, k);
                }
                double f = at(i, l);
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                at(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    at(j, i) = at(i, j) / h;
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
                    for (int k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
                    e[j] = g / h;
                    f += e[j] * at(i, j);
                }
                double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = at(i, j);
                    e[j] = g = e[j] - hh * f;
                    for (int k = 0; k <= j; ++k) at(j, k) -= f * e[k] + g * at(i, k);
                }
            }
        } else {
            e[i] = at(i, l);
        }
        d[i] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;
    for (int i = 0; i < n; ++i) {
        int l = i - 1;
        if (d[i] != 0.0) {
            for (int j = 0; j <= l; ++j) {
                double g = 0.0;
                for (int k = 0; k <= l; ++k) g += at(i, k) * at(k, j);
                for (int k = 0; k <= l; ++k) at(k, j) -= g * at(k, i);
            }
        }
        d[i] = at(i, i);
        at(i, i) = 1.0;
        for (int j = 0; j <= l; ++j) at(j, i) = at(i, j) = 0.0;
    }
}

// Implicit-shift QL on the tridiagonal (d, e), rotations accumulated into
// the columns of z.
void tridiag_ql(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z, int n) {
    constexpr int max_iter = 50;
    const double eps = std::numeric_limits<double>::epsilon();
    auto at = [&](int i, int j) -> double& { return z[static_cast<std::size_t>(i) * n + j]; };

    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= eps * dd) break;
            }
            if (m != l) {
                if (iter++ == max_iter) {
                    char msg[160];
                    std::snprintf(msg, sizeof(msg),
                                  "eigh: QL failed to converge (dim=%d, worst off-diagonal=%.3e)",
                                  n, std::fabs(e[m]));
                    throw numeric_error(msg);
                }
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    for (int k = 0; k < n; ++k) {
                        f = at(k, i + 1);
                        at(k, i + 1) = s * at(k, i) + c * f;
                        at(k, i) = c * at(k, i) - s * f;
                    }
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

}  // namespace

EigenDecomposition eigh(const SymmetricMatrix& a) {
    const int n = a.dim();
    EigenDecomposition out;
    out.dim = n;
    out.values.resize(n);
    out.vectors.resize(static_cast<std::size_t>(n) * n);

    std::vector<double> z(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        const double v = a(i, i);
        if (!std::isfinite(v)) throw std::invalid_argument("eigh: non-finite entry");
        z[static_cast<std::size_t>(i) * n + i] = v;
        for (int j = 0; j < i; ++j) {
            const double w = a(i, j);
            if (!std::isfinite(w)) throw std::invalid_argument("eigh: non-finite entry");
            z[static_cast<std::size_t>(i) * n + j] = w;
            z[static_cast<std::size_t>(j) * n + i] = w;
        }
    }

    std::vector<double> d(n), e(n);
    if (n == 1) {
        d[0] = z[0];
        z[0] = 1.0;
    } else {
        householder_tridiag(z, n, d, e);
        tridiag_ql(d, e, z, n);
    }

    // Ascending sort, columns permuted along.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return d[i] < d[j]; });

    for (int k = 0; k < n; ++k) {
        const int src = order[k];
        out.values[k] = d[src];
        // Deterministic sign: largest-magnitude component positive, first
        // index winning ties.
        int pivot = 0;
        double best = -1.0;
        for (int i = 0; i < n; ++i) {
            const double mag = std::fabs(z[static_cast<std::size_t>(i) * n + src]);
            if (mag > best) {
                best = mag;
                pivot = i;
            }
        }
        const double sign = z[static_cast<std::size_t>(pivot) * n + src] < 0.0 ? -1.0 : 1.0;
        for (int i = 0; i < n; ++i)
            out.vectors[static_cast<std::size_t>(i) * n + k] =
                sign * z[static_cast<std::size_t>(i) * n + src];
    }
    return out;
}

void rk4_scan(const OdeSpec& spec, const std::vector<double>& y0,
              const std::function<void(double t, const double* y)>& observer) {
    const int dim = spec.dimension;
    if (static_cast<int>(y0.size()) != dim)
        throw std::invalid_argument("rk4: initial state length mismatch");
    if (!(spec.step > 0.0) || !(spec.t_end > 0.0))
        throw std::invalid_argument("rk4: step and t_end must be positive");

    std::vector<double> y(y0), k1(dim), k2(dim), k3(dim), k4(dim), work(dim);

    auto deriv = [&](double t, const std::vector<double>& state, std::vector<double>& out) {
        spec.rhs(t, state.data(), out.data());
        for (int i = 0; i < dim; ++i) {
            if (!std::isfinite(out[i])) {
                char msg[160];
                std::snprintf(msg, sizeof(msg),
                              "rk4: non-finite derivative at t=%.17g (y[%d]=%.17g)", t, i,
                              state[i]);
                throw numeric_error(msg);
            }
        }
    };

    double t = 0.0;
    observer(t, y.data());
    while (t < spec.t_end) {
        double h = spec.step;
        if (t + h >= spec.t_end) h = spec.t_end - t;
        if (h <= spec.t_end * 1e-15) break;

        deriv(t, y, k1);
        for (int i = 0; i < dim; ++i) work[i] = y[i] + 0.5 * h * k1[i];
        deriv(t + 0.5 * h, work, k2);
        for (int i = 0; i < dim; ++i) work[i] = y[i] + 0.5 * h * k2[i];
        deriv(t + 0.5 * h, work, k3);
        for (int i = 0; i < dim; ++i) work[i] = y[i] + h * k3[i];
        deriv(t + h, work, k4);
        for (int i = 0; i < dim; ++i)
            y[i] += h / 6.0 * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);

        t = (h == spec.step) ? t + h : spec.t_end;
        observer(t, y.data());
    }
}

std::vector<OdeSample> integrate_fixed_rk4(const OdeSpec& spec, const std::vector<double>& y0) {
    std::vector<OdeSample> series;
    series.reserve(static_cast<std::size_t>(spec.t_end / spec.step) + 2);
    rk4_scan(spec, y0, [&](double t, const double* y) {
        series.push_back({t, std::vector<double>(y, y + spec.dimension)});
    });
    return series;
}

double quad(const std::function<double(double)>& f, double half_width, int n_points) {
    if (n_points < 8) throw std::invalid_argument("quad: n_points must be >= 8");
    if (!(half_width > 0.0)) throw std::invalid_argument("quad: half_width must be positive");

    // 10-point Gauss-Legendre nodes/weights on [-1, 1].
    static const double node[5] = {0.14887433898163121, 0.43339539412924719,
                                   0.67940956829902441, 0.86506336668898451,
                                   0.97390652851717172};
    static const double weight[5] = {0.29552422471475287, 0.26926671930999635,
                                     0.21908636251598204, 0.14945134915058059,
                                     0.066671344308688138};

    const int panels = (n_points + 9) / 10;
    const double width = 2.0 * half_width / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = -half_width + (p + 0.5) * width;
        const double half = 0.5 * width;
        double acc = 0.0;
        for (int k = 0; k < 5; ++k) {
            const double lo = f(mid - half * node[k]);
            const double hi = f(mid + half * node[k]);
            if (!std::isfinite(lo) || !std::isfinite(hi))
                throw numeric_error("quad: non-finite integrand sample");
            acc += weight[k] * (lo + hi);
        }
        total += half * acc;
    }
    return total;
}

}  // namespace bec::num
