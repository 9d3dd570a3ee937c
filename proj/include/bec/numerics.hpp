#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace bec::num {

// Raised when an algorithm fails numerically (non-convergence, non-finite
// values). Distinct from std::invalid_argument, which flags contract misuse.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense real symmetric matrix. Only the lower triangle is stored, so the
// symmetry invariant holds by construction.
class SymmetricMatrix {
  public:
    explicit SymmetricMatrix(int dim);

    int dim() const { return dim_; }
    double operator()(int i, int j) const { return tri_[index(i, j)]; }
    // Sets the (i,j) and (j,i) entries at once.
    void set(int i, int j, double value) { tri_[index(i, j)] = value; }
    void add(int i, int j, double value) { tri_[index(i, j)] += value; }

    // Max absolute row sum.
    double inf_norm() const;
    double trace() const;

  private:
    std::size_t index(int i, int j) const;

    int dim_;
    std::vector<double> tri_;  // row-major lower triangle
};

// Result of eigh(). values ascending; column k of vectors pairs with
// values[k]; columns orthonormal. Sign convention: the largest-magnitude
// component of each column is positive.
struct EigenDecomposition {
    int dim = 0;
    std::vector<double> values;
    std::vector<double> vectors;  // row-major dim x dim, eigenvectors as columns

    double vec(int row, int col) const { return vectors[static_cast<std::size_t>(row) * dim + col]; }
};

// Dense symmetric eigensolver: Householder tridiagonalization followed by
// implicit-shift QL. Deterministic for identical input.
EigenDecomposition eigh(const SymmetricMatrix& a);

struct OdeSpec {
    int dimension = 0;
    std::function<void(double t, const double* y, double* dydt)> rhs;
    double step = 0.0;
    double t_end = 0.0;
};

struct OdeSample {
    double t;
    std::vector<double> y;
};

// Classical fixed-step RK4. The observer sees the state at t=0 and after
// every accepted step; the final step is shortened to land on t_end exactly.
void rk4_scan(const OdeSpec& spec, const std::vector<double>& y0,
              const std::function<void(double t, const double* y)>& observer);

// Same integrator, returning the full time series.
std::vector<OdeSample> integrate_fixed_rk4(const OdeSpec& spec, const std::vector<double>& y0);

// Composite 10-point Gauss-Legendre quadrature of f over
// [-half_width, +half_width] using ceil(n_points/10) panels. n_points >= 8.
double quad(const std::function<double(double)>& f, double half_width, int n_points);

}  // namespace bec::num
