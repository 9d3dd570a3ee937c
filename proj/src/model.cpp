#include "bec/model.hpp"

#include <cmath>
#include <stdexcept>

#include "bec/numerics.hpp"

namespace bec::model {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

DerivedParams derive(const ModelParams& params) {
    if (params.N < 2) throw std::invalid_argument("derive: N must be >= 2");
    DerivedParams d;
    d.J = 0.5 * params.N;
    d.OmegaPrime = 2.0 * (2.0 * params.Lambda * (params.N - 1) + 0.5 * params.Omega);
    d.k_small = (params.kappa - params.eta) * (2.0 * d.J - 1.0) / (4.0 * d.J);
    d.n_small = params.eta * (2.0 * d.J - 1.0) / (2.0 * d.J);
    d.R = 2.0 * std::sqrt(d.J);
    return d;
}

RegimeReport validate_regime(const ModelParams& params, double ratio_min) {
    RegimeReport report;
    if (params.N < 2) report.violations.push_back("N < 2");
    if (params.eta * ratio_min > params.kappa)
        report.violations.push_back("eta not dominated by kappa");
    if (params.Lambda * ratio_min > params.kappa)
        report.violations.push_back("Lambda not dominated by kappa");
    if (params.Lambda * ratio_min > params.Omega)
        report.violations.push_back("Lambda not dominated by Omega");
    if (params.eta > 0.0 && params.Lambda > 0.0 && params.eta > params.Lambda)
        report.violations.push_back("eta exceeds Lambda");
    if (params.N >= 2) {
        const DerivedParams d = derive(params);
        if (d.R * d.R * d.n_small >= 0.5 * d.OmegaPrime)
            report.violations.push_back("family-(c) region: R^2 n >= Omega'/2");
    }
    return report;
}

double lambda_from_overlap(double kappa, double eta) {
    if (!(kappa > 0.0)) throw std::invalid_argument("lambda_from_overlap: kappa must be > 0");
    if (eta < 0.0 || eta > kappa)
        throw std::invalid_argument("lambda_from_overlap: need 0 <= eta <= kappa");
    if (eta == 0.0) return 0.0;
    return kappa * std::pow(eta / kappa, 0.75);
}

BifurcationSides bifurcation_sides(const ModelParams& params) {
    const DerivedParams d = derive(params);
    BifurcationSides sides;
    sides.lhs = (params.kappa - 3.0 * params.eta) * (params.N - 1);
    sides.rhs = 2.0 * params.Lambda * (params.N - 1) + 0.5 * params.Omega;

    // Identity check against the R^2(k-n) vs Omega'/2 form. (2J-1) == (N-1),
    // so the two routes must agree to rounding.
    const double lhs_spin = d.R * d.R * (d.k_small - d.n_small);
    const double rhs_spin = 0.5 * d.OmegaPrime;
    const double scale = std::max({1.0, std::fabs(sides.lhs), std::fabs(sides.rhs)});
    if (std::fabs(lhs_spin - sides.lhs) > 1e-12 * scale ||
        std::fabs(rhs_spin - sides.rhs) > 1e-12 * scale)
        throw bec::num::numeric_error("bifurcation_sides: parameter identity check failed");

    sides.bifurcated = sides.lhs > sides.rhs;
    return sides;
}

double critical_kappa(int N, double Omega, double eta, double Lambda) {
    if (N < 2) throw std::invalid_argument("critical_kappa: N must be >= 2");
    return (2.0 * Lambda * (N - 1) + 0.5 * Omega) / (N - 1) + 3.0 * eta;
}

double TrapGeometry::width() const { return 1.0 / std::sqrt(mass * omega_trap); }
double TrapGeometry::barrier_b() const { return mass * omega_trap * omega_trap / 8.0; }
double TrapGeometry::v0() const { return 4.0 * kPi * a_scatter / mass; }
double TrapGeometry::overlap() const {
    const double d = width();
    return std::exp(-q0 * q0 / (d * d));
}

namespace {

// Normalized 1-D Gaussian mode of width d centered at c.
double gauss_mode(double x, double c, double d) {
    const double u = (x - c) / d;
    return std::pow(kPi, -0.25) / std::sqrt(d) * std::exp(-0.5 * u * u);
}

double gauss_mode_deriv(double x, double c, double d) {
    return -(x - c) / (d * d) * gauss_mode(x, c, d);
}

}  // namespace

ModelParams from_trap(const TrapGeometry& trap, int N) {
    if (N < 2) throw std::invalid_argument("from_trap: N must be >= 2");
    if (!(trap.mass > 0.0) || !(trap.omega_trap > 0.0) || !(trap.q0 > 0.0) ||
        !(trap.a_scatter > 0.0))
        throw std::invalid_argument("from_trap: trap fields must be positive");

    const double d = trap.width();
    const double eps = trap.overlap();
    if (eps >= 0.5)
        throw std::invalid_argument("from_trap: wells not well-separated (overlap >= 0.5)");

    const double v0 = trap.v0();
    const double b = trap.barrier_b();
    const double q0 = trap.q0;
    const double m = trap.mass;
    const double w = trap.omega_trap;

    // kappa = (V0/2) Int u^4: Gaussian quartic integral, closed form.
    const double kappa = 0.5 * v0 * std::pow(2.0 * kPi, -1.5) / (d * d * d);
    const double eta = kappa * eps * eps;
    const double Lambda = kappa * std::pow(eps, 1.5);

    // Omega = 2 <u-|H|u+> with H of the quartic-plus-transverse-harmonic
    // well, split into separable 1-D pieces. Truncation keeps Gaussian tails
    // below 1e-20.
    const double hw = q0 + 10.0 * d;
    const int n_points = 400;

    const double kin_x = 0.5 / m * bec::num::quad(
        [&](double x) { return gauss_mode_deriv(x, -q0, d) * gauss_mode_deriv(x, q0, d); }, hw,
        n_points);
    const double pot_x = bec::num::quad(
        [&](double x) {
            const double u = x * x - q0 * q0;
            return gauss_mode(x, -q0, d) * (b / (q0 * q0)) * u * u * gauss_mode(x, q0, d);
        },
        hw, n_points);
    const double ov_x = bec::num::quad(
        [&](double x) { return gauss_mode(x, -q0, d) * gauss_mode(x, q0, d); }, hw, n_points);

    // Transverse factor per axis: <g|p^2/2m + m w^2 y^2 / 2|g> = w/2.
    const double kin_t = 0.5 / m * bec::num::quad(
        [&](double y) { const double g = gauss_mode_deriv(y, 0.0, d); return g * g; }, hw,
        n_points);
    const double pot_t = 0.5 * m * w * w * bec::num::quad(
        [&](double y) { const double g = gauss_mode(y, 0.0, d); return y * y * g * g; }, hw,
        n_points);
    const double transverse = kin_t + pot_t;

    const double element = kin_x + pot_x + ov_x * 2.0 * transverse;

    ModelParams params;
    params.N = N;
    params.Omega = 2.0 * element;
    params.kappa = kappa;
    params.eta = eta;
    params.Lambda = Lambda;
    return params;
}

}  // namespace bec::model
