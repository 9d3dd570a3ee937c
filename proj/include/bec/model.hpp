#pragma once

#include <string>
#include <vector>

namespace bec::model {

// Hamiltonian parameters: particle count N, bare tunneling Omega,
// self-collision kappa, cross-collisions eta and Lambda. hbar = 1.
struct ModelParams {
    int N = 0;
    double Omega = 0.0;
    double kappa = 0.0;
    double eta = 0.0;
    double Lambda = 0.0;
};

// Quantities derived from ModelParams:
//   J  = N/2
//   OmegaPrime = 2 [2 Lambda (N-1) + Omega/2]   (effective tunneling)
//   k  = (kappa - eta)(2J-1)/(4J)
//   n  = eta (2J-1)/(2J)
//   R  = 2 sqrt(J)
struct DerivedParams {
    double J = 0.0;
    double OmegaPrime = 0.0;
    double k_small = 0.0;
    double n_small = 0.0;
    double R = 0.0;
};

DerivedParams derive(const ModelParams& params);

struct RegimeReport {
    std::vector<std::string> violations;
    bool pass() const { return violations.empty(); }
};

// Checks the two-mode regime: Omega,kappa must dominate Lambda,eta
// ("much greater" taken as ratio >= ratio_min), eta must not exceed Lambda
// when both are nonzero, and the excluded fixed-point family (c) region
// R^2 n >= Omega'/2 is rejected.
RegimeReport validate_regime(const ModelParams& params, double ratio_min = 5.0);

// Lambda consistent with kappa and eta through a single overlap:
// eta = kappa eps^2 and Lambda = kappa eps^(3/2) imply
// Lambda = kappa (eta/kappa)^(3/4).
double lambda_from_overlap(double kappa, double eta);

struct BifurcationSides {
    double lhs = 0.0;  // (kappa - 3 eta)(N-1)
    double rhs = 0.0;  // 2 Lambda (N-1) + Omega/2
    bool bifurcated = false;
};

BifurcationSides bifurcation_sides(const ModelParams& params);

// Self-collision value at which lhs == rhs:
// kappa_c = [2 Lambda (N-1) + Omega/2]/(N-1) + 3 eta.
double critical_kappa(int N, double Omega, double eta, double Lambda);

// Double-well trap description. The localized modes are isotropic Gaussians
// of width d = 1/sqrt(m w) centered at +-q0 on the x axis; the barrier
// parameter is fixed at b = m w^2 / 8.
struct TrapGeometry {
    double mass = 0.0;
    double omega_trap = 0.0;
    double q0 = 0.0;
    double a_scatter = 0.0;

    double width() const;      // d
    double barrier_b() const;  // m w^2 / 8
    double v0() const;         // 4 pi a / m
    double overlap() const;    // eps = exp(-q0^2/d^2)
};

// Builds ModelParams from the trap: kappa from the Gaussian quartic
// integral, eta = kappa eps^2, Lambda = kappa eps^(3/2), Omega from
// 2 <u-|H|u+> by separable 1-D quadratures. Rejects eps >= 0.5.
ModelParams from_trap(const TrapGeometry& trap, int N);

}  // namespace bec::model
