#pragma once

#include <array>
#include <map>
#include <string>

#include "wavedecay/rational.hpp"

namespace wavedecay {

// Radial grid for the 1+1 reduction.  Points r_j = j*dr, j = 0..n_cells.
struct Grid1D {
    double r_max = 0.0;
    int n_cells = 0;
    double cfl = 0.5;  // dt = cfl * dr

    double dr() const { return r_max / n_cells; }
    double dt() const { return cfl * dr(); }
    // Outer boundary must stay causally silent through t_final.
    void validate(double t_final, double support_radius) const;
};

// Radial realizations of the asymptotically flat perturbations: every
// coefficient is a time-independent profile amp * (1+r^2)^(-k/2) with k
// matching its decay class (1+sigma for the metric/first-order terms,
// 2+sigma for the potential and the angular coefficient).
struct CoefficientProfile {
    double amp_h = 0.0;   // radial metric perturbation (divergence form)
    double amp_br = 0.0;  // first-order radial term
    double amp_b0 = 0.0;  // first-order time term
    double amp_v = 0.0;   // potential
    double amp_gw = 0.0;  // angular coefficient (used by single-mode runs)
    Rational sigma = Rational(1, 10);

    void validate() const;  // |amp| <= 0.1

    double h(double r) const;
    double dh(double r) const;  // d/dr of h
    double br(double r) const;
    double b0(double r) const;
    double v(double r) const;
    double gw(double r) const;
};

// Constant symmetric coefficients of the quadratic derivative form, required
// to vanish on null covectors.  For symmetric constants this forces a
// multiple of the Minkowski form, so the radial evaluation is
// scale * (-(dt phi)^2 + (dr phi)^2).
class NullFormCoeffs {
  public:
    // Validates the null condition on the coordinate axes and a sampled set
    // of null covectors; throws Error(null_condition_violated).
    explicit NullFormCoeffs(const std::array<std::array<double, 4>, 4>& s);
    static NullFormCoeffs minkowski(double scale);

    double scale() const { return scale_; }
    const std::array<std::array<double, 4>, 4>& matrix() const { return s_; }

  private:
    std::array<std::array<double, 4>, 4> s_{};
    double scale_ = 0.0;
};

// S^{ab} da phi db phi for a radial field (angular_terms is the squared
// angular gradient, identically zero in radial symmetry).
double null_form_eval(double dt_phi, double dr_phi, double angular_terms,
                      const NullFormCoeffs& coeffs);

enum class DataProfile { gaussian, bump, inverse_square };

// Compactly supported radial data phi0 = eps * p(r), phi1 = velocity_factor
// * eps * p(r).  The inverse-square profile carries a smooth ramp to zero
// over the outer quarter of its support.
struct InitialData {
    DataProfile profile = DataProfile::gaussian;
    double epsilon = 0.01;
    double width = 1.0;            // shape scale (gaussian only)
    double support_radius = 6.0;
    double velocity_factor = 0.0;  // phi1 = velocity_factor * eps * p

    void validate() const;  // eps <= 0.05 unless the blowup contrast is on

    double shape(double r) const;    // p(r)
    double dshape(double r) const;   // p'(r)
    double phi0(double r) const { return epsilon * shape(r); }
    double phi1(double r) const { return velocity_factor * epsilon * shape(r); }
};

enum class Nonlinearity { null_form, square_dt_phi, none };

struct SimConfig {
    Grid1D grid;
    CoefficientProfile coeffs;
    double null_scale = 1.0;
    InitialData data;
    double t_final = 10.0;
    int mode_ell = 0;  // spherical-harmonic index, > 0 only for linear runs
    int record_stride = 1;
    Nonlinearity nonlinearity = Nonlinearity::null_form;

    void validate() const;

    // Flat key=value text, '#' comments; keys sorted, hash-stable.
    static SimConfig from_text(const std::string& text);
    std::string canonical_text() const;
};

std::string nonlinearity_name(Nonlinearity n);
std::string profile_name(DataProfile p);

// FNV-1a over the canonical config text, as fixed-width hex.
std::string config_hash(const SimConfig& cfg);

}  // namespace wavedecay
