#pragma once

#include <string>
#include <vector>

#include "common.hpp"

namespace rotslab {

/// One member of the singular family: Rossby scale epsilon, slab
/// half-thickness ell, slip coefficient alpha. The Ekman ratio
/// lambda = alpha/ell is always recomputed, never stored.
struct RegimeParams {
    double epsilon = 1.0;
    double ell = 1.0;
    double alpha = 0.0;

    RegimeParams() = default;
    RegimeParams(double eps, double ell_, double alpha_);

    double lambda() const { return alpha / ell; }
};

/// Power law c * epsilon^a for the thickness / slip sequences.
struct ScalingLaw {
    double coeff = 1.0;
    double exponent = 1.0;
    double operator()(double eps) const;
};

enum class LambdaRegime { Finite, Zero, Diverging };

struct RegimeSequence {
    std::vector<RegimeParams> members;  ///< epsilon_n = 1/n, n = n_min..n_max
    LambdaRegime regime = LambdaRegime::Finite;
    double lambda_limit = 0.0;  ///< meaningful for Finite (Zero reports 0)

    std::string regime_name() const;
};

/// Builds the regime family epsilon_n = 1/n with ell and alpha from the given
/// power laws, and classifies the limit behaviour of lambda = alpha/ell.
/// Requires a strictly decreasing thickness (ell exponent > 0, coeff > 0) and
/// alpha >= 0.
RegimeSequence make_regime_sequence(int n_min, int n_max, const ScalingLaw& ell_rule,
                                    const ScalingLaw& alpha_rule);

/// Slab grid: uniform periodic nh x nh horizontal grid on a square torus of
/// side `period`, and nv Chebyshev-Gauss-Lobatto collocation nodes spanning
/// [-ell, ell] endpoints included (node 0 at +ell, node nv-1 at -ell).
struct SlabGeometry {
    double period = 2.0 * 3.14159265358979323846;
    int nh = 32;
    int nv = 17;
    double ell = 1.0;

    SlabGeometry() = default;
    SlabGeometry(double period_, int nh_, int nv_, double ell_);

    double dx() const { return period / nh; }
    /// Signed integer mode for FFT index i (Nyquist mapped to -nh/2).
    int mode(int i) const { return i <= nh / 2 ? i : i - nh; }
    /// Physical wavenumber of FFT index i.
    double wavenumber(int i) const { return 2.0 * 3.14159265358979323846 / period * mode(i); }
    /// Vertical node position x3 = ell * z_j.
    double znode(int j) const;
    bool same_grid(const SlabGeometry& o) const {
        return nh == o.nh && nv == o.nv && period == o.period && ell == o.ell;
    }
};

}  // namespace rotslab
