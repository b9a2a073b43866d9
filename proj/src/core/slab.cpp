#include "core/slab.hpp"

#include <cmath>

#include "core/chebyshev.hpp"

namespace rotslab {

RegimeParams::RegimeParams(double eps, double ell_, double alpha_)
    : epsilon(eps), ell(ell_), alpha(alpha_) {
    if (!(epsilon > 0.0) || epsilon > 1.0) throw ParamError("epsilon must lie in (0,1]");
    if (!(ell > 0.0)) throw ParamError("half-thickness ell must be positive");
    if (alpha < 0.0) throw ParamError("slip coefficient alpha must be non-negative");
}

double ScalingLaw::operator()(double eps) const { return coeff * std::pow(eps, exponent); }

std::string RegimeSequence::regime_name() const {
    switch (regime) {
        case LambdaRegime::Zero:
            return "lambda=0";
        case LambdaRegime::Diverging:
            return "lambda->inf";
        case LambdaRegime::Finite:
            return "finite lambda=" + std::to_string(lambda_limit);
    }
    return "?";
}

RegimeSequence make_regime_sequence(int n_min, int n_max, const ScalingLaw& ell_rule,
                                    const ScalingLaw& alpha_rule) {
    if (n_min < 1 || n_max < n_min) throw ParamError("regime sequence needs 1 <= n_min <= n_max");
    if (!(ell_rule.coeff > 0.0) || !(ell_rule.exponent > 0.0))
        throw ParamError("invalid scaling law: thickness must decrease to zero (c>0, a>0)");
    if (alpha_rule.coeff < 0.0) throw ParamError("alpha scaling must be non-negative");

    RegimeSequence seq;
    for (int n = n_min; n <= n_max; ++n) {
        const double eps = 1.0 / n;
        seq.members.emplace_back(eps, ell_rule(eps), alpha_rule(eps));
    }
    const double gap = alpha_rule.exponent - ell_rule.exponent;
    if (alpha_rule.coeff == 0.0 || gap > 0.0) {
        seq.regime = LambdaRegime::Zero;
        seq.lambda_limit = 0.0;
    } else if (gap == 0.0) {
        seq.regime = LambdaRegime::Finite;
        seq.lambda_limit = alpha_rule.coeff / ell_rule.coeff;
    } else {
        seq.regime = LambdaRegime::Diverging;
        seq.lambda_limit = 0.0;
    }
    return seq;
}

SlabGeometry::SlabGeometry(double period_, int nh_, int nv_, double ell_)
    : period(period_), nh(nh_), nv(nv_), ell(ell_) {
    if (!(period > 0.0)) throw GeometryError("torus period must be positive");
    if (nh < 8 || nh % 2 != 0) throw GeometryError("nh must be an even integer >= 8");
    if (nv < 5 || nv % 2 == 0) throw GeometryError("nv must be an odd integer >= 5");
    if (!(ell > 0.0)) throw GeometryError("half-thickness ell must be positive");
}

double SlabGeometry::znode(int j) const { return ell * cheb::Basis::get(nv).nodes[j]; }

}  // namespace rotslab
