#pragma once

// Two-component reaction-diffusion model parameters and reaction kinetics.
//
//   du/dt = D1*D2*lap(u) + alpha*u*(1 - r1*v^2) + v*(1 - r2*u)
//   dv/dt = D2*lap(v) + beta*v*(1 + (alpha*r1/beta)*u*v) + u*(gamma + r2*v)
//
// with the tie gamma = -alpha. beta must stay nonzero (it divides the
// cross-coupling term).

#include <cmath>
#include <stdexcept>
#include <string>

namespace rdpinn {

struct RDParams {
    double d1 = 0.0;
    double d2 = 0.0;
    double alpha = 0.0;
    double beta = 1.0;
    double gamma = 0.0;  // always == -alpha
    double r1 = 0.0;
    double r2 = 0.0;

    static RDParams make(double d1, double d2, double alpha, double beta,
                         double r1, double r2) {
        RDParams p;
        p.d1 = d1;
        p.d2 = d2;
        p.alpha = alpha;
        p.beta = beta;
        p.gamma = -alpha;
        p.r1 = r1;
        p.r2 = r2;
        p.validate();
        return p;
    }

    // Re-establishes gamma = -alpha after alpha changed.
    void retie_gamma() { gamma = -alpha; }

    void validate() const {
        auto check_finite = [](double x, const char* name) {
            if (!std::isfinite(x))
                throw std::invalid_argument(std::string("RDParams: ") + name +
                                            " is not finite");
        };
        check_finite(d1, "d1");
        check_finite(d2, "d2");
        check_finite(alpha, "alpha");
        check_finite(beta, "beta");
        check_finite(gamma, "gamma");
        check_finite(r1, "r1");
        check_finite(r2, "r2");
        if (beta == 0.0)
            throw std::invalid_argument("RDParams: beta must be nonzero");
        if (gamma != -alpha)
            throw std::invalid_argument("RDParams: gamma must equal -alpha");
    }
};

enum class PatternId { P, Q, R };

inline PatternId pattern_id_from_string(const std::string& s) {
    if (s == "P" || s == "p") return PatternId::P;
    if (s == "Q" || s == "q") return PatternId::Q;
    if (s == "R" || s == "r") return PatternId::R;
    throw std::invalid_argument("unknown pattern id: " + s);
}

inline const char* to_string(PatternId id) {
    switch (id) {
        case PatternId::P: return "P";
        case PatternId::Q: return "Q";
        case PatternId::R: return "R";
    }
    throw std::logic_error("bad PatternId");
}

// Published parameter sets for the three reference patterns.
inline RDParams params_for_pattern(PatternId id) {
    switch (id) {
        case PatternId::P:
            return RDParams::make(0.516, 2.0, 0.899, -0.91, 3.50, 0.0);
        case PatternId::Q:
            return RDParams::make(0.300, 2.0, 0.700, -0.75, 3.50, 0.0);
        case PatternId::R:
            return RDParams::make(0.516, 2.0, 0.899, -0.91, 0.02, 0.2);
    }
    throw std::invalid_argument("unknown pattern id");
}

struct Rates {
    double du_dt;
    double dv_dt;
};

// Pointwise right-hand side of the model given local concentrations and
// precomputed Laplacian values. Pure arithmetic; non-finite inputs propagate.
inline Rates reaction_rhs(double u, double v, double lap_u, double lap_v,
                          const RDParams& p) {
    const double du =
        p.d1 * p.d2 * lap_u + p.alpha * u * (1.0 - p.r1 * v * v) +
        v * (1.0 - p.r2 * u);
    const double dv =
        p.d2 * lap_v + p.beta * v * (1.0 + (p.alpha * p.r1 / p.beta) * u * v) +
        u * (p.gamma + p.r2 * v);
    return {du, dv};
}

}  // namespace rdpinn
