#pragma once

// Explicit-Euler forward solver: evolves the reaction-diffusion model on a
// GridSpec with a 2nd-order central-difference Laplacian until the time
// derivatives drop below a steady-state tolerance.
//
// Zero-flux boundaries reflect across the half-cell outside each edge node
// (ghost value = edge value), which makes the discrete Laplacian of any
// field sum to zero over the grid. Periodic boundaries wrap.

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

#include "rdpinn/grid.hpp"
#include "rdpinn/params.hpp"
#include "rdpinn/rng.hpp"

namespace rdpinn {

struct DivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Diffusion stability bound for the explicit scheme, with safety factor 0.2.
// Zero diffusion would give an infinite bound; return fallback_cap instead.
inline double stable_dt(const RDParams& p, const GridSpec& grid,
                        double fallback_cap = 1.0) {
    p.validate();
    const double diff = std::max(std::abs(p.d1 * p.d2), std::abs(p.d2));
    if (diff == 0.0) return fallback_cap;
    const double h = std::min(grid.dx, grid.dy);
    return 0.2 * h * h / (4.0 * diff);
}

struct SolverConfig {
    double dt = 0.0;
    std::int64_t max_steps = 2'000'000;
    double steady_tol = 1e-6;
    double seed_amplitude = 0.05;
    std::uint64_t rng_seed = 0;
    BoundaryMode boundary = BoundaryMode::ZeroFlux;

    // Default configuration for a given model: dt at the stability bound.
    static SolverConfig defaults(const RDParams& p, const GridSpec& grid,
                                 std::uint64_t seed = 0) {
        SolverConfig cfg;
        cfg.dt = stable_dt(p, grid);
        cfg.rng_seed = seed;
        cfg.validate(p, grid);
        return cfg;
    }

    // Full check, including the stability precondition.
    void validate(const RDParams& p, const GridSpec& grid) const {
        validate_basic();
        if (dt > stable_dt(p, grid))
            throw std::invalid_argument("SolverConfig: dt exceeds stability bound");
    }

    void validate_basic() const {
        if (!(dt > 0.0)) throw std::invalid_argument("SolverConfig: dt must be > 0");
        if (!(steady_tol > 0.0))
            throw std::invalid_argument("SolverConfig: steady_tol must be > 0");
        if (!(seed_amplitude > 0.0))
            throw std::invalid_argument("SolverConfig: seed_amplitude must be > 0");
        if (max_steps < 1)
            throw std::invalid_argument("SolverConfig: max_steps must be >= 1");
    }
};

// i.i.d. uniform noise in [-amplitude, amplitude) for both fields,
// bit-reproducible per seed (u filled first, then v).
inline Pattern seed_fields(const GridSpec& grid, double amplitude,
                           std::uint64_t rng_seed) {
    if (!(amplitude > 0.0))
        throw std::invalid_argument("seed_fields: amplitude must be > 0");
    Rng rng(rng_seed);
    Pattern pat;
    pat.grid = grid;
    const int n = grid.num_nodes();
    pat.u.resize(n);
    pat.v.resize(n);
    for (int i = 0; i < n; ++i) pat.u[i] = rng.uniform(-amplitude, amplitude);
    for (int i = 0; i < n; ++i) pat.v[i] = rng.uniform(-amplitude, amplitude);
    return pat;
}

namespace detail {

// Neighbor index along one axis under the given boundary mode.
inline int neighbor(int i, int delta, int n, BoundaryMode mode) {
    int j = i + delta;
    if (mode == BoundaryMode::Periodic) {
        if (j < 0) j += n;
        if (j >= n) j -= n;
    } else {  // zero-flux: ghost equals the edge node itself
        if (j < 0) j = 0;
        if (j >= n) j = n - 1;
    }
    return j;
}

}  // namespace detail

// 5-point Laplacian of a field under the given boundary mode.
inline Field laplacian(const Field& f, const GridSpec& grid, BoundaryMode mode) {
    if (f.size() != static_cast<std::size_t>(grid.num_nodes()))
        throw std::invalid_argument("laplacian: field size does not match grid");
    Field out(f.size());
    const double inv_dx2 = 1.0 / (grid.dx * grid.dx);
    const double inv_dy2 = 1.0 / (grid.dy * grid.dy);
    for (int iy = 0; iy < grid.ny; ++iy) {
        const int ym = detail::neighbor(iy, -1, grid.ny, mode);
        const int yp = detail::neighbor(iy, +1, grid.ny, mode);
        for (int ix = 0; ix < grid.nx; ++ix) {
            const int xm = detail::neighbor(ix, -1, grid.nx, mode);
            const int xp = detail::neighbor(ix, +1, grid.nx, mode);
            const double c = f[grid.index(ix, iy)];
            out[grid.index(ix, iy)] =
                (f[grid.index(xp, iy)] + f[grid.index(xm, iy)] - 2.0 * c) * inv_dx2 +
                (f[grid.index(ix, yp)] + f[grid.index(ix, ym)] - 2.0 * c) * inv_dy2;
        }
    }
    return out;
}

namespace detail {

// One fused Euler sweep: writes the next state into (un, vn) and returns the
// max-norm of the time derivatives. Throws DivergenceError on non-finite
// output values.
inline double euler_sweep(const GridSpec& g, const Field& u, const Field& v,
                          Field& un, Field& vn, const RDParams& p, double dt,
                          BoundaryMode mode) {
    const double inv_dx2 = 1.0 / (g.dx * g.dx);
    const double inv_dy2 = 1.0 / (g.dy * g.dy);
    double max_rate = 0.0;
    for (int iy = 0; iy < g.ny; ++iy) {
        const int ym = neighbor(iy, -1, g.ny, mode);
        const int yp = neighbor(iy, +1, g.ny, mode);
        const int row = iy * g.nx, rym = ym * g.nx, ryp = yp * g.nx;
        for (int ix = 0; ix < g.nx; ++ix) {
            const int xm = neighbor(ix, -1, g.nx, mode);
            const int xp = neighbor(ix, +1, g.nx, mode);
            const int i = row + ix;
            const double uc = u[i], vc = v[i];
            const double lap_u =
                (u[row + xp] + u[row + xm] - 2.0 * uc) * inv_dx2 +
                (u[ryp + ix] + u[rym + ix] - 2.0 * uc) * inv_dy2;
            const double lap_v =
                (v[row + xp] + v[row + xm] - 2.0 * vc) * inv_dx2 +
                (v[ryp + ix] + v[rym + ix] - 2.0 * vc) * inv_dy2;
            const Rates r = reaction_rhs(uc, vc, lap_u, lap_v, p);
            const double nu = uc + dt * r.du_dt;
            const double nv = vc + dt * r.dv_dt;
            if (!std::isfinite(nu) || !std::isfinite(nv))
                throw DivergenceError("euler step produced non-finite value");
            un[i] = nu;
            vn[i] = nv;
            const double rate = std::max(std::abs(r.du_dt), std::abs(r.dv_dt));
            if (rate > max_rate) max_rate = rate;
        }
    }
    return max_rate;
}

}  // namespace detail

struct StepResult {
    Pattern next;
    double max_rate = 0.0;
};

// Single explicit-Euler step. max_rate is the max-norm of du/dt, dv/dt
// evaluated at the input state.
inline StepResult step_euler(const Pattern& state, const RDParams& p,
                             const SolverConfig& cfg) {
    state.validate();
    p.validate();
    cfg.validate_basic();
    StepResult res;
    res.next.grid = state.grid;
    res.next.u.resize(state.u.size());
    res.next.v.resize(state.v.size());
    res.next.provenance = state.provenance;
    res.max_rate = detail::euler_sweep(state.grid, state.u, state.v, res.next.u,
                                       res.next.v, p, cfg.dt, cfg.boundary);
    return res;
}

struct SolveResult {
    Pattern pattern;
    StopReason stop = StopReason::SteadyState;
    std::int64_t steps = 0;
    double final_max_rate = 0.0;
};

using ProgressFn = std::function<void(std::int64_t step, double max_rate)>;

constexpr std::int64_t kProgressInterval = 10'000;

// Seeds the fields and iterates Euler steps until the max-norm of the time
// derivatives falls below cfg.steady_tol or the step budget runs out.
// The returned pattern is the state at which the stop condition was measured.
inline SolveResult run_to_steady_state(const RDParams& p, const GridSpec& grid,
                                       const SolverConfig& cfg,
                                       const ProgressFn& progress = nullptr) {
    p.validate();
    cfg.validate_basic();
    Pattern state = seed_fields(grid, cfg.seed_amplitude, cfg.rng_seed);
    Field un(state.u.size()), vn(state.v.size());

    SolveResult res;
    std::int64_t step = 0;  // number of applied updates
    double rate = 0.0;
    for (;;) {
        try {
            rate = detail::euler_sweep(grid, state.u, state.v, un, vn, p, cfg.dt,
                                       cfg.boundary);
        } catch (const DivergenceError&) {
            throw DivergenceError("solver diverged at step " + std::to_string(step));
        }
        if (rate < cfg.steady_tol) {
            res.stop = StopReason::SteadyState;
            break;
        }
        if (step >= cfg.max_steps) {
            // budget exhausted: keep the state the rate was measured at
            res.stop = StopReason::MaxSteps;
            break;
        }
        state.u.swap(un);
        state.v.swap(vn);
        ++step;
        if (progress && step % kProgressInterval == 0) progress(step, rate);
    }

    res.steps = step;
    res.final_max_rate = rate;
    Provenance prov;
    prov.params = p;
    prov.rng_seed = cfg.rng_seed;
    prov.dt = cfg.dt;
    prov.steady_tol = cfg.steady_tol;
    prov.seed_amplitude = cfg.seed_amplitude;
    prov.boundary = cfg.boundary;
    prov.stop = res.stop;
    prov.steps = res.steps;
    prov.final_max_rate = res.final_max_rate;
    state.provenance = prov;
    res.pattern = std::move(state);
    return res;
}

// RMS of the model residual evaluated on stored fields with the discrete
// Laplacian; at a converged steady state this is bounded by the solver's
// tolerance.
inline double steady_residual_rms(const Pattern& pat, const RDParams& p,
                                  BoundaryMode mode) {
    pat.validate();
    const Field lap_u = laplacian(pat.u, pat.grid, mode);
    const Field lap_v = laplacian(pat.v, pat.grid, mode);
    double acc = 0.0;
    const int n = pat.grid.num_nodes();
    for (int i = 0; i < n; ++i) {
        const Rates r = reaction_rhs(pat.u[i], pat.v[i], lap_u[i], lap_v[i], p);
        acc += r.du_dt * r.du_dt + r.dv_dt * r.dv_dt;
    }
    return std::sqrt(acc / (2.0 * n));
}

}  // namespace rdpinn
