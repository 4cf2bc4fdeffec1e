#pragma once

// Vertex-centered uniform grid over a rectangular domain, plus the Pattern
// type (paired u, v scalar fields) produced by the forward solver.
//
// Field layout is row-major with y as the outer index: index = iy*nx + ix.
// Node coordinates: x_i = x_min + i*dx, so boundary nodes lie exactly on
// the domain edges.

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rdpinn/params.hpp"

namespace rdpinn {

struct GridSpec {
    int nx = 0;
    int ny = 0;
    double x_min = 0.0;
    double x_max = 0.0;
    double y_min = 0.0;
    double y_max = 0.0;
    double dx = 0.0;
    double dy = 0.0;

    static GridSpec make(int nx, int ny, double x_min, double x_max,
                         double y_min, double y_max) {
        if (nx < 3 || ny < 3)
            throw std::invalid_argument("GridSpec: nx and ny must be >= 3");
        if (!(x_max > x_min) || !(y_max > y_min))
            throw std::invalid_argument("GridSpec: empty domain");
        GridSpec g;
        g.nx = nx;
        g.ny = ny;
        g.x_min = x_min;
        g.x_max = x_max;
        g.y_min = y_min;
        g.y_max = y_max;
        g.dx = (x_max - x_min) / (nx - 1);
        g.dy = (y_max - y_min) / (ny - 1);
        return g;
    }

    // 50x50 nodes spanning -100..100 in both axes.
    static GridSpec standard() { return make(50, 50, -100.0, 100.0, -100.0, 100.0); }

    int num_nodes() const { return nx * ny; }
    int index(int ix, int iy) const { return iy * nx + ix; }
    double x(int ix) const { return x_min + ix * dx; }
    double y(int iy) const { return y_min + iy * dy; }

    bool operator==(const GridSpec& o) const {
        return nx == o.nx && ny == o.ny && x_min == o.x_min &&
               x_max == o.x_max && y_min == o.y_min && y_max == o.y_max;
    }
};

using Field = std::vector<double>;

enum class BoundaryMode { ZeroFlux, Periodic };

inline const char* to_string(BoundaryMode m) {
    return m == BoundaryMode::ZeroFlux ? "zero_flux" : "periodic";
}

inline BoundaryMode boundary_mode_from_string(const std::string& s) {
    if (s == "zero_flux") return BoundaryMode::ZeroFlux;
    if (s == "periodic") return BoundaryMode::Periodic;
    throw std::invalid_argument("unknown boundary mode: " + s);
}

enum class StopReason { SteadyState, MaxSteps };

inline const char* to_string(StopReason r) {
    return r == StopReason::SteadyState ? "steady_state" : "max_steps";
}

// Record of how a pattern was produced; absent for externally loaded data.
struct Provenance {
    RDParams params;
    std::uint64_t rng_seed = 0;
    double dt = 0.0;
    double steady_tol = 0.0;
    double seed_amplitude = 0.0;
    BoundaryMode boundary = BoundaryMode::ZeroFlux;
    StopReason stop = StopReason::SteadyState;
    std::int64_t steps = 0;
    double final_max_rate = 0.0;
};

struct Pattern {
    GridSpec grid;
    Field u;
    Field v;
    std::optional<Provenance> provenance;

    void validate() const {
        const auto n = static_cast<std::size_t>(grid.num_nodes());
        if (u.size() != n || v.size() != n)
            throw std::invalid_argument("Pattern: field size does not match grid");
        for (std::size_t i = 0; i < n; ++i)
            if (!std::isfinite(u[i]) || !std::isfinite(v[i]))
                throw std::invalid_argument("Pattern: non-finite field value");
    }
};

}  // namespace rdpinn
