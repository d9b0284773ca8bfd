#include "isa/grid.hpp"

#include "isa/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace isa {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

int TimeGrid::zero_index() const {
    int m0 = static_cast<int>(std::lround(-t0 / dt));
    if (m0 < 0) m0 = 0;
    if (m0 > n - 1) m0 = n - 1;
    return m0;
}

TimeGrid make_time_grid(int n, double dt, double t0) {
    if (n < 8)
        throw ContractError("time grid: n must be >= 8, got " + std::to_string(n));
    if (!(dt > 0.0))
        throw ContractError("time grid: dt must be > 0, got " + std::to_string(dt));
    TimeGrid g{n, dt, t0};
    const int m0 = g.zero_index();
    if (std::abs(g.t(m0)) > dt / 2.0)
        throw ContractError("time grid: no sample within dt/2 of t = 0 (nearest is t = " +
                            std::to_string(g.t(m0)) + ")");
    return g;
}

TimeGrid build_time_grid(int n, double dt, double t0) {
    if (!is_power_of_two(n))
        throw ContractError("time grid: n must be a power of two for fast transforms, got " +
                            std::to_string(n));
    return make_time_grid(n, dt, t0);
}

FreqGrid freq_grid_of(const TimeGrid& g) {
    const double pi = std::numbers::pi;
    return FreqGrid{g.n, 2.0 * pi / (g.n * g.dt), -pi / g.dt};
}

} // namespace isa
