#include "overset/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace overset {

void OversetGeometry1D::validate() const {
    if (!(a < b && b < c && c < d))
        throw ValidationError("geometry requires a < b < c < d");
    if (!(eta > 0.0 && eta < 1.0))
        throw ValidationError("eta must lie in (0,1)");
}

int GridField::cell_of(double x) const {
    if (!contains(x)) throw ValidationError("point outside grid span");
    int j = static_cast<int>(std::floor((x - x_left) / dx));
    return std::clamp(j, 0, n_cells - 1);
}

int GridField::nearest_cell(double x) const {
    int j = static_cast<int>(std::llround((x - x_left) / dx - 0.5));
    return std::clamp(j, 0, n_cells - 1);
}

std::pair<GridField, GridField> build_grids(const OversetGeometry1D& geom, int n_u, int n_v) {
    geom.validate();
    if (n_u < 4 || n_v < 4)
        throw ValidationError("grid sizes must satisfy n_u, n_v >= 4 (got " +
                              std::to_string(n_u) + ", " + std::to_string(n_v) + ")");

    GridField u;
    u.domain_id = DomainId::U;
    u.x_left = geom.a;
    u.x_right = geom.c;
    u.n_cells = n_u;
    u.dx = (geom.c - geom.a) / n_u;

    GridField v;
    v.domain_id = DomainId::V;
    v.x_left = geom.b;
    v.x_right = geom.d;
    v.n_cells = n_v;
    v.dx = (geom.d - geom.b) / n_v;

    if (!(u.dx > 0.0) || !(v.dx > 0.0)) throw ValidationError("degenerate grid span");

    // the coupling needs at least one cell of each grid inside the overlap
    if (!(geom.c - geom.b > std::max(u.dx, v.dx)))
        throw ValidationError("overlap [b,c] must contain at least one cell of each grid");

    u.values.assign(static_cast<std::size_t>(n_u), State{});
    v.values.assign(static_cast<std::size_t>(n_v), State{});
    return {std::move(u), std::move(v)};
}

State evaluate_at(const GridField& field, double x, const InterpolationOperator& interp) {
    if (!field.contains(x)) throw ValidationError("interpolation point outside grid span");

    const int jn = field.nearest_cell(x);
    const double gap = std::abs(x - field.center(jn));

    if (interp.mode == InterpolationOperator::Mode::exact_node) {
        if (gap > 1e-12 * field.dx)
            throw ValidationError(
                "exact_node interpolation requested but query point does not coincide with a "
                "donor cell center");
        return field.values[static_cast<std::size_t>(jn)];
    }

    // lagrange: order+1 nearest cell centers, stencil clamped inside the grid
    const int q = interp.order;
    if (q < 0) throw ValidationError("lagrange order must be non-negative");
    const int width = std::min(q + 1, field.n_cells);
    int start = jn - width / 2;
    start = std::clamp(start, 0, field.n_cells - width);

    State result = State::zero(field.values[0].size());
    for (int i = 0; i < width; ++i) {
        const int ji = start + i;
        double weight = 1.0;
        for (int k = 0; k < width; ++k) {
            if (k == i) continue;
            const int jk = start + k;
            weight *= (x - field.center(jk)) / (field.center(ji) - field.center(jk));
        }
        result += weight * field.values[static_cast<std::size_t>(ji)];
    }
    return result;
}

bool grids_aligned(const OversetGeometry1D& geom, const GridField& u, const GridField& v,
                   double rel_tol) {
    if (std::abs(u.dx - v.dx) > rel_tol * u.dx) return false;
    const double cells_to_b = (geom.b - geom.a) / u.dx;
    const double cells_to_c = (geom.c - geom.b) / v.dx;
    return std::abs(cells_to_b - std::llround(cells_to_b)) < rel_tol &&
           std::abs(cells_to_c - std::llround(cells_to_c)) < rel_tol;
}

}  // namespace overset
