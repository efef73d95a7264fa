/// @file geometry.hpp
/// @brief Overset 1D geometry, uniform cell-centered grids, and cross-grid
///        donor interpolation.

#ifndef OVERSET_GEOMETRY_HPP
#define OVERSET_GEOMETRY_HPP

#include <utility>
#include <vector>

#include "overset/state.hpp"

namespace overset {

/// The four interface coordinates a < b < c < d and the overlap weighting eta.
/// Omega_u = [a,c], Omega_v = [b,d], overlap Omega_O = [b,c].
struct OversetGeometry1D {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
    double eta = 0.5;

    void validate() const;
};

enum class DomainId { U, V };

/// Uniform cell-centered grid carrying cell-averaged states for one subdomain.
/// Cell centers are x_left + (j + 1/2) dx.
struct GridField {
    DomainId domain_id = DomainId::U;
    double x_left = 0.0;
    double x_right = 0.0;
    int n_cells = 0;
    double dx = 0.0;
    std::vector<State> values;

    double center(int j) const { return x_left + (j + 0.5) * dx; }
    double face(int j) const { return x_left + j * dx; }

    bool contains(double x) const { return x >= x_left && x <= x_right; }

    /// Index of the cell containing x (clamped to [0, n_cells-1] at the edges).
    int cell_of(double x) const;

    /// Index of the cell whose center is nearest to x.
    int nearest_cell(double x) const;
};

struct InterpolationOperator {
    enum class Mode { exact_node, lagrange };
    Mode mode = Mode::exact_node;
    int order = 3;  // polynomial order q; lagrange uses q+1 nearest cell centers
};

/// Builds the two subdomain grids. Requires n_u, n_v >= 4.
std::pair<GridField, GridField> build_grids(const OversetGeometry1D& geom, int n_u, int n_v);

/// Evaluates the grid's state at x.
/// exact_node: x must coincide with a cell center to within 1e-12*dx and the
/// donor cell value is returned unmodified (bitwise).
/// lagrange: polynomial interpolation through order+1 nearest cell centers.
/// Throws ValidationError when x lies outside the span or no node coincides.
State evaluate_at(const GridField& field, double x, const InterpolationOperator& interp);

/// True when dx_u == dx_v and b, c both lie on cell faces of both grids, i.e.
/// the two grids share one lattice over the overlap so donor queries at cell
/// centers are exact. This is the configuration the machine-precision
/// semi-discrete identities assume.
bool grids_aligned(const OversetGeometry1D& geom, const GridField& u, const GridField& v,
                   double rel_tol = 1e-9);

}  // namespace overset

#endif
