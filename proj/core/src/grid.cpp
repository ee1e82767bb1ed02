#include "gsavbq/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "stencil.hpp"

namespace gsavbq {

Grid::Grid(double x0, double y0, double lx, double ly, int nx, int ny)
    : x0_(x0), y0_(y0), lx_(lx), ly_(ly), nx_(nx), ny_(ny) {
    if (nx < 3 || ny < 3)
        throw std::invalid_argument("Grid: need at least 3 nodes per direction, got " +
                                    std::to_string(nx) + "x" + std::to_string(ny));
    if (!(lx > 0.0) || !(ly > 0.0))
        throw std::invalid_argument("Grid: extents must be positive");
}

double Grid::h_min() const noexcept { return std::min(hx(), hy()); }

double Grid::weight(int i, int j) const noexcept {
    const double wx = (i == 0 || i == nx_ - 1) ? 0.5 : 1.0;
    const double wy = (j == 0 || j == ny_ - 1) ? 0.5 : 1.0;
    return wx * wy * hx() * hy();
}

void require_same_grid(const Grid& a, const Grid& b) {
    if (!(a == b)) throw std::invalid_argument("field grid mismatch");
}

// ---------------------------------------------------------------------------

ScalarField::ScalarField(const Grid& grid, Bc bc, double value)
    : grid_(grid), bc_(bc), v_(grid.size(), value) {
    enforce_bc();
}

void ScalarField::enforce_bc() noexcept {
    if (bc_ != Bc::DirichletZero || v_.empty()) return;
    const int nx = grid_.nx();
    const int ny = grid_.ny();
    for (int i = 0; i < nx; ++i) {
        (*this)(i, 0) = 0.0;
        (*this)(i, ny - 1) = 0.0;
    }
    for (int j = 0; j < ny; ++j) {
        (*this)(0, j) = 0.0;
        (*this)(nx - 1, j) = 0.0;
    }
}

void ScalarField::fill(double value) noexcept {
    std::fill(v_.begin(), v_.end(), value);
    enforce_bc();
}

bool ScalarField::all_finite() const noexcept {
    return std::all_of(v_.begin(), v_.end(), [](double v) { return std::isfinite(v); });
}

ScalarField& ScalarField::operator+=(const ScalarField& o) {
    require_same_grid(grid_, o.grid_);
    for (std::size_t k = 0; k < v_.size(); ++k) v_[k] += o.v_[k];
    return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& o) {
    require_same_grid(grid_, o.grid_);
    for (std::size_t k = 0; k < v_.size(); ++k) v_[k] -= o.v_[k];
    return *this;
}

ScalarField& ScalarField::operator*=(double s) noexcept {
    for (double& v : v_) v *= s;
    return *this;
}

ScalarField& ScalarField::axpy(double s, const ScalarField& o) {
    require_same_grid(grid_, o.grid_);
    for (std::size_t k = 0; k < v_.size(); ++k) v_[k] += s * o.v_[k];
    return *this;
}

// ---------------------------------------------------------------------------

VectorField::VectorField(const Grid& grid, Bc bc) : x(grid, bc), y(grid, bc) {}

VectorField::VectorField(ScalarField x_component, ScalarField y_component)
    : x(std::move(x_component)), y(std::move(y_component)) {
    require_same_grid(x.grid(), y.grid());
}

VectorField& VectorField::operator+=(const VectorField& o) {
    x += o.x;
    y += o.y;
    return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
    x -= o.x;
    y -= o.y;
    return *this;
}

VectorField& VectorField::operator*=(double s) noexcept {
    x *= s;
    y *= s;
    return *this;
}

VectorField& VectorField::axpy(double s, const VectorField& o) {
    x.axpy(s, o.x);
    y.axpy(s, o.y);
    return *this;
}

// ---------------------------------------------------------------------------

double inner(const ScalarField& a, const ScalarField& b) {
    const Grid& g = a.grid();
    require_same_grid(g, b.grid());
    const int nx = g.nx();
    const int ny = g.ny();
    double sum = 0.0;
    for (int j = 0; j < ny; ++j) {
        const double wy = (j == 0 || j == ny - 1) ? 0.5 : 1.0;
        double row = 0.5 * (a(0, j) * b(0, j) + a(nx - 1, j) * b(nx - 1, j));
        for (int i = 1; i < nx - 1; ++i) row += a(i, j) * b(i, j);
        sum += wy * row;
    }
    return sum * g.hx() * g.hy();
}

double inner(const VectorField& a, const VectorField& b) {
    return inner(a.x, b.x) + inner(a.y, b.y);
}

double norm_l2(const ScalarField& a) { return std::sqrt(inner(a, a)); }
double norm_l2(const VectorField& a) { return std::sqrt(inner(a, a)); }

namespace {

double grad_sq(const ScalarField& a) {
    const Grid& g = a.grid();
    double sum = 0.0;
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i) {
            const double gx = detail::ddx(a, i, j);
            const double gy = detail::ddy(a, i, j);
            sum += g.weight(i, j) * (gx * gx + gy * gy);
        }
    return sum;
}

}  // namespace

double norm_grad(const ScalarField& a) { return std::sqrt(grad_sq(a)); }
double norm_grad(const VectorField& a) { return std::sqrt(grad_sq(a.x) + grad_sq(a.y)); }

double mean(const ScalarField& a) {
    const ScalarField one(a.grid(), Bc::NeumannZero, 1.0);
    return inner(a, one) / a.grid().area();
}

ScalarField mean_zero_project(const ScalarField& a) {
    ScalarField out = a;
    out.set_bc(Bc::NeumannZero);
    const double m = mean(a);
    for (double& v : out.values()) v -= m;
    return out;
}

}  // namespace gsavbq
