#include "gsavbq/operators.hpp"

#include <stdexcept>

#include "stencil.hpp"

namespace gsavbq {

void BdfParams::validate() const {
    if (!(k >= 1.0)) throw std::invalid_argument("BdfParams: k must be >= 1");
    if (!(l >= 1.0)) throw std::invalid_argument("BdfParams: l must be >= 1");
}

double bdf_comb(double next, double cur, double prev, double k) noexcept {
    return (2.0 * k + 1.0) * next - 4.0 * k * cur + (2.0 * k - 1.0) * prev;
}

double extrap(double cur, double prev, double k) noexcept { return k * cur - (k - 1.0) * prev; }

ScalarField bdf_comb(const ScalarField& next, const ScalarField& cur, const ScalarField& prev,
                     double k) {
    require_same_grid(next.grid(), cur.grid());
    require_same_grid(next.grid(), prev.grid());
    ScalarField out(next.grid(), next.bc());
    for (std::size_t n = 0; n < out.size(); ++n) out[n] = bdf_comb(next[n], cur[n], prev[n], k);
    return out;
}

VectorField bdf_comb(const VectorField& next, const VectorField& cur, const VectorField& prev,
                     double k) {
    return {bdf_comb(next.x, cur.x, prev.x, k), bdf_comb(next.y, cur.y, prev.y, k)};
}

ScalarField extrap(const ScalarField& cur, const ScalarField& prev, double k) {
    require_same_grid(cur.grid(), prev.grid());
    ScalarField out(cur.grid(), cur.bc());
    for (std::size_t n = 0; n < out.size(); ++n) out[n] = extrap(cur[n], prev[n], k);
    return out;
}

VectorField extrap(const VectorField& cur, const VectorField& prev, double k) {
    return {extrap(cur.x, prev.x, k), extrap(cur.y, prev.y, k)};
}

ScalarField laplacian(const ScalarField& a) {
    const Grid& g = a.grid();
    const int nx = g.nx();
    const int ny = g.ny();
    const double ix2 = 1.0 / (g.hx() * g.hx());
    const double iy2 = 1.0 / (g.hy() * g.hy());
    ScalarField out(g, a.bc());

    if (a.bc() == Bc::DirichletZero) {
        for (int j = 1; j < ny - 1; ++j)
            for (int i = 1; i < nx - 1; ++i)
                out(i, j) = (a(i - 1, j) - 2.0 * a(i, j) + a(i + 1, j)) * ix2 +
                            (a(i, j - 1) - 2.0 * a(i, j) + a(i, j + 1)) * iy2;
        return out;
    }

    for (int j = 0; j < ny; ++j) {
        const int jm = j == 0 ? 1 : j - 1;
        const int jp = j == ny - 1 ? ny - 2 : j + 1;
        for (int i = 0; i < nx; ++i) {
            const int im = i == 0 ? 1 : i - 1;
            const int ip = i == nx - 1 ? nx - 2 : i + 1;
            out(i, j) = (a(im, j) - 2.0 * a(i, j) + a(ip, j)) * ix2 +
                        (a(i, jm) - 2.0 * a(i, j) + a(i, jp)) * iy2;
        }
    }
    return out;
}

VectorField laplacian(const VectorField& a) { return {laplacian(a.x), laplacian(a.y)}; }

VectorField gradient(const ScalarField& a) {
    const Grid& g = a.grid();
    VectorField out(g, Bc::NeumannZero);
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i) {
            out.x(i, j) = detail::ddx(a, i, j);
            out.y(i, j) = detail::ddy(a, i, j);
        }
    return out;
}

ScalarField divergence(const VectorField& v) {
    const Grid& g = v.grid();
    ScalarField out(g, Bc::NeumannZero);
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i) out(i, j) = detail::ddx(v.x, i, j) + detail::ddy(v.y, i, j);
    return out;
}

namespace {

// Column m of the transposed 1-D derivative rows, applied to q along a line.
// get(r) returns q at row r of that line; n is the line length.
template <typename Get>
double ddt_column(Get get, int m, int n, double inv2h) {
    double s = 0.0;
    if (m - 1 >= 1) s += get(m - 1);
    if (m + 1 <= n - 2) s -= get(m + 1);
    if (m == 1) s += 4.0 * get(0);
    if (m == 2) s -= get(0);
    if (m == n - 2) s -= 4.0 * get(n - 1);
    if (m == n - 3) s += get(n - 1);
    return s * inv2h;
}

}  // namespace

VectorField divergence_transpose(const ScalarField& q) {
    const Grid& g = q.grid();
    const int nx = g.nx();
    const int ny = g.ny();
    VectorField out(g, Bc::DirichletZero);
    const double ihx = 0.5 / g.hx();
    const double ihy = 0.5 / g.hy();
    for (int j = 1; j < ny - 1; ++j)
        for (int i = 1; i < nx - 1; ++i) {
            out.x(i, j) = ddt_column([&](int r) { return q(r, j); }, i, nx, ihx);
            out.y(i, j) = ddt_column([&](int r) { return q(i, r); }, j, ny, ihy);
        }
    return out;
}

VectorField gradient_sbp(const ScalarField& a) {
    const Grid& g = a.grid();
    const int nx = g.nx();
    const int ny = g.ny();
    VectorField out = gradient(a);
    for (int j = 0; j < ny; ++j) {
        out.x(0, j) = (a(1, j) - a(0, j)) / g.hx();
        out.x(nx - 1, j) = (a(nx - 1, j) - a(nx - 2, j)) / g.hx();
    }
    for (int i = 0; i < nx; ++i) {
        out.y(i, 0) = (a(i, 1) - a(i, 0)) / g.hy();
        out.y(i, ny - 1) = (a(i, ny - 1) - a(i, ny - 2)) / g.hy();
    }
    return out;
}

ScalarField divergence_weak(const VectorField& v) {
    const Grid& g = v.grid();
    const int nx = g.nx();
    const int ny = g.ny();
    ScalarField out(g, Bc::NeumannZero);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            const double wx = (i == 0 || i == nx - 1) ? 0.5 : 1.0;
            const double wy = (j == 0 || j == ny - 1) ? 0.5 : 1.0;
            // edge values are averages of the two end nodes; edges outside the domain carry nothing
            const double east = i + 1 < nx ? 0.5 * (v.x(i, j) + v.x(i + 1, j)) : 0.0;
            const double west = i > 0 ? 0.5 * (v.x(i - 1, j) + v.x(i, j)) : 0.0;
            const double north = j + 1 < ny ? 0.5 * (v.y(i, j) + v.y(i, j + 1)) : 0.0;
            const double south = j > 0 ? 0.5 * (v.y(i, j - 1) + v.y(i, j)) : 0.0;
            out(i, j) = (east - west) / (g.hx() * wx) + (north - south) / (g.hy() * wy);
        }
    return out;
}

ScalarField advect(const VectorField& w, const ScalarField& a) {
    const Grid& g = a.grid();
    require_same_grid(g, w.grid());
    const double ihx = 0.5 / g.hx();
    const double ihy = 0.5 / g.hy();
    ScalarField out(g, a.bc());
    for (int j = 1; j < g.ny() - 1; ++j)
        for (int i = 1; i < g.nx() - 1; ++i)
            out(i, j) = w.x(i, j) * (a(i + 1, j) - a(i - 1, j)) * ihx +
                        w.y(i, j) * (a(i, j + 1) - a(i, j - 1)) * ihy;
    return out;
}

VectorField advect(const VectorField& w, const VectorField& a) {
    return {advect(w, a.x), advect(w, a.y)};
}

}  // namespace gsavbq
