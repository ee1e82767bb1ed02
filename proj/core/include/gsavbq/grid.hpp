#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gsavbq {

/// Uniform structured grid on a rectangle. Node counts include the boundary
/// nodes, so the spacing is L/(n-1) in each direction.
class Grid {
public:
    Grid() = default;
    Grid(double x0, double y0, double lx, double ly, int nx, int ny);

    /// Unit square (0,1)^2 with n nodes per direction.
    static Grid unit_square(int n) { return Grid(0.0, 0.0, 1.0, 1.0, n, n); }

    [[nodiscard]] double x0() const noexcept { return x0_; }
    [[nodiscard]] double y0() const noexcept { return y0_; }
    [[nodiscard]] double lx() const noexcept { return lx_; }
    [[nodiscard]] double ly() const noexcept { return ly_; }
    [[nodiscard]] int nx() const noexcept { return nx_; }
    [[nodiscard]] int ny() const noexcept { return ny_; }
    [[nodiscard]] double hx() const noexcept { return lx_ / (nx_ - 1); }
    [[nodiscard]] double hy() const noexcept { return ly_ / (ny_ - 1); }
    [[nodiscard]] double h_min() const noexcept;
    [[nodiscard]] double area() const noexcept { return lx_ * ly_; }
    [[nodiscard]] std::size_t size() const noexcept {
        return static_cast<std::size_t>(nx_) * static_cast<std::size_t>(ny_);
    }

    [[nodiscard]] std::size_t index(int i, int j) const noexcept {
        return static_cast<std::size_t>(j) * static_cast<std::size_t>(nx_) +
               static_cast<std::size_t>(i);
    }
    [[nodiscard]] double x(int i) const noexcept { return x0_ + i * hx(); }
    [[nodiscard]] double y(int j) const noexcept { return y0_ + j * hy(); }
    [[nodiscard]] bool is_interior(int i, int j) const noexcept {
        return i > 0 && i < nx_ - 1 && j > 0 && j < ny_ - 1;
    }

    /// Trapezoidal quadrature weight of node (i,j), including hx*hy.
    [[nodiscard]] double weight(int i, int j) const noexcept;

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    double x0_ = 0.0;
    double y0_ = 0.0;
    double lx_ = 1.0;
    double ly_ = 1.0;
    int nx_ = 3;
    int ny_ = 3;
};

enum class Bc { DirichletZero, NeumannZero };

/// Nodal scalar field with a boundary-condition tag.
class ScalarField {
public:
    ScalarField() = default;
    explicit ScalarField(const Grid& grid, Bc bc = Bc::DirichletZero, double value = 0.0);

    /// Samples f(x, y) at every node. Dirichlet fields get exact zeros on the boundary.
    template <typename F>
    static ScalarField sample(const Grid& grid, Bc bc, F&& f) {
        ScalarField out(grid, bc);
        for (int j = 0; j < grid.ny(); ++j)
            for (int i = 0; i < grid.nx(); ++i)
                out(i, j) = f(grid.x(i), grid.y(j));
        out.enforce_bc();
        return out;
    }

    [[nodiscard]] const Grid& grid() const noexcept { return grid_; }
    [[nodiscard]] Bc bc() const noexcept { return bc_; }
    void set_bc(Bc bc) noexcept { bc_ = bc; }
    [[nodiscard]] std::size_t size() const noexcept { return v_.size(); }

    double& operator()(int i, int j) noexcept { return v_[grid_.index(i, j)]; }
    double operator()(int i, int j) const noexcept { return v_[grid_.index(i, j)]; }
    double& operator[](std::size_t k) noexcept { return v_[k]; }
    double operator[](std::size_t k) const noexcept { return v_[k]; }

    [[nodiscard]] std::span<double> values() noexcept { return v_; }
    [[nodiscard]] std::span<const double> values() const noexcept { return v_; }

    /// Zeroes boundary nodes when the tag is DirichletZero; no-op otherwise.
    void enforce_bc() noexcept;
    void fill(double value) noexcept;
    [[nodiscard]] bool all_finite() const noexcept;

    ScalarField& operator+=(const ScalarField& o);
    ScalarField& operator-=(const ScalarField& o);
    ScalarField& operator*=(double s) noexcept;
    /// this += s * o
    ScalarField& axpy(double s, const ScalarField& o);

    friend ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
    friend ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
    friend ScalarField operator*(double s, ScalarField a) { return a *= s; }
    friend ScalarField operator*(ScalarField a, double s) { return a *= s; }

private:
    Grid grid_;
    Bc bc_ = Bc::DirichletZero;
    std::vector<double> v_;
};

/// Two-component nodal field; both components share one grid.
struct VectorField {
    ScalarField x;
    ScalarField y;

    VectorField() = default;
    explicit VectorField(const Grid& grid, Bc bc = Bc::DirichletZero);
    VectorField(ScalarField x_component, ScalarField y_component);

    template <typename F>
    static VectorField sample(const Grid& grid, Bc bc, F&& f) {
        VectorField out(grid, bc);
        for (int j = 0; j < grid.ny(); ++j)
            for (int i = 0; i < grid.nx(); ++i) {
                const auto v = f(grid.x(i), grid.y(j));
                out.x(i, j) = v[0];
                out.y(i, j) = v[1];
            }
        out.enforce_bc();
        return out;
    }

    [[nodiscard]] const Grid& grid() const noexcept { return x.grid(); }
    void enforce_bc() noexcept {
        x.enforce_bc();
        y.enforce_bc();
    }
    [[nodiscard]] bool all_finite() const noexcept { return x.all_finite() && y.all_finite(); }

    VectorField& operator+=(const VectorField& o);
    VectorField& operator-=(const VectorField& o);
    VectorField& operator*=(double s) noexcept;
    VectorField& axpy(double s, const VectorField& o);

    friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
    friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
    friend VectorField operator*(double s, VectorField a) { return a *= s; }
    friend VectorField operator*(VectorField a, double s) { return a *= s; }
};

/// Throws std::invalid_argument when the grids differ.
void require_same_grid(const Grid& a, const Grid& b);

/// Trapezoidal-rule approximation of the L2 inner product over the domain.
double inner(const ScalarField& a, const ScalarField& b);
double inner(const VectorField& a, const VectorField& b);

double norm_l2(const ScalarField& a);
double norm_l2(const VectorField& a);

/// L2 norm of the discrete gradient (central differences inside, one-sided
/// second-order differences on boundary nodes).
double norm_grad(const ScalarField& a);
double norm_grad(const VectorField& a);

/// Area-weighted mean.
double mean(const ScalarField& a);

/// a - mean(a). The result is tagged NeumannZero since a shifted field no
/// longer vanishes on the boundary.
ScalarField mean_zero_project(const ScalarField& a);

}  // namespace gsavbq
