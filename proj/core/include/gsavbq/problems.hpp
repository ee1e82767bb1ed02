#pragma once

#include "gsavbq/problem.hpp"

namespace gsavbq {

/// Manufactured solution on (0,1)^2, T = pi:
///   u     = sin t (sin^2(2pi x) sin(2pi y) cos(2pi y), -sin(2pi x) cos(2pi x) sin^2(2pi y))
///   p = theta = sin t sin(2pi x) sin(2pi y)
/// with f2(theta) = (theta, 0) and f1, g chosen so these fields solve the
/// continuous equations. u is divergence-free and vanishes on the boundary.
ProblemSpec manufactured_spec(int n = 129, double nu = 1.0, double kappa = 1.0);

/// Closed-form forcing of the manufactured problem, exposed for residual checks.
Vec2 manufactured_f1(double t, double x, double y, double nu);
double manufactured_g(double t, double x, double y, double kappa);

/// Lock-exchange flow on (0,8)x(0,1): Re = 5000, Ri = 4, Pr = 1, T = 10,
/// insulated walls, theta0 a tanh step from 3/2 (x < 4) to 1 over one cell.
ProblemSpec marsigli_spec(int nx = 513, int ny = 65, double Re = 5000.0, double Ri = 4.0,
                          double Pr = 1.0);

/// Double shear layer on (-1,1)^2, nu = 0.005, no forcing, theta = 0.
ProblemSpec shear_layer_spec(int n = 65, double rho = 100.0, double delta = 0.5,
                             double nu = 0.005);

/// Zero data and zero forcing on the unit square; an exact fixed point.
ProblemSpec quiescent_spec(int n = 17);

}  // namespace gsavbq
