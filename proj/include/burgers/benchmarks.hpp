#ifndef BURGERS_BENCHMARKS_HPP
#define BURGERS_BENCHMARKS_HPP

#include <string>
#include <vector>

#include "burgers/mesh.hpp"

namespace burgers {

// closed-form benchmark problems for u_t + u u_x = eps u_xx, eps = 1/Re,
// with homogeneous source and Dirichlet ends
struct BenchmarkCase {
	std::string name;
	double a, b;       // domain
	double re;         // Reynolds number; eps = 1 / re
	double bc_left, bc_right;
	// decaying sine wave parameters (example1)
	double k = 2.0;
	// traveling front parameters (example2): left plateau u_hi, right
	// plateau u_lo, nodal value at the initial jump
	double u_lo = 0.5, u_hi = 1.5;
	double jump_value = 1.0;

	double eps() const { return 1.0 / re; }
};

// decaying sine wave on [0, 1]: u = 2 eps pi e^{-pi^2 eps t} sin(pi x) /
// (k + e^{-pi^2 eps t} cos(pi x)), zero at both ends
BenchmarkCase make_example1(double re = 1e5, double k = 2.0);

// right-moving viscous front on [-0.5, 0.5]: plateaus u_hi (left) and u_lo
// (right) joined by a tanh layer moving at speed (u_lo + u_hi) / 2
BenchmarkCase make_example2(double re = 1e4, double u_lo = 0.5, double u_hi = 1.5);

BenchmarkCase make_case(const std::string& name, double re);

double example1_exact(const BenchmarkCase& c, double x, double t);
double example2_exact(const BenchmarkCase& c, double x, double t);
double exact_solution(const BenchmarkCase& c, double x, double t);

// nodal initial data; v (the gradient variable of the least-squares
// formulation) is filled from element-averaged interpolant slopes when
// with_gradient is set
struct InitialField {
	std::vector<double> u, v;
};

InitialField initial_field(const BenchmarkCase& c, const Mesh1D& mesh,
                           bool with_gradient);

} // namespace burgers

#endif
