#include "burgers/benchmarks.hpp"

#include <algorithm>
#include <cmath>

#include "burgers/errors.hpp"

namespace burgers {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_re(double re) {
	if (!(re > 0.0) || !std::isfinite(re)) {
		throw ConfigError("benchmark: Reynolds number must be positive and finite");
	}
}

} // namespace

BenchmarkCase make_example1(double re, double k) {
	check_re(re);
	if (!(k > 1.0)) {
		throw ConfigError("benchmark: shape parameter must exceed 1");
	}
	BenchmarkCase c;
	c.name = "example1";
	c.a = 0.0;
	c.b = 1.0;
	c.re = re;
	c.k = k;
	c.bc_left = 0.0;
	c.bc_right = 0.0;
	return c;
}

BenchmarkCase make_example2(double re, double u_lo, double u_hi) {
	check_re(re);
	if (!(u_hi > u_lo)) {
		throw ConfigError("benchmark: left plateau must exceed right plateau");
	}
	BenchmarkCase c;
	c.name = "example2";
	c.a = -0.5;
	c.b = 0.5;
	c.re = re;
	c.u_lo = u_lo;
	c.u_hi = u_hi;
	c.jump_value = 0.5 * (u_lo + u_hi);
	// compressive front: high plateau upstream (left), low downstream
	c.bc_left = u_hi;
	c.bc_right = u_lo;
	return c;
}

BenchmarkCase make_case(const std::string& name, double re) {
	if (name == "example1") {
		return make_example1(re);
	}
	if (name == "example2") {
		return make_example2(re);
	}
	throw ConfigError("benchmark: unknown case '" + name + "'");
}

double example1_exact(const BenchmarkCase& c, double x, double t) {
	double eps = c.eps();
	double decay = std::exp(-kPi * kPi * eps * t);
	double num = 2.0 * eps * kPi * decay * std::sin(kPi * x);
	double den = c.k + decay * std::cos(kPi * x);
	return num / den;
}

double example2_exact(const BenchmarkCase& c, double x, double t) {
	double du = c.u_hi - c.u_lo;
	double speed = 0.5 * (c.u_lo + c.u_hi);
	// exponent grows with x: profile falls from u_hi to u_lo through a
	// layer of width ~ 1 / (re du) around x = speed t
	double q = 0.5 * c.re * du * (x - speed * t);
	q = std::clamp(q, -700.0, 700.0);
	return c.u_lo + du / (1.0 + std::exp(q));
}

double exact_solution(const BenchmarkCase& c, double x, double t) {
	if (c.name == "example1") {
		return example1_exact(c, x, t);
	}
	if (c.name == "example2") {
		return example2_exact(c, x, t);
	}
	throw ConfigError("benchmark: unknown case '" + c.name + "'");
}

InitialField initial_field(const BenchmarkCase& c, const Mesh1D& mesh,
                           bool with_gradient) {
	const std::size_t n = mesh.num_nodes();
	InitialField field;
	field.u.resize(n);
	if (c.name == "example1") {
		for (std::size_t j = 0; j < n; ++j) {
			field.u[j] = example1_exact(c, mesh.node(j), 0.0);
		}
	} else if (c.name == "example2") {
		// staircase initial data: the front is a jump at x = 0, nodes
		// sitting on it (within rounding) take the prescribed jump value
		double tol = 1e-12 * (mesh.b() - mesh.a());
		for (std::size_t j = 0; j < n; ++j) {
			double x = mesh.node(j);
			if (std::fabs(x) <= tol) {
				field.u[j] = c.jump_value;
			} else {
				field.u[j] = (x < 0.0) ? c.u_hi : c.u_lo;
			}
		}
	} else {
		throw ConfigError("benchmark: unknown case '" + c.name + "'");
	}
	field.u.front() = c.bc_left;
	field.u.back() = c.bc_right;

	if (with_gradient) {
		// element-averaged interpolant slopes; single slope at the ends
		field.v.assign(n, 0.0);
		std::vector<double> slope(mesh.num_elements());
		for (std::size_t e = 0; e < mesh.num_elements(); ++e) {
			slope[e] = (field.u[e + 1] - field.u[e]) / mesh.h(e);
		}
		field.v.front() = slope.front();
		field.v.back() = slope.back();
		for (std::size_t j = 1; j + 1 < n; ++j) {
			field.v[j] = 0.5 * (slope[j - 1] + slope[j]);
		}
	}
	return field;
}

} // namespace burgers
