#ifndef BURGERS_MESH_HPP
#define BURGERS_MESH_HPP

#include <array>
#include <cstddef>
#include <vector>

namespace burgers {

// values and physical derivatives of the two hat functions restricted to one
// element, evaluated at local coordinate sigma in [0, 1]
struct LocalBasis {
	std::array<double, 2> psi;
	std::array<double, 2> dpsi;
};

// uniform partition of [a, b] into m linear elements (m + 1 nodes)
class Mesh1D {
public:
	Mesh1D(double a, double b, std::size_t m);

	std::size_t num_elements() const { return m_; }
	std::size_t num_nodes() const { return m_ + 1; }
	double a() const { return a_; }
	double b() const { return b_; }
	const std::vector<double>& nodes() const { return nodes_; }
	double node(std::size_t j) const;
	// length of element e, the interval [node(e), node(e+1)]
	double h(std::size_t e) const;
	// element containing x; x == b maps to the last element
	std::size_t find_element(double x) const;

private:
	double a_, b_;
	std::size_t m_;
	std::vector<double> nodes_;
};

Mesh1D build_uniform_mesh(double a, double b, std::size_t m);

LocalBasis eval_local_basis(double sigma, double h);

// piecewise-linear interpolant of nodal values, evaluated at x
double interpolate(const Mesh1D& mesh, const std::vector<double>& nodal, double x);

} // namespace burgers

#endif
