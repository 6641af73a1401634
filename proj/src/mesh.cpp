#include "burgers/mesh.hpp"

#include <algorithm>
#include <cmath>

#include "burgers/errors.hpp"

namespace burgers {

Mesh1D::Mesh1D(double a, double b, std::size_t m) : a_(a), b_(b), m_(m) {
	if (!(b > a)) {
		throw ConfigError("mesh: right end must exceed left end");
	}
	if (m == 0) {
		throw ConfigError("mesh: need at least one element");
	}
	if (!std::isfinite(a) || !std::isfinite(b)) {
		throw ConfigError("mesh: endpoints must be finite");
	}
	nodes_.resize(m + 1);
	// affine blend keeps interior nodes exact where a, b and the ratio are
	// exactly representable (e.g. x = 0 on [-0.5, 0.5] with even m)
	for (std::size_t j = 0; j <= m; ++j) {
		double s = static_cast<double>(j) / static_cast<double>(m);
		nodes_[j] = a * (1.0 - s) + b * s;
	}
	nodes_.front() = a;
	nodes_.back() = b;
}

double Mesh1D::node(std::size_t j) const {
	if (j >= nodes_.size()) {
		throw DomainError("mesh: node index out of range");
	}
	return nodes_[j];
}

double Mesh1D::h(std::size_t e) const {
	if (e >= m_) {
		throw DomainError("mesh: element index out of range");
	}
	return nodes_[e + 1] - nodes_[e];
}

std::size_t Mesh1D::find_element(double x) const {
	if (x < a_ || x > b_) {
		throw DomainError("mesh: point outside the domain");
	}
	// first node strictly greater than x; clamp so x == b lands in the
	// last element
	auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
	std::size_t idx = static_cast<std::size_t>(it - nodes_.begin());
	if (idx == 0) {
		return 0;
	}
	std::size_t e = idx - 1;
	return std::min(e, m_ - 1);
}

Mesh1D build_uniform_mesh(double a, double b, std::size_t m) {
	return Mesh1D(a, b, m);
}

LocalBasis eval_local_basis(double sigma, double h) {
	if (!(h > 0.0)) {
		throw DomainError("basis: element length must be positive");
	}
	if (sigma < 0.0 || sigma > 1.0) {
		throw DomainError("basis: local coordinate outside [0, 1]");
	}
	LocalBasis lb;
	lb.psi = {1.0 - sigma, sigma};
	lb.dpsi = {-1.0 / h, 1.0 / h};
	return lb;
}

double interpolate(const Mesh1D& mesh, const std::vector<double>& nodal, double x) {
	if (nodal.size() != mesh.num_nodes()) {
		throw DomainError("interpolate: nodal array size does not match mesh");
	}
	std::size_t e = mesh.find_element(x);
	double h = mesh.h(e);
	double sigma = (x - mesh.node(e)) / h;
	sigma = std::clamp(sigma, 0.0, 1.0);
	LocalBasis lb = eval_local_basis(sigma, h);
	return lb.psi[0] * nodal[e] + lb.psi[1] * nodal[e + 1];
}

} // namespace burgers
