#include "burgers/error_norms.hpp"

#include <cmath>
#include <limits>

#include "burgers/errors.hpp"

namespace burgers {

namespace {

// four-point Gauss rule on the unit interval; offsets from 1/2 are
// sqrt((3 +- 2 sqrt(6/5)) / 7) / 2
constexpr double kNodes[4] = {
	0.5 - 0.43056815579702628761,
	0.5 - 0.16999052179242812542,
	0.5 + 0.16999052179242812542,
	0.5 + 0.43056815579702628761,
};
constexpr double kWeights[4] = {
	0.5 * 0.34785484513745385737,
	0.5 * 0.65214515486254614263,
	0.5 * 0.65214515486254614263,
	0.5 * 0.34785484513745385737,
};

double safe_log10(double v) {
	if (v == 0.0) {
		return -std::numeric_limits<double>::infinity();
	}
	return std::log10(v);
}

ErrorReport finish(double l2_sq, double linf) {
	ErrorReport r;
	r.l2 = std::sqrt(l2_sq);
	r.linf = linf;
	r.log10_l2 = safe_log10(r.l2);
	r.log10_linf = safe_log10(r.linf);
	return r;
}

ErrorReport measure(const Mesh1D& mesh, const std::vector<double>* u_h,
                    const ExactFn& exact, double t, NormMode mode) {
	const std::size_t n = mesh.num_nodes();
	if (u_h && u_h->size() != n) {
		throw DomainError("error norms: state size does not match mesh");
	}
	auto diff_at_node = [&](std::size_t j) {
		double e = exact(mesh.node(j), t);
		return u_h ? (*u_h)[j] - e : -e;
	};

	if (mode == NormMode::nodal) {
		double l2_sq = 0.0, linf = 0.0;
		double h = (mesh.b() - mesh.a()) / static_cast<double>(mesh.num_elements());
		for (std::size_t j = 0; j < n; ++j) {
			double d = diff_at_node(j);
			l2_sq += h * d * d;
			linf = std::max(linf, std::fabs(d));
		}
		return finish(l2_sq, linf);
	}

	// quadrature mode: L2 of the interpolant error elementwise, Linf over
	// nodes and element midpoints
	double l2_sq = 0.0, linf = 0.0;
	for (std::size_t j = 0; j < n; ++j) {
		linf = std::max(linf, std::fabs(diff_at_node(j)));
	}
	for (std::size_t e = 0; e < mesh.num_elements(); ++e) {
		double h = mesh.h(e);
		double x0 = mesh.node(e);
		double ul = u_h ? (*u_h)[e] : 0.0;
		double ur = u_h ? (*u_h)[e + 1] : 0.0;
		for (int g = 0; g < 4; ++g) {
			double sigma = kNodes[g];
			double x = x0 + sigma * h;
			double d = (1.0 - sigma) * ul + sigma * ur - exact(x, t);
			l2_sq += h * kWeights[g] * d * d;
		}
		double xm = x0 + 0.5 * h;
		double dm = 0.5 * (ul + ur) - exact(xm, t);
		linf = std::max(linf, std::fabs(dm));
	}
	return finish(l2_sq, linf);
}

} // namespace

ErrorReport compute_errors(const Mesh1D& mesh, const std::vector<double>& u_h,
                           const ExactFn& exact, double t, NormMode mode) {
	if (!exact) {
		throw DomainError("error norms: missing exact evaluator");
	}
	return measure(mesh, &u_h, exact, t, mode);
}

ErrorReport compute_exact_norms(const Mesh1D& mesh, const ExactFn& exact,
                                double t, NormMode mode) {
	if (!exact) {
		throw DomainError("error norms: missing exact evaluator");
	}
	return measure(mesh, nullptr, exact, t, mode);
}

double total_variation(const std::vector<double>& values) {
	double tv = 0.0;
	for (std::size_t j = 0; j + 1 < values.size(); ++j) {
		tv += std::fabs(values[j + 1] - values[j]);
	}
	return tv;
}

} // namespace burgers
