#ifndef BURGERS_ERROR_NORMS_HPP
#define BURGERS_ERROR_NORMS_HPP

#include <functional>
#include <vector>

#include "burgers/mesh.hpp"

namespace burgers {

using ExactFn = std::function<double(double x, double t)>;

// how discrete errors against the exact evaluator are measured:
//   quadrature  L2 of the interpolant error by per-element Gauss rule,
//               Linf sampled at nodes and element midpoints
//   nodal       L2 as sqrt(h * sum e_j^2), Linf over nodes only
enum class NormMode { quadrature, nodal };

struct ErrorReport {
	double l2 = 0.0;
	double linf = 0.0;
	// log10 of the above; -inf when the norm is exactly zero
	double log10_l2 = 0.0;
	double log10_linf = 0.0;
};

ErrorReport compute_errors(const Mesh1D& mesh, const std::vector<double>& u_h,
                           const ExactFn& exact, double t, NormMode mode);

// norms of the exact solution itself in the same measure, for relative
// diagnostics
ErrorReport compute_exact_norms(const Mesh1D& mesh, const ExactFn& exact,
                                double t, NormMode mode);

// sum of absolute nodal jumps of a profile; oscillation diagnostic
double total_variation(const std::vector<double>& values);

} // namespace burgers

#endif
