#ifndef BURGERS_ASSEMBLY_HPP
#define BURGERS_ASSEMBLY_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "burgers/block_tridiag.hpp"
#include "burgers/mesh.hpp"
#include "burgers/pade_time.hpp"

namespace burgers {

using SourceFn = std::function<double(double x, double t)>;

// how the frozen convection coefficient of an element is taken from the
// previous step's field
enum class LinearizationMode { element_mean, upwind_node };

// per-element frozen coefficients for one step
struct ElementCoeffs {
	std::vector<double> u_elem; // frozen convection speed
	std::vector<double> eta;    // u_elem / h
	std::vector<double> zeta;   // eps / h^2
};

ElementCoeffs linearize(const Mesh1D& mesh, const std::vector<double>& u_prev,
                        double eps, LinearizationMode mode);

// semi-discrete pair for scalar-unknown formulations: M du/dt + K u = F
struct OperatorPair {
	Tridiag mass, stiffness;
};

OperatorPair assemble_galerkin(const Mesh1D& mesh, const ElementCoeffs& coeffs,
                               double eps);

// streamline stabilization weight for one element
double compute_tau(double u_elem, double h, double eps);

struct SupgOptions {
	// include the stabilization of the transient term (perturbs the mass
	// matrix); the plain steady stabilization is always on
	bool mass_perturbation = true;
};

OperatorPair assemble_supg(const Mesh1D& mesh, const ElementCoeffs& coeffs,
                           double eps, const SupgOptions& options);

// nodal load int f(x, t) phi_i dx by two-point Gauss; zero field if !f
std::vector<double> assemble_load(const Mesh1D& mesh, const SourceFn& f, double t);

// adds the streamline part tau u_elem int f psi_i' to the plain load
std::vector<double> assemble_supg_load(const Mesh1D& mesh, const ElementCoeffs& coeffs,
                                       double eps, const SourceFn& f, double t);

// least-squares formulation in the first-order variables (u, v = u_x).
// minimizing the squared residual of the stepped equations over each step
// yields normal equations whose node blocks are built from the pieces below
// (2 x 2 per node: component 0 is u, component 1 is v):
//   a_t  temporal term normal product (u rows, u columns)
//   b    cross product of the temporal term with the spatial operator
//        (u test rows, v trial columns)
//   c    spatial operator normal product (v rows, v columns)
//   d    compatibility residual (v - u_x) normal product (all components)
// the stage matrix is
//   delta_kj a_t / dt^2 + W_kj b / dt + W_jk b^T / dt + (W^T W)_kj c + delta_kj d
struct LsqOperators {
	explicit LsqOperators(std::size_t n_nodes)
		: a_t(n_nodes, 2), b(n_nodes, 2), c(n_nodes, 2), d(n_nodes, 2) {}
	BlockTridiag a_t, b, c, d;

	// aggregate views used by property checks: the evolution pair analogous
	// to (M, K) of the scalar formulations
	BlockTridiag mass() const;
	BlockTridiag stiffness() const;
};

LsqOperators assemble_lsq(const Mesh1D& mesh, const ElementCoeffs& coeffs, double eps);

// load functionals of a scalar field g for the two residual weights:
//   lu_i = int g phi_i               (temporal weight)
//   lv_i = int g (u_elem phi_i - eps phi_i')   (spatial weight)
// g given elementwise at the two Gauss points
struct LsqLoads {
	std::vector<double> lu, lv;
};

// loads of g = f(., t) - (u_elem v - eps v_x) for the step-start residual
LsqLoads assemble_lsq_residual_load(const Mesh1D& mesh, const ElementCoeffs& coeffs,
                                    double eps, const std::vector<double>& v_n,
                                    const SourceFn& f, double t);

// loads of f(., t) alone, for the stage source differences
LsqLoads assemble_lsq_source_load(const Mesh1D& mesh, const ElementCoeffs& coeffs,
                                  double eps, const SourceFn& f, double t);

// stage system of the least-squares normal equations; node blocks of size
// 2 * n_stages, dof layout (stage, component) with component 0 = u, 1 = v.
// df_loads may be empty when the source is constant over the step
StageSystem build_lsq_stage_system(const TimeScheme& scheme, double dt,
                                   const LsqOperators& ops, const LsqLoads& residual_load,
                                   const std::vector<LsqLoads>& df_loads);

// one least-squares step; updates u and v in place, pinning u increments at
// the Dirichlet nodes
void advance_lsq(const TimeScheme& scheme, double dt, const LsqOperators& ops,
                 const LsqLoads& residual_load, const std::vector<LsqLoads>& df_loads,
                 const std::vector<std::size_t>& dirichlet_nodes,
                 std::vector<double>& u, std::vector<double>& v);

} // namespace burgers

#endif
