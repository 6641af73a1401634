#ifndef BURGERS_PADE_TIME_HPP
#define BURGERS_PADE_TIME_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "burgers/block_tridiag.hpp"

namespace burgers {

// rational approximant of e^h with integer coefficients, constant term first,
// scaled so that both polynomials share the smallest integer representation
struct PadeRational {
	int deg_num, deg_den;
	std::vector<std::int64_t> num, den;
};

// Pade table entry R_LM of the exponential, 0 <= L, M <= 3
PadeRational pade_coefficients(int l, int m);

// evaluate R_LM at h; throws PoleError when the canonical denominator
// (normalized to 1 at h = 0) is below 1e-14 in magnitude
double pade_eval(int l, int m, double h);

// implicit one-step integrators used by the solver: the diagonal Pade pair
enum class Integrator { r11, r22 };

// stepped form of du/dt + L u = f over one step:
//   (I/dt + W L) DU = w (f^n - L u^n) + W Df,   u^{n+1} = u^n + sum_s DU_s
// with one row per stage; stage_time[s] is the fraction of dt where stage s
// sits, used to evaluate time-dependent sources
struct TimeScheme {
	Integrator id;
	std::size_t n_stages;
	std::array<std::array<double, 2>, 2> w_matrix;
	std::array<double, 2> w_vector;
	std::array<double, 2> stage_time;
};

TimeScheme make_scheme(Integrator id);

// assembled stage system: block tridiagonal matrix over all stages plus rhs
struct StageSystem {
	StageSystem(std::size_t n_blocks, std::size_t block_size)
		: matrix(n_blocks, block_size), rhs(n_blocks * block_size, 0.0) {}
	BlockTridiag matrix;
	std::vector<double> rhs;
};

// stage system for a scalar-unknown semi-discrete form M du/dt + K u = F:
// node blocks of size n_stages, block (s, s') = M/dt delta + W[s][s'] K.
// f_n is F at the step start; f_stage[s] is F at the stage times (pass an
// empty vector when F is constant over the step, the Df terms then vanish)
StageSystem build_stage_system(const TimeScheme& scheme, double dt,
                               const Tridiag& mass, const Tridiag& stiffness,
                               const std::vector<double>& u_n,
                               const std::vector<double>& f_n,
                               const std::vector<std::vector<double>>& f_stage);

// pin increments of the listed global dofs to zero, keeping the matrix
// symmetric when asked (row and column elimination; increments are zero so
// no rhs compensation is needed)
void apply_dirichlet(StageSystem& system, const std::vector<std::size_t>& dofs,
                     bool symmetric);

// solve the stage system and accumulate stage increments onto u (the first
// `stride` dofs of each node block map to u components in order)
void accumulate_stages(const TimeScheme& scheme, const std::vector<double>& stage_solution,
                       std::size_t components, std::vector<double>& u);

// one step of M du/dt + K u = F with Dirichlet nodes pinned; returns u^{n+1}
std::vector<double> advance(const TimeScheme& scheme, double dt,
                            const Tridiag& mass, const Tridiag& stiffness,
                            const std::vector<double>& u_n,
                            const std::vector<double>& f_n,
                            const std::vector<std::vector<double>>& f_stage,
                            const std::vector<std::size_t>& dirichlet_nodes);

} // namespace burgers

#endif
