#include "burgers/assembly.hpp"

#include <array>
#include <cmath>

#include "burgers/errors.hpp"

namespace burgers {

namespace {

// two-point Gauss rule on the unit interval
constexpr double kGaussA = 0.5 - 0.28867513459481288225; // 1/(2 sqrt(3))
constexpr double kGaussB = 0.5 + 0.28867513459481288225;
constexpr std::array<double, 2> kGaussSigma = {kGaussA, kGaussB};

// reference element matrices for linear hats psi1 = 1 - sigma, psi2 = sigma:
//   mass_ij   = int psi_i psi_j dx        = h/6 * [[2,1],[1,2]]
//   pmat_ij   = int psi_i' psi_j dx       = [[-1/2,-1/2],[1/2,1/2]]
//   smat_ij   = int psi_i' psi_j' dx      = 1/h * [[1,-1],[-1,1]]
struct ElementBlocks {
	double mass[2][2];
	double pmat[2][2];
	double smat[2][2];
};

ElementBlocks reference_blocks(double h) {
	ElementBlocks e;
	e.mass[0][0] = e.mass[1][1] = h / 3.0;
	e.mass[0][1] = e.mass[1][0] = h / 6.0;
	e.pmat[0][0] = e.pmat[0][1] = -0.5;
	e.pmat[1][0] = e.pmat[1][1] = 0.5;
	e.smat[0][0] = e.smat[1][1] = 1.0 / h;
	e.smat[0][1] = e.smat[1][0] = -1.0 / h;
	return e;
}

void scatter(Tridiag& t, std::size_t e, const double blk[2][2]) {
	t.di[e] += blk[0][0];
	t.up[e] += blk[0][1];
	t.lo[e + 1] += blk[1][0];
	t.di[e + 1] += blk[1][1];
}

// scatter a 2-node element contribution of one (row component, column
// component) pair into a node-blocked matrix with bs = 2
void scatter_block(BlockTridiag& m, std::size_t e, std::size_t p, std::size_t q,
                   const double blk[2][2]) {
	m.diag(e)[p * 2 + q] += blk[0][0];
	m.sup(e)[p * 2 + q] += blk[0][1];
	m.sub(e + 1)[p * 2 + q] += blk[1][0];
	m.diag(e + 1)[p * 2 + q] += blk[1][1];
}

void check_coeffs(const Mesh1D& mesh, const ElementCoeffs& coeffs) {
	if (coeffs.u_elem.size() != mesh.num_elements()) {
		throw DomainError("assembly: coefficient array does not match mesh");
	}
}

} // namespace

ElementCoeffs linearize(const Mesh1D& mesh, const std::vector<double>& u_prev,
                        double eps, LinearizationMode mode) {
	if (u_prev.size() != mesh.num_nodes()) {
		throw DomainError("linearize: state size does not match mesh");
	}
	if (eps < 0.0) {
		throw DomainError("linearize: negative viscosity");
	}
	const std::size_t m = mesh.num_elements();
	ElementCoeffs c;
	c.u_elem.resize(m);
	c.eta.resize(m);
	c.zeta.resize(m);
	for (std::size_t e = 0; e < m; ++e) {
		double mean = 0.5 * (u_prev[e] + u_prev[e + 1]);
		double frozen = mean;
		if (mode == LinearizationMode::upwind_node) {
			frozen = (mean >= 0.0) ? u_prev[e] : u_prev[e + 1];
		}
		double h = mesh.h(e);
		c.u_elem[e] = frozen;
		c.eta[e] = frozen / h;
		c.zeta[e] = eps / (h * h);
	}
	return c;
}

OperatorPair assemble_galerkin(const Mesh1D& mesh, const ElementCoeffs& coeffs,
                               double eps) {
	check_coeffs(mesh, coeffs);
	const std::size_t n = mesh.num_nodes();
	OperatorPair out{Tridiag(n), Tridiag(n)};
	for (std::size_t e = 0; e < mesh.num_elements(); ++e) {
		double h = mesh.h(e);
		double ue = coeffs.u_elem[e];
		ElementBlocks rb = reference_blocks(h);
		scatter(out.mass, e, rb.mass);
		// convection int phi_i (ue phi_j') = ue * pmat^T, diffusion eps * smat
		double k[2][2];
		for (int i = 0; i < 2; ++i) {
			for (int j = 0; j < 2; ++j) {
				k[i][j] = ue * rb.pmat[j][i] + eps * rb.smat[i][j];
			}
		}
		scatter(out.stiffness, e, k);
	}
	return out;
}

double compute_tau(double u_elem, double h, double eps) {
	if (!(h > 0.0)) {
		throw DomainError("tau: element length must be positive");
	}
	double adv = 2.0 * u_elem / h;
	double dif = 4.0 * eps / (h * h);
	double s = adv * adv + 9.0 * dif * dif;
	if (s <= 0.0) {
		throw DomainError("tau: stabilization undefined for zero speed and viscosity");
	}
	return 1.0 / std::sqrt(s);
}

OperatorPair assemble_supg(const Mesh1D& mesh, const ElementCoeffs& coeffs,
                           double eps, const SupgOptions& options) {
	check_coeffs(mesh, coeffs);
	OperatorPair out = assemble_galerkin(mesh, coeffs, eps);
	for (std::size_t e = 0; e < mesh.num_elements(); ++e) {
		double h = mesh.h(e);
		double ue = coeffs.u_elem[e];
		double tau = compute_tau(ue, h, eps);
		ElementBlocks rb = reference_blocks(h);
		// streamline weight tau ue psi_i' against the residual's parts; the
		// second derivative of linear hats vanishes, so only convection
		// (and optionally the transient term) contribute
		double kst[2][2];
		for (int i = 0; i < 2; ++i) {
			for (int j = 0; j < 2; ++j) {
				kst[i][j] = tau * ue * ue * rb.smat[i][j];
			}
		}
		scatter(out.stiffness, e, kst);
		if (options.mass_perturbation) {
			double mst[2][2];
			for (int i = 0; i < 2; ++i) {
				for (int j = 0; j < 2; ++j) {
					mst[i][j] = tau * ue * rb.pmat[i][j];
				}
			}
			scatter(out.mass, e, mst);
		}
	}
	return out;
}

std::vector<double> assemble_load(const Mesh1D& mesh, const SourceFn& f, double t) {
	std::vector<double> load(mesh.num_nodes(), 0.0);
	if (!f) {
		return load;
	}
	for (std::size_t e = 0; e < mesh.num_elements(); ++e) {
		double h = mesh.h(e);
		double x0 = mesh.node(e);
		for (double sigma : kGaussSigma) {
			double x = x0 + sigma * h;
			double w = 0.5 * h * f(x, t);
			load[e] += w * (1.0 - sigma);
			load[e + 1] += w * sigma;
		}
	}
	return load;
}

std::vector<double> assemble_supg_load(const Mesh1D& mesh, const ElementCoeffs& coeffs,
                                       double eps, const SourceFn& f, double t) {
	check_coeffs(mesh, coeffs);
	std::vector<double> load = assemble_load(mesh, f, t);
	if (!f) {
		return load;
	}
	for (std::size_t e = 0; e < mesh.num_elements(); ++e) {
		double h = mesh.h(e);
		double ue = coeffs.u_elem[e];
		double tau = compute_tau(ue, h, eps);
		double x0 = mesh.node(e);
		for (double sigma : kGaussSigma) {
			double x = x0 + sigma * h;
			// int f tau ue psi_i' with dpsi = -+ 1/h and weight h/2
			double w = 0.5 * tau * ue * f(x, t);
			load[e] -= w;
			load[e + 1] += w;
		}
	}
	return load;
}

BlockTridiag LsqOperators::mass() const {
	return a_t;
}

BlockTridiag LsqOperators::stiffness() const {
	BlockTridiag k = c;
	const std::size_t nb = k.n_blocks();
	const std::size_t bs2 = k.block_size() * k.block_size();
	for (std::size_t i = 0; i < nb; ++i) {
		for (std::size_t e = 0; e < bs2; ++e) {
			k.diag(i)[e] += d.diag(i)[e];
			k.sub(i)[e] += d.sub(i)[e];
			k.sup(i)[e] += d.sup(i)[e];
		}
	}
	return k;
}

LsqOperators assemble_lsq(const Mesh1D& mesh, const ElementCoeffs& coeffs, double eps) {
	check_coeffs(mesh, coeffs);
	LsqOperators ops(mesh.num_nodes());
	for (std::size_t e = 0; e < mesh.num_elements(); ++e) {
		double h = mesh.h(e);
		double ue = coeffs.u_elem[e];
		ElementBlocks rb = reference_blocks(h);

		// temporal normal product (u, u)
		scatter_block(ops.a_t, e, 0, 0, rb.mass);

		// cross product of the temporal weight with the spatial operator
		// acting on v: b_ij = int phi_i (ue phi_j - eps phi_j')
		double b[2][2];
		for (int i = 0; i < 2; ++i) {
			for (int j = 0; j < 2; ++j) {
				b[i][j] = ue * rb.mass[i][j] - eps * rb.pmat[j][i];
			}
		}
		scatter_block(ops.b, e, 0, 1, b);

		// spatial operator normal product (v, v):
		// int (ue phi_i - eps phi_i')(ue phi_j - eps phi_j')
		double c[2][2];
		for (int i = 0; i < 2; ++i) {
			for (int j = 0; j < 2; ++j) {
				c[i][j] = ue * ue * rb.mass[i][j] + eps * eps * rb.smat[i][j]
				        - ue * eps * (rb.pmat[i][j] + rb.pmat[j][i]);
			}
		}
		scatter_block(ops.c, e, 1, 1, c);

		// compatibility residual (v - u_x) normal product
		double duv[2][2], dvu[2][2];
		for (int i = 0; i < 2; ++i) {
			for (int j = 0; j < 2; ++j) {
				duv[i][j] = -rb.pmat[i][j];
				dvu[i][j] = -rb.pmat[j][i];
			}
		}
		scatter_block(ops.d, e, 0, 0, rb.smat);
		scatter_block(ops.d, e, 0, 1, duv);
		scatter_block(ops.d, e, 1, 0, dvu);
		scatter_block(ops.d, e, 1, 1, rb.mass);
	}
	return ops;
}

namespace {

// accumulate the two load functionals of a scalar field given at the Gauss
// points of one element
void lsq_load_element(LsqLoads& out, std::size_t e, double h, double ue, double eps,
                      const std::array<double, 2>& g_at_gauss) {
	for (int gp = 0; gp < 2; ++gp) {
		double sigma = kGaussSigma[gp];
		double w = 0.5 * h * g_at_gauss[gp];
		double psi[2] = {1.0 - sigma, sigma};
		double dpsi[2] = {-1.0 / h, 1.0 / h};
		for (int i = 0; i < 2; ++i) {
			out.lu[e + i] += w * psi[i];
			out.lv[e + i] += w * (ue * psi[i] - eps * dpsi[i]);
		}
	}
}

} // namespace

LsqLoads assemble_lsq_residual_load(const Mesh1D& mesh, const ElementCoeffs& coeffs,
                                    double eps, const std::vector<double>& v_n,
                                    const SourceFn& f, double t) {
	check_coeffs(mesh, coeffs);
	if (v_n.size() != mesh.num_nodes()) {
		throw DomainError("lsq load: gradient state size does not match mesh");
	}
	const std::size_t n = mesh.num_nodes();
	LsqLoads out{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
	for (std::size_t e = 0; e < mesh.num_elements(); ++e) {
		double h = mesh.h(e);
		double ue = coeffs.u_elem[e];
		double dv = (v_n[e + 1] - v_n[e]) / h;
		double x0 = mesh.node(e);
		std::array<double, 2> g;
		for (int gp = 0; gp < 2; ++gp) {
			double sigma = kGaussSigma[gp];
			double vg = (1.0 - sigma) * v_n[e] + sigma * v_n[e + 1];
			double fg = f ? f(x0 + sigma * h, t) : 0.0;
			g[gp] = fg - (ue * vg - eps * dv);
		}
		lsq_load_element(out, e, h, ue, eps, g);
	}
	return out;
}

LsqLoads assemble_lsq_source_load(const Mesh1D& mesh, const ElementCoeffs& coeffs,
                                  double eps, const SourceFn& f, double t) {
	check_coeffs(mesh, coeffs);
	const std::size_t n = mesh.num_nodes();
	LsqLoads out{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
	if (!f) {
		return out;
	}
	for (std::size_t e = 0; e < mesh.num_elements(); ++e) {
		double h = mesh.h(e);
		double x0 = mesh.node(e);
		std::array<double, 2> g;
		for (int gp = 0; gp < 2; ++gp) {
			g[gp] = f(x0 + kGaussSigma[gp] * h, t);
		}
		lsq_load_element(out, e, h, coeffs.u_elem[e], eps, g);
	}
	return out;
}

namespace {

const double* piece_block(const BlockTridiag& m, std::size_t i, int delta) {
	if (delta < 0) {
		return m.sub(i);
	}
	if (delta == 0) {
		return m.diag(i);
	}
	return m.sup(i);
}

} // namespace

StageSystem build_lsq_stage_system(const TimeScheme& scheme, double dt,
                                   const LsqOperators& ops, const LsqLoads& residual_load,
                                   const std::vector<LsqLoads>& df_loads) {
	const std::size_t n = ops.a_t.n_blocks();
	const std::size_t ns = scheme.n_stages;
	if (!(dt > 0.0)) {
		throw ConfigError("lsq stage system: step size must be positive");
	}
	if (residual_load.lu.size() != n || residual_load.lv.size() != n) {
		throw DomainError("lsq stage system: load size mismatch");
	}
	if (!df_loads.empty() && df_loads.size() != ns) {
		throw DomainError("lsq stage system: need one source difference per stage");
	}

	const double idt = 1.0 / dt;
	// stage couplings: wtw = W^T W, wtv = W^T w
	double wtw[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
	double wtv[2] = {0.0, 0.0};
	for (std::size_t k = 0; k < ns; ++k) {
		for (std::size_t j = 0; j < ns; ++j) {
			for (std::size_t s = 0; s < ns; ++s) {
				wtw[k][j] += scheme.w_matrix[s][k] * scheme.w_matrix[s][j];
			}
		}
		for (std::size_t s = 0; s < ns; ++s) {
			wtv[k] += scheme.w_matrix[s][k] * scheme.w_vector[s];
		}
	}

	const std::size_t bs = 2 * ns;
	StageSystem sys(n, bs);
	for (std::size_t i = 0; i < n; ++i) {
		for (int delta = -1; delta <= 1; ++delta) {
			if ((delta < 0 && i == 0) || (delta > 0 && i + 1 == n)) {
				continue;
			}
			std::size_t neighbor = static_cast<std::size_t>(static_cast<long>(i) + delta);
			const double* at = piece_block(ops.a_t, i, delta);
			const double* bb = piece_block(ops.b, i, delta);
			// transpose block: b at (i + delta, i), components swapped
			const double* bt = piece_block(ops.b, neighbor, -delta);
			const double* cc = piece_block(ops.c, i, delta);
			const double* dd = piece_block(ops.d, i, delta);
			double* target = (delta < 0)   ? sys.matrix.sub(i)
			                 : (delta == 0) ? sys.matrix.diag(i)
			                                : sys.matrix.sup(i);
			for (std::size_t k = 0; k < ns; ++k) {
				for (std::size_t j = 0; j < ns; ++j) {
					double wkj = scheme.w_matrix[k][j];
					double wjk = scheme.w_matrix[j][k];
					double same = (k == j) ? 1.0 : 0.0;
					for (std::size_t p = 0; p < 2; ++p) {
						for (std::size_t q = 0; q < 2; ++q) {
							double val = same * (idt * idt * at[p * 2 + q] + dd[p * 2 + q])
							           + idt * wkj * bb[p * 2 + q]
							           + idt * wjk * bt[q * 2 + p]
							           + wtw[k][j] * cc[p * 2 + q];
							target[(k * 2 + p) * bs + (j * 2 + q)] = val;
						}
					}
				}
			}
		}
	}

	for (std::size_t i = 0; i < n; ++i) {
		for (std::size_t k = 0; k < ns; ++k) {
			double ru = scheme.w_vector[k] * residual_load.lu[i];
			double rv = wtv[k] * residual_load.lv[i];
			if (!df_loads.empty()) {
				for (std::size_t j = 0; j < ns; ++j) {
					ru += scheme.w_matrix[k][j] * df_loads[j].lu[i];
					rv += wtw[k][j] * df_loads[j].lv[i];
				}
			}
			sys.rhs[i * bs + k * 2 + 0] = idt * ru;
			sys.rhs[i * bs + k * 2 + 1] = rv;
		}
	}
	return sys;
}

void advance_lsq(const TimeScheme& scheme, double dt, const LsqOperators& ops,
                 const LsqLoads& residual_load, const std::vector<LsqLoads>& df_loads,
                 const std::vector<std::size_t>& dirichlet_nodes,
                 std::vector<double>& u, std::vector<double>& v) {
	const std::size_t n = ops.a_t.n_blocks();
	if (u.size() != n || v.size() != n) {
		throw DomainError("lsq advance: state size mismatch");
	}
	StageSystem sys = build_lsq_stage_system(scheme, dt, ops, residual_load, df_loads);
	const std::size_t bs = 2 * scheme.n_stages;
	std::vector<std::size_t> dofs;
	for (std::size_t node : dirichlet_nodes) {
		for (std::size_t s = 0; s < scheme.n_stages; ++s) {
			dofs.push_back(node * bs + s * 2 + 0); // u component only
		}
	}
	apply_dirichlet(sys, dofs, true);
	std::vector<double> sol = solve_block_tridiag(sys.matrix, sys.rhs);
	std::vector<double> packed(2 * n);
	for (std::size_t i = 0; i < n; ++i) {
		packed[2 * i] = u[i];
		packed[2 * i + 1] = v[i];
	}
	accumulate_stages(scheme, sol, 2, packed);
	for (std::size_t i = 0; i < n; ++i) {
		u[i] = packed[2 * i];
		v[i] = packed[2 * i + 1];
	}
}

} // namespace burgers
