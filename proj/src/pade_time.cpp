#include "burgers/pade_time.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>

#include "burgers/errors.hpp"

namespace burgers {

namespace {

std::int64_t factorial(int n) {
	std::int64_t f = 1;
	for (int i = 2; i <= n; ++i) {
		f *= i;
	}
	return f;
}

struct Fraction {
	std::int64_t num, den;
};

Fraction reduced(std::int64_t num, std::int64_t den) {
	std::int64_t g = std::gcd(std::llabs(num), std::llabs(den));
	if (g == 0) {
		return {0, 1};
	}
	if (den < 0) {
		num = -num;
		den = -den;
	}
	return {num / g, den / g};
}

} // namespace

PadeRational pade_coefficients(int l, int m) {
	if (l < 0 || l > 3 || m < 0 || m > 3) {
		throw ConfigError("pade: table covers degrees 0 through 3");
	}
	// numerator coefficient of h^i:  (l+m-i)! l! / ((l+m)! i! (l-i)!)
	// denominator coefficient of h^j: (l+m-j)! m! / ((l+m)! j! (m-j)!) (-1)^j
	std::vector<Fraction> num(l + 1), den(m + 1);
	const std::int64_t lm = factorial(l + m);
	for (int i = 0; i <= l; ++i) {
		num[i] = reduced(factorial(l + m - i) * factorial(l),
		                 lm * factorial(i) * factorial(l - i));
	}
	for (int j = 0; j <= m; ++j) {
		std::int64_t sign = (j % 2 == 0) ? 1 : -1;
		den[j] = reduced(sign * factorial(l + m - j) * factorial(m),
		                 lm * factorial(j) * factorial(m - j));
	}
	// common integer scale: lcm of all denominators, then strip the joint gcd
	std::int64_t scale = 1;
	for (const auto& f : num) {
		scale = std::lcm(scale, f.den);
	}
	for (const auto& f : den) {
		scale = std::lcm(scale, f.den);
	}
	PadeRational r;
	r.deg_num = l;
	r.deg_den = m;
	for (const auto& f : num) {
		r.num.push_back(f.num * (scale / f.den));
	}
	for (const auto& f : den) {
		r.den.push_back(f.num * (scale / f.den));
	}
	std::int64_t g = 0;
	for (auto v : r.num) {
		g = std::gcd(g, std::llabs(v));
	}
	for (auto v : r.den) {
		g = std::gcd(g, std::llabs(v));
	}
	if (g > 1) {
		for (auto& v : r.num) {
			v /= g;
		}
		for (auto& v : r.den) {
			v /= g;
		}
	}
	return r;
}

double pade_eval(int l, int m, double h) {
	PadeRational r = pade_coefficients(l, m);
	double num = 0.0, den = 0.0;
	for (std::size_t i = r.num.size(); i-- > 0;) {
		num = num * h + static_cast<double>(r.num[i]);
	}
	for (std::size_t j = r.den.size(); j-- > 0;) {
		den = den * h + static_cast<double>(r.den[j]);
	}
	// r.den[0] is the positive integer scale; the canonical denominator is
	// den / r.den[0], normalized to 1 at h = 0
	double den0 = static_cast<double>(r.den[0]);
	if (std::fabs(den) < 1e-14 * den0) {
		throw PoleError("pade: evaluation at a denominator root");
	}
	return num / den;
}

TimeScheme make_scheme(Integrator id) {
	TimeScheme s{};
	s.id = id;
	if (id == Integrator::r11) {
		s.n_stages = 1;
		s.w_matrix[0][0] = 0.5;
		s.w_vector[0] = 1.0;
		s.stage_time[0] = 1.0;
	} else {
		s.n_stages = 2;
		s.w_matrix[0] = {7.0 / 24.0, -1.0 / 24.0};
		s.w_matrix[1] = {13.0 / 24.0, 5.0 / 24.0};
		s.w_vector = {0.5, 0.5};
		s.stage_time = {0.5, 1.0};
	}
	return s;
}

StageSystem build_stage_system(const TimeScheme& scheme, double dt,
                               const Tridiag& mass, const Tridiag& stiffness,
                               const std::vector<double>& u_n,
                               const std::vector<double>& f_n,
                               const std::vector<std::vector<double>>& f_stage) {
	const std::size_t n = mass.n;
	const std::size_t ns = scheme.n_stages;
	if (stiffness.n != n || u_n.size() != n || f_n.size() != n) {
		throw DomainError("stage system: operator/state size mismatch");
	}
	if (!f_stage.empty() && f_stage.size() != ns) {
		throw DomainError("stage system: need one source sample per stage");
	}
	if (!(dt > 0.0)) {
		throw ConfigError("stage system: step size must be positive");
	}

	StageSystem sys(n, ns);
	const double idt = 1.0 / dt;
	for (std::size_t i = 0; i < n; ++i) {
		double* dblk = sys.matrix.diag(i);
		double* lblk = sys.matrix.sub(i);
		double* ublk = sys.matrix.sup(i);
		for (std::size_t s = 0; s < ns; ++s) {
			for (std::size_t sp = 0; sp < ns; ++sp) {
				double w = scheme.w_matrix[s][sp];
				double md = (s == sp) ? idt : 0.0;
				dblk[s * ns + sp] = md * mass.di[i] + w * stiffness.di[i];
				if (i > 0) {
					lblk[s * ns + sp] = md * mass.lo[i] + w * stiffness.lo[i];
				}
				if (i + 1 < n) {
					ublk[s * ns + sp] = md * mass.up[i] + w * stiffness.up[i];
				}
			}
		}
	}

	// rhs_s = w_s (f^n - K u^n) + sum_j W_sj (f_stage[j] - f_stage[j-1])
	std::vector<double> r = stiffness.apply(u_n);
	for (std::size_t i = 0; i < n; ++i) {
		r[i] = f_n[i] - r[i];
	}
	for (std::size_t i = 0; i < n; ++i) {
		for (std::size_t s = 0; s < ns; ++s) {
			double v = scheme.w_vector[s] * r[i];
			if (!f_stage.empty()) {
				for (std::size_t j = 0; j < ns; ++j) {
					double prev = (j == 0) ? f_n[i] : f_stage[j - 1][i];
					v += scheme.w_matrix[s][j] * (f_stage[j][i] - prev);
				}
			}
			sys.rhs[i * ns + s] = v;
		}
	}
	return sys;
}

void apply_dirichlet(StageSystem& system, const std::vector<std::size_t>& dofs,
                     bool symmetric) {
	BlockTridiag& a = system.matrix;
	const std::size_t bs = a.block_size();
	const std::size_t nb = a.n_blocks();
	for (std::size_t dof : dofs) {
		if (dof >= a.dim()) {
			throw DomainError("dirichlet: dof index out of range");
		}
		std::size_t bi = dof / bs, li = dof % bs;
		for (std::size_t c = 0; c < bs; ++c) {
			a.diag(bi)[li * bs + c] = 0.0;
			if (bi > 0) {
				a.sub(bi)[li * bs + c] = 0.0;
			}
			if (bi + 1 < nb) {
				a.sup(bi)[li * bs + c] = 0.0;
			}
		}
		a.diag(bi)[li * bs + li] = 1.0;
		system.rhs[dof] = 0.0;
		if (symmetric) {
			// pinned increments are zero, so column elimination needs no
			// rhs compensation
			for (std::size_t r = 0; r < bs; ++r) {
				if (r != li) {
					a.diag(bi)[r * bs + li] = 0.0;
				}
				if (bi > 0) {
					a.sup(bi - 1)[r * bs + li] = 0.0;
				}
				if (bi + 1 < nb) {
					a.sub(bi + 1)[r * bs + li] = 0.0;
				}
			}
		}
	}
}

void accumulate_stages(const TimeScheme& scheme, const std::vector<double>& stage_solution,
                       std::size_t components, std::vector<double>& u) {
	const std::size_t ns = scheme.n_stages;
	const std::size_t n_blocks = u.size() / components;
	if (stage_solution.size() != n_blocks * ns * components) {
		throw DomainError("accumulate: stage solution size mismatch");
	}
	for (std::size_t i = 0; i < n_blocks; ++i) {
		for (std::size_t s = 0; s < ns; ++s) {
			for (std::size_t c = 0; c < components; ++c) {
				u[i * components + c] +=
					stage_solution[i * ns * components + s * components + c];
			}
		}
	}
}

std::vector<double> advance(const TimeScheme& scheme, double dt,
                            const Tridiag& mass, const Tridiag& stiffness,
                            const std::vector<double>& u_n,
                            const std::vector<double>& f_n,
                            const std::vector<std::vector<double>>& f_stage,
                            const std::vector<std::size_t>& dirichlet_nodes) {
	StageSystem sys = build_stage_system(scheme, dt, mass, stiffness, u_n, f_n, f_stage);
	std::vector<std::size_t> dofs;
	dofs.reserve(dirichlet_nodes.size() * scheme.n_stages);
	for (std::size_t node : dirichlet_nodes) {
		for (std::size_t s = 0; s < scheme.n_stages; ++s) {
			dofs.push_back(node * scheme.n_stages + s);
		}
	}
	apply_dirichlet(sys, dofs, false);
	std::vector<double> sol = solve_block_tridiag(sys.matrix, sys.rhs);
	std::vector<double> u = u_n;
	accumulate_stages(scheme, sol, 1, u);
	return u;
}

} // namespace burgers
