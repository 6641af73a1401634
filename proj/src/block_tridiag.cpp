#include "burgers/block_tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "burgers/errors.hpp"

namespace burgers {

std::vector<double> Tridiag::apply(const std::vector<double>& x) const {
	if (x.size() != n) {
		throw DomainError("tridiag: vector size mismatch");
	}
	std::vector<double> y(n, 0.0);
	for (std::size_t i = 0; i < n; ++i) {
		double s = di[i] * x[i];
		if (i > 0) {
			s += lo[i] * x[i - 1];
		}
		if (i + 1 < n) {
			s += up[i] * x[i + 1];
		}
		y[i] = s;
	}
	return y;
}

Tridiag& Tridiag::add_scaled(const Tridiag& other, double factor) {
	if (other.n != n) {
		throw DomainError("tridiag: size mismatch in add");
	}
	for (std::size_t i = 0; i < n; ++i) {
		lo[i] += factor * other.lo[i];
		di[i] += factor * other.di[i];
		up[i] += factor * other.up[i];
	}
	return *this;
}

BlockTridiag::BlockTridiag(std::size_t n_blocks, std::size_t block_size)
	: nb_(n_blocks), bs_(block_size) {
	if (nb_ == 0 || bs_ == 0) {
		throw ConfigError("block tridiag: zero dimension");
	}
	d_.assign(nb_ * bs_ * bs_, 0.0);
	l_.assign(nb_ * bs_ * bs_, 0.0);
	u_.assign(nb_ * bs_ * bs_, 0.0);
}

double BlockTridiag::at(std::size_t row, std::size_t col) const {
	if (row >= dim() || col >= dim()) {
		throw DomainError("block tridiag: index out of range");
	}
	std::size_t bi = row / bs_, bj = col / bs_;
	std::size_t li = row % bs_, lj = col % bs_;
	if (bj + 1 == bi) {
		return sub(bi)[li * bs_ + lj];
	}
	if (bj == bi) {
		return diag(bi)[li * bs_ + lj];
	}
	if (bj == bi + 1) {
		return sup(bi)[li * bs_ + lj];
	}
	return 0.0;
}

double& BlockTridiag::entry(std::size_t row, std::size_t col) {
	if (row >= dim() || col >= dim()) {
		throw DomainError("block tridiag: index out of range");
	}
	std::size_t bi = row / bs_, bj = col / bs_;
	std::size_t li = row % bs_, lj = col % bs_;
	if (bj + 1 == bi) {
		return sub(bi)[li * bs_ + lj];
	}
	if (bj == bi) {
		return diag(bi)[li * bs_ + lj];
	}
	if (bj == bi + 1) {
		return sup(bi)[li * bs_ + lj];
	}
	throw DomainError("block tridiag: entry outside the block band");
}

std::vector<double> BlockTridiag::apply(const std::vector<double>& x) const {
	if (x.size() != dim()) {
		throw DomainError("block tridiag: vector size mismatch");
	}
	std::vector<double> y(dim(), 0.0);
	for (std::size_t i = 0; i < nb_; ++i) {
		for (std::size_t li = 0; li < bs_; ++li) {
			double s = 0.0;
			const double* dblk = diag(i);
			for (std::size_t lj = 0; lj < bs_; ++lj) {
				s += dblk[li * bs_ + lj] * x[i * bs_ + lj];
			}
			if (i > 0) {
				const double* lblk = sub(i);
				for (std::size_t lj = 0; lj < bs_; ++lj) {
					s += lblk[li * bs_ + lj] * x[(i - 1) * bs_ + lj];
				}
			}
			if (i + 1 < nb_) {
				const double* ublk = sup(i);
				for (std::size_t lj = 0; lj < bs_; ++lj) {
					s += ublk[li * bs_ + lj] * x[(i + 1) * bs_ + lj];
				}
			}
			y[i * bs_ + li] = s;
		}
	}
	return y;
}

std::vector<std::vector<double>> BlockTridiag::to_dense() const {
	std::vector<std::vector<double>> a(dim(), std::vector<double>(dim(), 0.0));
	for (std::size_t row = 0; row < dim(); ++row) {
		for (std::size_t col = 0; col < dim(); ++col) {
			a[row][col] = at(row, col);
		}
	}
	return a;
}

double BlockTridiag::max_abs() const {
	double m = 0.0;
	for (double v : d_) {
		m = std::max(m, std::fabs(v));
	}
	for (double v : l_) {
		m = std::max(m, std::fabs(v));
	}
	for (double v : u_) {
		m = std::max(m, std::fabs(v));
	}
	return m;
}

namespace {

// LU factorization with partial pivoting of one bs x bs block, row-major in
// place; perm records row swaps. pivot_tol is absolute
void lu_factor(double* a, std::size_t bs, std::vector<std::size_t>& perm,
               double pivot_tol, std::size_t block_index) {
	perm.resize(bs);
	for (std::size_t i = 0; i < bs; ++i) {
		perm[i] = i;
	}
	for (std::size_t k = 0; k < bs; ++k) {
		std::size_t p = k;
		double best = std::fabs(a[k * bs + k]);
		for (std::size_t r = k + 1; r < bs; ++r) {
			double v = std::fabs(a[r * bs + k]);
			if (v > best) {
				best = v;
				p = r;
			}
		}
		if (best < pivot_tol) {
			throw SingularSystemError("block tridiag solve: negligible pivot",
			                          block_index * bs + k);
		}
		if (p != k) {
			for (std::size_t c = 0; c < bs; ++c) {
				std::swap(a[k * bs + c], a[p * bs + c]);
			}
			std::swap(perm[k], perm[p]);
		}
		double inv = 1.0 / a[k * bs + k];
		for (std::size_t r = k + 1; r < bs; ++r) {
			double f = a[r * bs + k] * inv;
			a[r * bs + k] = f;
			for (std::size_t c = k + 1; c < bs; ++c) {
				a[r * bs + c] -= f * a[k * bs + c];
			}
		}
	}
}

// solve L U x = P b for one factored block, b overwritten by x
void lu_solve_vec(const double* a, std::size_t bs, const std::vector<std::size_t>& perm,
                  double* b) {
	std::vector<double> t(bs);
	for (std::size_t i = 0; i < bs; ++i) {
		t[i] = b[perm[i]];
	}
	for (std::size_t i = 0; i < bs; ++i) {
		for (std::size_t j = 0; j < i; ++j) {
			t[i] -= a[i * bs + j] * t[j];
		}
	}
	for (std::size_t ii = bs; ii-- > 0;) {
		for (std::size_t j = ii + 1; j < bs; ++j) {
			t[ii] -= a[ii * bs + j] * t[j];
		}
		t[ii] /= a[ii * bs + ii];
	}
	for (std::size_t i = 0; i < bs; ++i) {
		b[i] = t[i];
	}
}

// solve (L U) X = P B for a bs x bs right-hand side, column by column
void lu_solve_mat(const double* a, std::size_t bs, const std::vector<std::size_t>& perm,
                  double* bmat) {
	std::vector<double> col(bs);
	for (std::size_t c = 0; c < bs; ++c) {
		for (std::size_t r = 0; r < bs; ++r) {
			col[r] = bmat[r * bs + c];
		}
		lu_solve_vec(a, bs, perm, col.data());
		for (std::size_t r = 0; r < bs; ++r) {
			bmat[r * bs + c] = col[r];
		}
	}
}

// c -= a * b for row-major bs x bs blocks
void gemm_sub(double* c, const double* a, const double* b, std::size_t bs) {
	for (std::size_t i = 0; i < bs; ++i) {
		for (std::size_t k = 0; k < bs; ++k) {
			double aik = a[i * bs + k];
			if (aik == 0.0) {
				continue;
			}
			for (std::size_t j = 0; j < bs; ++j) {
				c[i * bs + j] -= aik * b[k * bs + j];
			}
		}
	}
}

} // namespace

std::vector<double> solve_block_tridiag(const BlockTridiag& A, std::vector<double> rhs) {
	const std::size_t nb = A.n_blocks();
	const std::size_t bs = A.block_size();
	if (rhs.size() != A.dim()) {
		throw DomainError("block tridiag solve: rhs size mismatch");
	}
	double scale = A.max_abs();
	if (scale == 0.0) {
		throw SingularSystemError("block tridiag solve: zero matrix", 0);
	}
	double pivot_tol = 1e-14 * scale;

	// forward elimination: pivot blocks overwritten by their LU factors,
	// modified superdiagonals and rhs kept
	std::vector<double> piv(nb * bs * bs);
	std::vector<double> supmod(nb * bs * bs, 0.0);
	std::vector<std::vector<std::size_t>> perms(nb);

	for (std::size_t i = 0; i < nb; ++i) {
		double* p = &piv[i * bs * bs];
		std::memcpy(p, A.diag(i), sizeof(double) * bs * bs);
		if (i > 0) {
			// p -= L_i * (D'_{i-1})^{-1} U_{i-1}, with the solved product
			// already stored in supmod[i-1]
			gemm_sub(p, A.sub(i), &supmod[(i - 1) * bs * bs], bs);
			// rhs_i -= L_i * rhs'_{i-1}
			std::vector<double> tmp(bs, 0.0);
			const double* lblk = A.sub(i);
			for (std::size_t r = 0; r < bs; ++r) {
				double s = 0.0;
				for (std::size_t c = 0; c < bs; ++c) {
					s += lblk[r * bs + c] * rhs[(i - 1) * bs + c];
				}
				tmp[r] = s;
			}
			for (std::size_t r = 0; r < bs; ++r) {
				rhs[i * bs + r] -= tmp[r];
			}
		}
		lu_factor(p, bs, perms[i], pivot_tol, i);
		lu_solve_vec(p, bs, perms[i], &rhs[i * bs]);
		if (i + 1 < nb) {
			double* sm = &supmod[i * bs * bs];
			std::memcpy(sm, A.sup(i), sizeof(double) * bs * bs);
			lu_solve_mat(p, bs, perms[i], sm);
		}
	}

	// back substitution: x_i = rhs'_i - (D'_i)^{-1} U_i x_{i+1}, with the
	// solved superdiagonal product reused
	for (std::size_t ii = nb - 1; ii-- > 0;) {
		const double* sm = &supmod[ii * bs * bs];
		for (std::size_t r = 0; r < bs; ++r) {
			double s = 0.0;
			for (std::size_t c = 0; c < bs; ++c) {
				s += sm[r * bs + c] * rhs[(ii + 1) * bs + c];
			}
			rhs[ii * bs + r] -= s;
		}
	}
	return rhs;
}

std::vector<double> solve_dense(std::vector<std::vector<double>> A, std::vector<double> b) {
	const std::size_t n = b.size();
	if (n > 2000) {
		throw ConfigError("dense solve: refusing systems larger than 2000");
	}
	if (A.size() != n) {
		throw DomainError("dense solve: matrix/vector size mismatch");
	}
	double scale = 0.0;
	for (const auto& row : A) {
		if (row.size() != n) {
			throw DomainError("dense solve: matrix is not square");
		}
		for (double v : row) {
			scale = std::max(scale, std::fabs(v));
		}
	}
	if (scale == 0.0) {
		throw SingularSystemError("dense solve: zero matrix", 0);
	}
	double pivot_tol = 1e-14 * scale;
	for (std::size_t k = 0; k < n; ++k) {
		std::size_t p = k;
		double best = std::fabs(A[k][k]);
		for (std::size_t r = k + 1; r < n; ++r) {
			double v = std::fabs(A[r][k]);
			if (v > best) {
				best = v;
				p = r;
			}
		}
		if (best < pivot_tol) {
			throw SingularSystemError("dense solve: negligible pivot", k);
		}
		if (p != k) {
			std::swap(A[p], A[k]);
			std::swap(b[p], b[k]);
		}
		double inv = 1.0 / A[k][k];
		for (std::size_t r = k + 1; r < n; ++r) {
			double f = A[r][k] * inv;
			if (f == 0.0) {
				continue;
			}
			for (std::size_t c = k; c < n; ++c) {
				A[r][c] -= f * A[k][c];
			}
			b[r] -= f * b[k];
		}
	}
	std::vector<double> x(n, 0.0);
	for (std::size_t ii = n; ii-- > 0;) {
		double s = b[ii];
		for (std::size_t c = ii + 1; c < n; ++c) {
			s -= A[ii][c] * x[c];
		}
		x[ii] = s / A[ii][ii];
	}
	return x;
}

} // namespace burgers
