#ifndef BURGERS_BLOCK_TRIDIAG_HPP
#define BURGERS_BLOCK_TRIDIAG_HPP

#include <cstddef>
#include <vector>

namespace burgers {

// scalar tridiagonal matrix; lo[0] and up[n-1] are unused padding
struct Tridiag {
	explicit Tridiag(std::size_t n = 0) : n(n), lo(n, 0.0), di(n, 0.0), up(n, 0.0) {}
	std::size_t n;
	std::vector<double> lo, di, up;

	std::vector<double> apply(const std::vector<double>& x) const;
	Tridiag& add_scaled(const Tridiag& other, double factor);
};

// block tridiagonal matrix with square blocks of runtime size bs (1, 2 or 4
// in this library, but any bs >= 1 works); blocks stored row-major
class BlockTridiag {
public:
	BlockTridiag(std::size_t n_blocks, std::size_t block_size);

	std::size_t n_blocks() const { return nb_; }
	std::size_t block_size() const { return bs_; }
	std::size_t dim() const { return nb_ * bs_; }

	// pointers to bs x bs row-major blocks; sub(0) and sup(nb-1) are padding
	double* diag(std::size_t i) { return &d_[i * bs_ * bs_]; }
	double* sub(std::size_t i) { return &l_[i * bs_ * bs_]; }
	double* sup(std::size_t i) { return &u_[i * bs_ * bs_]; }
	const double* diag(std::size_t i) const { return &d_[i * bs_ * bs_]; }
	const double* sub(std::size_t i) const { return &l_[i * bs_ * bs_]; }
	const double* sup(std::size_t i) const { return &u_[i * bs_ * bs_]; }

	// scalar element access by global indices; zero outside the block band
	double at(std::size_t row, std::size_t col) const;
	double& entry(std::size_t row, std::size_t col);

	std::vector<double> apply(const std::vector<double>& x) const;
	std::vector<std::vector<double>> to_dense() const;
	double max_abs() const;

private:
	std::size_t nb_, bs_;
	std::vector<double> d_, l_, u_;
};

// block Thomas elimination with partial pivoting inside each pivot block;
// throws SingularSystemError (with the global pivot index) when a pivot
// falls below 1e-14 times the matrix scale
std::vector<double> solve_block_tridiag(const BlockTridiag& A, std::vector<double> rhs);

// independent reference route: dense Gaussian elimination with partial
// pivoting; refuses n > 2000 to keep accidental misuse from blowing up
std::vector<double> solve_dense(std::vector<std::vector<double>> A, std::vector<double> b);

} // namespace burgers

#endif
