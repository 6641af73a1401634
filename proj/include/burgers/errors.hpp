#ifndef BURGERS_ERRORS_HPP
#define BURGERS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace burgers {

// base for everything thrown by this library
struct Error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

// bad user-facing configuration (flags, config file, preconditions on sizes)
struct ConfigError : Error {
	using Error::Error;
};

// argument outside the mathematical domain of an operation
struct DomainError : Error {
	using Error::Error;
};

// rational time scheme evaluated at (numerically) a pole of its denominator
struct PoleError : Error {
	using Error::Error;
};

// linear system factorization hit a negligible pivot
struct SingularSystemError : Error {
	SingularSystemError(const std::string& msg, std::size_t pivot)
		: Error(msg), pivot_index(pivot) {}
	std::size_t pivot_index;
};

// non-finite values appeared in the solution field
struct DivergenceError : Error {
	DivergenceError(const std::string& msg, std::size_t at_step)
		: Error(msg), step(at_step) {}
	std::size_t step;
};

// linear solver failed while advancing; carries the time step index
struct SolverError : Error {
	SolverError(const std::string& msg, std::size_t at_step)
		: Error(msg), step(at_step) {}
	std::size_t step;
};

} // namespace burgers

#endif
