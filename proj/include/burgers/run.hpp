#ifndef BURGERS_RUN_HPP
#define BURGERS_RUN_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "burgers/assembly.hpp"
#include "burgers/benchmarks.hpp"
#include "burgers/error_norms.hpp"
#include "burgers/pade_time.hpp"

namespace burgers {

enum class Spatial { lsq, galerkin, supg };

std::string to_string(Spatial s);
std::string to_string(Integrator i);
Spatial parse_spatial(const std::string& token);
Integrator parse_integrator(const std::string& token);
NormMode parse_norm_mode(const std::string& token);
LinearizationMode parse_linearization(const std::string& token);

// canned parameter matrices reproducing the published error tables
enum class TablePreset { none, table2, table3 };
TablePreset parse_preset(const std::string& token);

struct RunConfig {
	std::string case_name = "example1";
	Spatial spatial = Spatial::galerkin;
	Integrator temporal = Integrator::r11;
	std::size_t m = 50;
	double dt = 0.5;
	std::vector<double> t_out = {0.5, 1.0};
	double re = 1e5;
	NormMode norm_mode = NormMode::quadrature;
	LinearizationMode linearization = LinearizationMode::element_mean;
	bool supg_mass_perturbation = true;
	std::optional<double> jump_value; // override of the initial jump-node value
	unsigned jobs = 1;
	std::string output_dir = ".";
	bool write_profiles = true;
};

// throws ConfigError on inconsistent settings (non-positive sizes, output
// times that are not step multiples, unknown case)
void validate(const RunConfig& config);

struct RunRow {
	Spatial spatial;
	Integrator temporal;
	std::size_t m = 0;
	double dt = 0.0, re = 0.0, t = 0.0;
	ErrorReport err;
	std::string error; // empty on success; exception text otherwise
};

struct Profile {
	std::string name; // file stem, without directory or extension
	std::vector<double> x, u_num, u_exact;
};

struct SingleResult {
	std::vector<RunRow> rows; // one per requested output time
	std::vector<Profile> profiles;
};

// run one (case, formulation, integrator, mesh, dt) combination to the last
// requested output time; throws DivergenceError / SolverError on failure
SingleResult run_single(const RunConfig& config);

// expand the preset into the full combination list and run them all;
// failures of individual combinations are recorded in the row's error field
// instead of propagating. jobs > 1 distributes combinations over threads;
// row order is independent of the thread count
std::vector<RunRow> run_table(const RunConfig& base, TablePreset preset);

// fixed-format serialization: raw norms at 17 significant digits, log values
// at 6 decimals, so identical runs produce identical bytes
std::string csv_text(const std::vector<RunRow>& rows);
void write_csv(const std::string& path, const std::vector<RunRow>& rows);
void write_profile_files(const std::string& dir, const std::vector<Profile>& profiles);

inline constexpr int exit_success = 0;
inline constexpr int exit_config_error = 2;
inline constexpr int exit_divergence = 3;
inline constexpr int exit_solver_failure = 4;

} // namespace burgers

#endif
