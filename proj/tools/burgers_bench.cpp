// benchmark driver: runs one solver combination or a canned table matrix and
// writes results.csv plus nodal profiles
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "burgers/errors.hpp"
#include "burgers/run.hpp"

int main(int argc, char** argv) {
	CLI::App app{"finite element benchmark for the 1D viscous Burgers equation"};

	std::string case_name = "example1";
	std::string spatial = "galerkin";
	std::string temporal = "r11";
	std::string norm_mode = "quadrature";
	std::string linearization = "element_mean";
	std::string table = "custom";
	std::string output_dir = ".";
	std::size_t m = 50;
	double dt = 0.5;
	double re = 1e5;
	std::vector<double> t_out = {0.5, 1.0};
	bool mass_perturbation = true;
	double jump_value = std::numeric_limits<double>::quiet_NaN();
	unsigned jobs = 1;
	bool no_profiles = false;

	app.add_option("--case", case_name, "benchmark case: example1 | example2")
		->capture_default_str();
	app.add_option("--spatial", spatial, "formulation: lsq | galerkin | supg")
		->capture_default_str();
	app.add_option("--temporal", temporal, "integrator: r11 | r22")
		->capture_default_str();
	app.add_option("--m", m, "number of elements")->capture_default_str();
	app.add_option("--dt", dt, "time step")->capture_default_str();
	app.add_option("--t-out", t_out, "output times (comma separated, multiples of dt)")
		->delimiter(',')->capture_default_str();
	app.add_option("--re", re, "Reynolds number (viscosity is 1/Re)")
		->capture_default_str();
	app.add_option("--norm-mode", norm_mode, "error norms: quadrature | nodal")
		->capture_default_str();
	app.add_option("--linearization", linearization,
	               "frozen convection: element_mean | upwind_node")
		->capture_default_str();
	app.add_flag("--supg-mass-perturbation,!--no-supg-mass-perturbation",
	             mass_perturbation,
	             "include the streamline perturbation of the mass matrix");
	app.add_option("--jump-value", jump_value,
	               "nodal value at the initial jump of example2");
	app.add_option("--jobs", jobs, "worker threads for table runs")
		->capture_default_str();
	app.add_option("--output-dir", output_dir, "directory for results.csv and profiles")
		->capture_default_str();
	app.add_option("--table", table, "preset matrix: table2 | table3 | custom")
		->capture_default_str();
	app.add_flag("--no-profiles", no_profiles, "skip writing nodal profile files");
	app.set_config("--config", "", "flat key=value configuration file");

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp& e) {
		return app.exit(e);
	} catch (const CLI::ParseError& e) {
		app.exit(e);
		return burgers::exit_config_error;
	}

	try {
		burgers::RunConfig config;
		config.case_name = case_name;
		config.spatial = burgers::parse_spatial(spatial);
		config.temporal = burgers::parse_integrator(temporal);
		config.m = m;
		config.dt = dt;
		config.t_out = t_out;
		config.re = re;
		config.norm_mode = burgers::parse_norm_mode(norm_mode);
		config.linearization = burgers::parse_linearization(linearization);
		config.supg_mass_perturbation = mass_perturbation;
		if (!std::isnan(jump_value)) {
			config.jump_value = jump_value;
		}
		config.jobs = jobs;
		config.output_dir = output_dir;
		config.write_profiles = !no_profiles;

		burgers::TablePreset preset = burgers::parse_preset(table);
		std::vector<burgers::RunRow> rows;
		if (preset == burgers::TablePreset::none) {
			burgers::SingleResult result = burgers::run_single(config);
			rows = result.rows;
			if (config.write_profiles) {
				burgers::write_profile_files(
					(std::filesystem::path(output_dir) / "profiles").string(),
					result.profiles);
			}
		} else {
			rows = burgers::run_table(config, preset);
		}
		burgers::write_csv(
			(std::filesystem::path(output_dir) / "results.csv").string(), rows);
		std::fputs(burgers::csv_text(rows).c_str(), stdout);
		return burgers::exit_success;
	} catch (const burgers::ConfigError& e) {
		std::fprintf(stderr, "config error: %s\n", e.what());
		return burgers::exit_config_error;
	} catch (const burgers::DivergenceError& e) {
		std::fprintf(stderr, "divergence: %s\n", e.what());
		return burgers::exit_divergence;
	} catch (const std::exception& e) {
		std::fprintf(stderr, "solver failure: %s\n", e.what());
		return burgers::exit_solver_failure;
	}
}
