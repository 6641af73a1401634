#include "burgers/run.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <thread>

#include "burgers/errors.hpp"

namespace burgers {

std::string to_string(Spatial s) {
	switch (s) {
	case Spatial::lsq: return "lsq";
	case Spatial::galerkin: return "galerkin";
	case Spatial::supg: return "supg";
	}
	return "?";
}

std::string to_string(Integrator i) {
	return i == Integrator::r11 ? "r11" : "r22";
}

Spatial parse_spatial(const std::string& token) {
	if (token == "lsq" || token == "least-squares") {
		return Spatial::lsq;
	}
	if (token == "galerkin") {
		return Spatial::galerkin;
	}
	if (token == "supg") {
		return Spatial::supg;
	}
	throw ConfigError("unknown spatial formulation '" + token + "'");
}

Integrator parse_integrator(const std::string& token) {
	if (token == "r11") {
		return Integrator::r11;
	}
	if (token == "r22") {
		return Integrator::r22;
	}
	throw ConfigError("unknown integrator '" + token + "'");
}

NormMode parse_norm_mode(const std::string& token) {
	if (token == "quadrature") {
		return NormMode::quadrature;
	}
	if (token == "nodal") {
		return NormMode::nodal;
	}
	throw ConfigError("unknown norm mode '" + token + "'");
}

LinearizationMode parse_linearization(const std::string& token) {
	if (token == "element_mean") {
		return LinearizationMode::element_mean;
	}
	if (token == "upwind_node") {
		return LinearizationMode::upwind_node;
	}
	throw ConfigError("unknown linearization mode '" + token + "'");
}

TablePreset parse_preset(const std::string& token) {
	if (token == "custom") {
		return TablePreset::none;
	}
	if (token == "table2") {
		return TablePreset::table2;
	}
	if (token == "table3") {
		return TablePreset::table3;
	}
	throw ConfigError("unknown table preset '" + token + "'");
}

namespace {

struct StepPlan {
	std::size_t total_steps = 0;
	// (step index, requested output time), ascending in step index
	std::vector<std::pair<std::size_t, double>> outputs;
};

StepPlan plan_outputs(const RunConfig& c) {
	StepPlan plan;
	for (double t : c.t_out) {
		if (!(t >= 0.0) || !std::isfinite(t)) {
			throw ConfigError("output times must be finite and non-negative");
		}
		long long k = std::llround(t / c.dt);
		if (k < 0 || std::fabs(static_cast<double>(k) * c.dt - t) >
		                 1e-9 * std::max(c.dt, std::fabs(t))) {
			throw ConfigError("output time " + std::to_string(t) +
			                  " is not an integer multiple of dt");
		}
		plan.outputs.emplace_back(static_cast<std::size_t>(k), t);
	}
	std::sort(plan.outputs.begin(), plan.outputs.end());
	for (std::size_t i = 0; i + 1 < plan.outputs.size(); ++i) {
		if (plan.outputs[i].first == plan.outputs[i + 1].first) {
			throw ConfigError("duplicate output time");
		}
	}
	plan.total_steps = plan.outputs.empty() ? 0 : plan.outputs.back().first;
	return plan;
}

std::string format_double(const char* fmt, double v) {
	char buf[64];
	std::snprintf(buf, sizeof(buf), fmt, v);
	return buf;
}

std::string profile_stem(const RunConfig& c, double t) {
	return c.case_name + "_" + to_string(c.spatial) + "_" + to_string(c.temporal) +
	       "_m" + std::to_string(c.m) + "_t" + format_double("%g", t);
}

std::string sanitize(std::string msg) {
	for (char& ch : msg) {
		if (ch == ',' || ch == '\n' || ch == '\r') {
			ch = ';';
		}
	}
	return msg;
}

} // namespace

void validate(const RunConfig& config) {
	if (config.m == 0) {
		throw ConfigError("mesh size must be at least 1 element");
	}
	if (!(config.dt > 0.0) || !std::isfinite(config.dt)) {
		throw ConfigError("time step must be positive and finite");
	}
	if (config.t_out.empty()) {
		throw ConfigError("need at least one output time");
	}
	if (config.jobs == 0) {
		throw ConfigError("jobs must be at least 1");
	}
	if (config.output_dir.empty()) {
		throw ConfigError("output directory must not be empty");
	}
	make_case(config.case_name, config.re); // validates name and re
	plan_outputs(config);                   // validates t_out against dt
}

SingleResult run_single(const RunConfig& config) {
	validate(config);
	BenchmarkCase bc = make_case(config.case_name, config.re);
	if (config.jump_value) {
		bc.jump_value = *config.jump_value;
	}
	Mesh1D mesh = build_uniform_mesh(bc.a, bc.b, config.m);
	const double eps = bc.eps();
	const TimeScheme scheme = make_scheme(config.temporal);
	const bool lsq = config.spatial == Spatial::lsq;

	InitialField init = initial_field(bc, mesh, lsq);
	std::vector<double> u = init.u;
	std::vector<double> v = init.v;
	ExactFn exact = [bc](double x, double t) { return exact_solution(bc, x, t); };
	const std::vector<std::size_t> boundary = {0, mesh.num_nodes() - 1};
	const std::vector<double> zero_load(mesh.num_nodes(), 0.0);

	SingleResult out;
	auto record = [&](double t) {
		RunRow row;
		row.spatial = config.spatial;
		row.temporal = config.temporal;
		row.m = config.m;
		row.dt = config.dt;
		row.re = config.re;
		row.t = t;
		row.err = compute_errors(mesh, u, exact, t, config.norm_mode);
		out.rows.push_back(row);
		if (config.write_profiles) {
			Profile p;
			p.name = profile_stem(config, t);
			p.x = mesh.nodes();
			p.u_num = u;
			p.u_exact.resize(mesh.num_nodes());
			for (std::size_t j = 0; j < mesh.num_nodes(); ++j) {
				p.u_exact[j] = exact(mesh.node(j), t);
			}
			out.profiles.push_back(std::move(p));
		}
	};

	StepPlan plan = plan_outputs(config);
	auto next_out = plan.outputs.begin();
	while (next_out != plan.outputs.end() && next_out->first == 0) {
		record(next_out->second);
		++next_out;
	}

	for (std::size_t step = 1; step <= plan.total_steps; ++step) {
		try {
			ElementCoeffs coeffs = linearize(mesh, u, eps, config.linearization);
			if (lsq) {
				LsqOperators ops = assemble_lsq(mesh, coeffs, eps);
				LsqLoads load = assemble_lsq_residual_load(mesh, coeffs, eps, v,
				                                           nullptr, 0.0);
				advance_lsq(scheme, config.dt, ops, load, {}, boundary, u, v);
			} else {
				OperatorPair ops =
					(config.spatial == Spatial::galerkin)
						? assemble_galerkin(mesh, coeffs, eps)
						: assemble_supg(mesh, coeffs, eps,
						                SupgOptions{config.supg_mass_perturbation});
				u = advance(scheme, config.dt, ops.mass, ops.stiffness, u,
				            zero_load, {}, boundary);
			}
		} catch (const SingularSystemError& e) {
			throw SolverError("linear solve failed at step " + std::to_string(step) +
			                  ": " + e.what(), step);
		}
		for (double value : u) {
			if (!std::isfinite(value)) {
				throw DivergenceError("non-finite solution at step " +
				                      std::to_string(step), step);
			}
		}
		while (next_out != plan.outputs.end() && next_out->first == step) {
			record(next_out->second);
			++next_out;
		}
	}
	return out;
}

namespace {

std::vector<RunConfig> expand_preset(const RunConfig& base, TablePreset preset) {
	if (preset == TablePreset::none) {
		return {base};
	}
	RunConfig c = base;
	std::vector<std::size_t> sizes;
	if (preset == TablePreset::table2) {
		c.case_name = "example1";
		c.re = 1e5;
		c.dt = 0.5;
		c.t_out = {0.5, 1.0};
		sizes = {50, 1000};
	} else {
		c.case_name = "example2";
		c.re = 1e4;
		c.dt = 0.05 / 152.0;
		c.t_out = {0.05, 0.1};
		sizes = {3000, 4000};
	}
	// published-table reproduction settings: upwind frozen convection and
	// plain steady streamline stabilization
	c.linearization = LinearizationMode::upwind_node;
	c.supg_mass_perturbation = false;
	c.jump_value.reset();
	c.write_profiles = false;

	std::vector<RunConfig> list;
	for (Spatial s : {Spatial::lsq, Spatial::galerkin, Spatial::supg}) {
		for (Integrator i : {Integrator::r11, Integrator::r22}) {
			for (std::size_t m : sizes) {
				RunConfig one = c;
				one.spatial = s;
				one.temporal = i;
				one.m = m;
				list.push_back(one);
			}
		}
	}
	return list;
}

} // namespace

std::vector<RunRow> run_table(const RunConfig& base, TablePreset preset) {
	validate(base);
	std::vector<RunConfig> configs = expand_preset(base, preset);
	std::vector<std::vector<RunRow>> slots(configs.size());

	auto run_one = [&](std::size_t idx) {
		const RunConfig& c = configs[idx];
		try {
			slots[idx] = run_single(c).rows;
		} catch (const std::exception& e) {
			// one row per requested output time, error text instead of norms
			slots[idx].clear();
			for (double t : c.t_out) {
				RunRow row;
				row.spatial = c.spatial;
				row.temporal = c.temporal;
				row.m = c.m;
				row.dt = c.dt;
				row.re = c.re;
				row.t = t;
				row.error = sanitize(e.what());
				slots[idx].push_back(row);
			}
		}
	};

	unsigned jobs = std::min<unsigned>(base.jobs, static_cast<unsigned>(configs.size()));
	if (jobs <= 1) {
		for (std::size_t i = 0; i < configs.size(); ++i) {
			run_one(i);
		}
	} else {
		std::atomic<std::size_t> next{0};
		std::vector<std::thread> pool;
		pool.reserve(jobs);
		for (unsigned w = 0; w < jobs; ++w) {
			pool.emplace_back([&] {
				for (;;) {
					std::size_t i = next.fetch_add(1);
					if (i >= configs.size()) {
						return;
					}
					run_one(i);
				}
			});
		}
		for (auto& th : pool) {
			th.join();
		}
	}

	std::vector<RunRow> rows;
	for (const auto& slot : slots) {
		rows.insert(rows.end(), slot.begin(), slot.end());
	}
	return rows;
}

std::string csv_text(const std::vector<RunRow>& rows) {
	std::string out = "formulation,integrator,m,dt,Re,t,l2,linf,log10_l2,log10_linf,error\n";
	for (const RunRow& r : rows) {
		out += to_string(r.spatial);
		out += ',';
		out += to_string(r.temporal);
		out += ',';
		out += std::to_string(r.m);
		out += ',';
		out += format_double("%.17g", r.dt);
		out += ',';
		out += format_double("%g", r.re);
		out += ',';
		out += format_double("%g", r.t);
		out += ',';
		if (r.error.empty()) {
			out += format_double("%.17g", r.err.l2);
			out += ',';
			out += format_double("%.17g", r.err.linf);
			out += ',';
			out += format_double("%.6f", r.err.log10_l2);
			out += ',';
			out += format_double("%.6f", r.err.log10_linf);
			out += ',';
		} else {
			out += ",,,,";
			out += r.error;
		}
		out += '\n';
	}
	return out;
}

void write_csv(const std::string& path, const std::vector<RunRow>& rows) {
	std::filesystem::path p(path);
	if (p.has_parent_path()) {
		std::filesystem::create_directories(p.parent_path());
	}
	std::ofstream f(p, std::ios::binary);
	if (!f) {
		throw ConfigError("cannot open '" + path + "' for writing");
	}
	f << csv_text(rows);
}

void write_profile_files(const std::string& dir, const std::vector<Profile>& profiles) {
	if (profiles.empty()) {
		return;
	}
	std::filesystem::create_directories(dir);
	for (const Profile& p : profiles) {
		auto dump = [&](const std::string& suffix, const std::vector<double>& values) {
			std::filesystem::path path =
				std::filesystem::path(dir) / (p.name + suffix + ".dat");
			std::ofstream f(path, std::ios::binary);
			if (!f) {
				throw ConfigError("cannot open '" + path.string() + "' for writing");
			}
			for (std::size_t j = 0; j < p.x.size(); ++j) {
				f << format_double("%.17g", p.x[j]) << ' '
				  << format_double("%.17g", values[j]) << '\n';
			}
		};
		dump("", p.u_num);
		dump("_exact", p.u_exact);
	}
}

} // namespace burgers
