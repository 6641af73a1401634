#include <cmath>
#include <random>

#include "doctest.h"

#include "burgers/errors.hpp"
#include "burgers/mesh.hpp"

using namespace burgers;

TEST_CASE("uniform mesh has exact endpoints and uniform spacing") {
	Mesh1D mesh = build_uniform_mesh(-0.5, 1.5, 8);
	CHECK(mesh.num_elements() == 8);
	CHECK(mesh.num_nodes() == 9);
	CHECK(mesh.node(0) == -0.5);
	CHECK(mesh.node(8) == 1.5);
	double h_ref = 2.0 / 8.0;
	for (std::size_t e = 0; e < 8; ++e) {
		CHECK(mesh.h(e) == doctest::Approx(h_ref).epsilon(1e-14));
	}
}

TEST_CASE("shifted domain puts a node exactly on zero when m is even") {
	Mesh1D mesh = build_uniform_mesh(-0.5, 0.5, 3000);
	CHECK(mesh.node(1500) == 0.0);
	Mesh1D small = build_uniform_mesh(-0.5, 0.5, 8);
	CHECK(small.node(4) == 0.0);
}

TEST_CASE("local basis forms a partition of unity with mirrored slopes") {
	std::mt19937 rng(91);
	std::uniform_real_distribution<double> sdist(0.0, 1.0);
	std::uniform_real_distribution<double> hdist(1e-4, 10.0);
	for (int i = 0; i < 100; ++i) {
		double sigma = sdist(rng);
		double h = hdist(rng);
		LocalBasis lb = eval_local_basis(sigma, h);
		CHECK(lb.psi[0] + lb.psi[1] == doctest::Approx(1.0).epsilon(1e-15));
		CHECK(lb.dpsi[0] == -1.0 / h);
		CHECK(lb.dpsi[1] == 1.0 / h);
	}
	LocalBasis mid = eval_local_basis(0.5, 0.02);
	CHECK(mid.psi[0] == 0.5);
	CHECK(mid.psi[1] == 0.5);
	CHECK(mid.dpsi[0] == doctest::Approx(-50.0));
	CHECK(mid.dpsi[1] == doctest::Approx(50.0));
}

TEST_CASE("interpolation reproduces nodal values and affine fields") {
	Mesh1D mesh = build_uniform_mesh(0.0, 2.0, 10);
	std::vector<double> affine(mesh.num_nodes());
	for (std::size_t j = 0; j < mesh.num_nodes(); ++j) {
		affine[j] = 3.0 - 1.25 * mesh.node(j);
	}
	for (std::size_t j = 0; j < mesh.num_nodes(); ++j) {
		CHECK(interpolate(mesh, affine, mesh.node(j)) ==
		      doctest::Approx(affine[j]).epsilon(1e-14));
	}
	std::mt19937 rng(7);
	std::uniform_real_distribution<double> xdist(0.0, 2.0);
	for (int i = 0; i < 50; ++i) {
		double x = xdist(rng);
		CHECK(interpolate(mesh, affine, x) ==
		      doctest::Approx(3.0 - 1.25 * x).epsilon(1e-13));
	}
}

TEST_CASE("find_element maps both domain ends into valid elements") {
	Mesh1D mesh = build_uniform_mesh(-1.0, 1.0, 4);
	CHECK(mesh.find_element(-1.0) == 0);
	CHECK(mesh.find_element(1.0) == 3);
	CHECK(mesh.find_element(-0.25) == 1);
	CHECK(mesh.find_element(0.0) == 2); // node values belong to the right element
}

TEST_CASE("mesh and basis reject invalid input") {
	CHECK_THROWS_AS(build_uniform_mesh(1.0, 1.0, 4), ConfigError);
	CHECK_THROWS_AS(build_uniform_mesh(2.0, 1.0, 4), ConfigError);
	CHECK_THROWS_AS(build_uniform_mesh(0.0, 1.0, 0), ConfigError);
	CHECK_THROWS_AS(eval_local_basis(-0.1, 1.0), DomainError);
	CHECK_THROWS_AS(eval_local_basis(1.1, 1.0), DomainError);
	CHECK_THROWS_AS(eval_local_basis(0.5, 0.0), DomainError);

	Mesh1D mesh = build_uniform_mesh(0.0, 1.0, 4);
	CHECK_THROWS_AS(mesh.find_element(1.000001), DomainError);
	CHECK_THROWS_AS(mesh.find_element(-0.000001), DomainError);
	CHECK_THROWS_AS(mesh.node(5), DomainError);
	CHECK_THROWS_AS(mesh.h(4), DomainError);
	std::vector<double> short_vec(3, 0.0);
	CHECK_THROWS_AS(interpolate(mesh, short_vec, 0.5), DomainError);
}
