#include <cmath>
#include <vector>

#include "doctest.h"

#include "burgers/errors.hpp"
#include "burgers/pade_time.hpp"

using namespace burgers;

namespace {

void check_entry(int l, int m, const std::vector<std::int64_t>& num,
                 const std::vector<std::int64_t>& den) {
	PadeRational r = pade_coefficients(l, m);
	CHECK(r.deg_num == l);
	CHECK(r.deg_den == m);
	REQUIRE(r.num == num);
	REQUIRE(r.den == den);
}

} // namespace

TEST_CASE("rational table spot entries in smallest integer form") {
	check_entry(0, 0, {1}, {1});
	check_entry(1, 0, {1, 1}, {1});
	check_entry(0, 1, {1}, {1, -1});
	check_entry(1, 1, {2, 1}, {2, -1});
	check_entry(2, 2, {12, 6, 1}, {12, -6, 1});
	check_entry(1, 3, {24, 6}, {24, -18, 6, -1});
	check_entry(2, 3, {60, 24, 3}, {60, -36, 9, -1});
	check_entry(3, 0, {6, 6, 3, 1}, {6});
	check_entry(0, 3, {6}, {6, -6, 3, -1});
	check_entry(3, 3, {120, 60, 12, 1}, {120, -60, 12, -1});
}

TEST_CASE("evaluation matches the closed forms of the diagonal pair") {
	for (double h : {-1.5, -0.3, 0.0, 0.4, 1.2}) {
		CHECK(pade_eval(1, 1, h) ==
		      doctest::Approx((2.0 + h) / (2.0 - h)).epsilon(1e-15));
		CHECK(pade_eval(2, 2, h) ==
		      doctest::Approx((12.0 + 6.0 * h + h * h) /
		                      (12.0 - 6.0 * h + h * h)).epsilon(1e-15));
	}
}

TEST_CASE("every table entry equals one at the origin") {
	for (int l = 0; l <= 3; ++l) {
		for (int m = 0; m <= 3; ++m) {
			CHECK(pade_eval(l, m, 0.0) == 1.0);
		}
	}
}

TEST_CASE("denominator roots raise pole errors") {
	CHECK_THROWS_AS(pade_eval(1, 1, 2.0), PoleError);
	CHECK_THROWS_AS(pade_eval(0, 1, 1.0), PoleError);
	CHECK_THROWS_AS(pade_eval(1, 1, 2.0 + 1e-16), PoleError);
	CHECK_NOTHROW(pade_eval(1, 1, 1.999));
}

TEST_CASE("degrees outside the table are rejected") {
	CHECK_THROWS_AS(pade_coefficients(4, 0), ConfigError);
	CHECK_THROWS_AS(pade_coefficients(0, 4), ConfigError);
	CHECK_THROWS_AS(pade_coefficients(-1, 2), ConfigError);
	CHECK_THROWS_AS(pade_eval(2, 5, 0.1), ConfigError);
}

TEST_CASE("diagonal entries stay bounded by one on the negative axis") {
	// 200 log-spaced magnitudes in [1e-6, 1e6]
	for (int i = 0; i < 200; ++i) {
		double expo = -6.0 + 12.0 * static_cast<double>(i) / 199.0;
		double h = -std::pow(10.0, expo);
		CHECK(std::fabs(pade_eval(1, 1, h)) <= 1.0 + 1e-12);
		CHECK(std::fabs(pade_eval(2, 2, h)) <= 1.0 + 1e-12);
	}
}

TEST_CASE("scheme coefficients are the frozen rationals") {
	TimeScheme s1 = make_scheme(Integrator::r11);
	CHECK(s1.n_stages == 1);
	CHECK(s1.w_matrix[0][0] == 0.5);
	CHECK(s1.w_vector[0] == 1.0);
	CHECK(s1.stage_time[0] == 1.0);

	TimeScheme s2 = make_scheme(Integrator::r22);
	CHECK(s2.n_stages == 2);
	CHECK(s2.w_matrix[0][0] == 7.0 / 24.0);
	CHECK(s2.w_matrix[0][1] == -1.0 / 24.0);
	CHECK(s2.w_matrix[1][0] == 13.0 / 24.0);
	CHECK(s2.w_matrix[1][1] == 5.0 / 24.0);
	CHECK(s2.w_vector[0] == 0.5);
	CHECK(s2.w_vector[1] == 0.5);
	CHECK(s2.stage_time[0] == 0.5);
	CHECK(s2.stage_time[1] == 1.0);
}

TEST_CASE("scheme moment identities match the scalar series") {
	// ones^T W^k w must equal 1/(k+1)! up to the scheme's order
	auto moment = [](const TimeScheme& s, int k) {
		std::vector<double> acc(s.n_stages);
		for (std::size_t i = 0; i < s.n_stages; ++i) {
			acc[i] = s.w_vector[i];
		}
		for (int p = 0; p < k; ++p) {
			std::vector<double> nxt(s.n_stages, 0.0);
			for (std::size_t i = 0; i < s.n_stages; ++i) {
				for (std::size_t j = 0; j < s.n_stages; ++j) {
					nxt[i] += s.w_matrix[i][j] * acc[j];
				}
			}
			acc = nxt;
		}
		double sum = 0.0;
		for (double v : acc) {
			sum += v;
		}
		return sum;
	};
	TimeScheme s1 = make_scheme(Integrator::r11);
	CHECK(moment(s1, 0) == doctest::Approx(1.0).epsilon(1e-15));
	CHECK(moment(s1, 1) == doctest::Approx(0.5).epsilon(1e-15));
	TimeScheme s2 = make_scheme(Integrator::r22);
	CHECK(moment(s2, 0) == doctest::Approx(1.0).epsilon(1e-15));
	CHECK(moment(s2, 1) == doctest::Approx(1.0 / 2.0).epsilon(1e-14));
	CHECK(moment(s2, 2) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
	CHECK(moment(s2, 3) == doctest::Approx(1.0 / 24.0).epsilon(1e-13));
}
