// Parallel kernels against their serial references.
//   bench_kernels [size]   (default 60: rref on a size x size random rational matrix)

#include "gls/ideals.hpp"
#include "gls/kantor.hpp"
#include "gls/linalg.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>

using namespace gls;

template <class F>
static double seconds(F&& f)
{
	const auto t0 = std::chrono::steady_clock::now();
	f();
	return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

static Matrix random_matrix(std::size_t n, unsigned seed)
{
	std::mt19937 rng(seed);
	std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
	Matrix m(n, n);
	for (std::size_t r = 0; r < n; ++r)
		for (std::size_t c = 0; c < n; ++c)
			{
			m(r, c) = Scalar(num(rng), den(rng));
			m(r, c).canonicalize();
		}
	return m;
}

int main(int argc, char** argv)
{
	const std::size_t size = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 60;
	std::printf("threads %d\n", omp_get_max_threads());

	const Matrix m = random_matrix(size, 7);
	RrefResult a, b;
	const double tp = seconds([&] { a = rref(m); });
	const double ts = seconds([&] { b = rref_serial(m); });
	const std::string label = "rref " + std::to_string(size) + "x" + std::to_string(size);
	std::printf("%-23s parallel %8.3fs  serial %8.3fs  same=%d\n", label.c_str(), tp, ts,
	            a.reduced == b.reduced);

	const GradedLieSuperalgebra u = build_universal(2, Window{-2, 3});
	IdentityReport ra, rb;
	const double ip = seconds([&] { ra = check_super_identities(u); });
	const double is = seconds([&] { rb = check_super_identities_serial(u); });
	std::printf("identities U(2)[-2,3]   parallel %8.3fs  serial %8.3fs  same=%d\n", ip, is,
	            ra.passed == rb.passed && ra.triples_checked == rb.triples_checked);

	GradedLieSuperalgebra wp, ws;
	const double mp = seconds([&] { wp = build_universal(3, Window{-2, 2}); });
	const int threads = omp_get_max_threads();
	omp_set_num_threads(1);
	const double ms = seconds([&] { ws = build_universal(3, Window{-2, 2}); });
	omp_set_num_threads(threads);
	std::printf("materialize U(3)[-2,2]  parallel %8.3fs  1 thread %8.3fs  same=%d\n", mp, ms, wp == ws);
	return 0;
}
