// Compares the serial reference kernels with the OpenMP ones on the two hot
// paths: dense F_p elimination and per-n length-function sampling.

#include <chrono>
#include <cstdio>
#include <random>

#include "hilbtor/corpus.hpp"
#include "hilbtor/samplers.hpp"

using namespace hilbtor;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

FpMatrix random_matrix(int n, std::uint32_t p, std::mt19937_64& rng) {
  FpMatrix m(n, n, p);
  for (auto& v : m.a) v = static_cast<std::uint32_t>(rng() % p);
  return m;
}

void bench_rank() {
  std::mt19937_64 rng(12345);
  std::printf("%-24s %10s %10s %8s\n", "rank kernel", "serial[s]", "omp[s]", "speedup");
  for (int n : {256, 512, 1024, 1536}) {
    FpMatrix m = random_matrix(n, 32003, rng);
    auto t0 = std::chrono::steady_clock::now();
    int r1 = rank_serial(m);
    double ts = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    int r2 = rank_parallel(m);
    double tp = seconds_since(t0);
    if (r1 != r2) {
      std::printf("rank mismatch at n=%d\n", n);
      std::exit(1);
    }
    std::printf("%-24d %10.3f %10.3f %7.2fx\n", n, ts, tp, ts / tp);
  }
}

void bench_sampling() {
  RingPtr ring = make_ring({"x", "y", "z"});
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < 3; ++i) vars.push_back(Polynomial::variable(ring, i));
  FreeComplex k = koszul_complex(ring, vars);
  std::printf("\n%-24s %10s\n", "psi sampling (d=3, I=m)", "[s]");
  for (int nmax : {6, 8, 10}) {
    QuotientCache q(PresentedModule::ring_itself(ring), vars);
    auto t0 = std::chrono::steady_clock::now();
    Samples s = sample_psi(k, q, 1, nmax);
    double t = seconds_since(t0);
    std::printf("n_max=%-18d %10.3f  (psi(%d)=%lld)\n", nmax, t, nmax,
                static_cast<long long>(s.values.back()));
  }
}

}  // namespace

int main() {
  bench_rank();
  bench_sampling();
  return 0;
}
