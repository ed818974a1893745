// Compares the serial reference scan against the chunked OpenMP kernel on
// one digit-set row, and times the period computations that seed it.
//
//   fibdig_bench [n_digits] [omit_digit]
//
// Defaults to the {0..9}\{6} set at 7 tail digits (15 million terms), which
// is large enough to show the split while staying desk-scale.

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <variant>
#include <vector>

#include "fibdig/digitscan.hpp"
#include "fibdig/pisano.hpp"

using namespace fibdig;

namespace {

const char* verdict_name(const ScanVerdict& v) {
  return std::holds_alternative<Covered>(v) ? "covered" : "inconclusive";
}

}  // namespace

int main(int argc, char** argv) {
  std::uint32_t n_digits = argc > 1 ? std::atoi(argv[1]) : 7;
  std::uint8_t omit = argc > 2 ? static_cast<std::uint8_t>(std::atoi(argv[2])) : 6;

  std::vector<std::uint8_t> omitted = {omit};
  DigitSet set = DigitSet::complement(10, omitted);
  ScanConfig config = ScanConfig::make(set, n_digits);
  std::printf("scan of %llu terms, modulus %llu, omitting digit %u\n",
              static_cast<unsigned long long>(config.scan_length),
              static_cast<unsigned long long>(config.modulus.value()), omit);

  double t0 = omp_get_wtime();
  ScanVerdict serial = scan_digit_set_serial(config);
  double serial_time = omp_get_wtime() - t0;
  std::printf("%-18s %8.3f s  %6.1f Mterms/s  (%s)\n", "serial reference",
              serial_time, config.scan_length / serial_time / 1e6,
              verdict_name(serial));

  for (unsigned chunks : {1u, 2u, 4u, 8u,
                          static_cast<unsigned>(omp_get_max_threads())}) {
    t0 = omp_get_wtime();
    ScanVerdict verdict = scan_digit_set(config, chunks);
    double elapsed = omp_get_wtime() - t0;
    bool same = verdict == serial;
    std::printf("omp %3u chunk(s)   %8.3f s  %6.1f Mterms/s  speedup %.2fx%s\n",
                chunks, elapsed, config.scan_length / elapsed / 1e6,
                serial_time / elapsed, same ? "" : "  MISMATCH");
    if (!same) return 1;
  }

  std::vector<std::uint64_t> moduli;
  for (std::uint64_t m = 2; m <= 2000; ++m) moduli.push_back(m);
  t0 = omp_get_wtime();
  std::vector<PisanoResult> table = pisano_table(moduli);
  double table_time = omp_get_wtime() - t0;
  std::printf("pisano_table m=2..2000: %.3f s (%zu periods, max %llu)\n",
              table_time, table.size(),
              static_cast<unsigned long long>(
                  std::max_element(table.begin(), table.end(),
                                   [](const auto& a, const auto& b) {
                                     return a.period < b.period;
                                   })
                      ->period));
  return 0;
}
