// Timing comparison between the OpenMP kernels and their serial references.
// Build and run: ./riesz_bench [repeats]

#include <chrono>
#include <cstdio>
#include <functional>

#include "riesz/analysis.hpp"
#include "riesz/fixtures.hpp"
#include "riesz/parallel.hpp"
#include "riesz/pogroup.hpp"
#include "riesz/search.hpp"

using namespace riesz;
using Clock = std::chrono::steady_clock;

namespace {

double time_ms(const std::function<void()>& fn, int repeats) {
  auto t0 = Clock::now();
  for (int i = 0; i < repeats; ++i) fn();
  auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / repeats;
}

void row(const char* name, const std::function<void()>& serial,
         const std::function<void()>& parallel, int repeats) {
  double s = time_ms(serial, repeats);
  double p = time_ms(parallel, repeats);
  std::printf("%-34s %10.2f ms %10.2f ms %8.2fx\n", name, s, p,
              p > 0 ? s / p : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("%-34s %13s %13s %9s\n", "kernel", "serial", "parallel",
              "speedup");

  auto big = product({build_chain(4), build_chain(5), build_chain(5)});
  auto hs = horizontal_sum({build_chain(3), build_chain(3), build_chain(3),
                            build_chain(3)});
  std::vector<Algebra> booleans(8, build_chain(1));
  auto b8 = product(booleans);
  auto g39 = fixture_group("example39");
  auto g38 = fixture_group("example38");

  row("rdp_check chain product (180)",
      [&] { serial_ref::rdp_check(big); }, [&] { rdp_check(big); }, repeats);
  row("rdp_check boolean 2^8 (256)",
      [&] { serial_ref::rdp_check(b8); }, [&] { rdp_check(b8); }, repeats);
  row("rip_check chain product (180)",
      [&] { serial_ref::rip_check(big); }, [&] { rip_check(big); }, repeats);
  row("is_mv chain product (180)",
      [&] { serial_ref::is_mv(big); }, [&] { is_mv(big); }, repeats);
  row("uarp_check horizontal sum",
      [&] { serial_ref::uarp_check(hs); }, [&] { uarp_check(hs); }, repeats);
  row("group_rdp gapped cone, box 12",
      [&] { serial_ref::group_rdp_check(g39, 12); },
      [&] { group_rdp_check(g39, 12); }, repeats);
  row("group_rip half cone, box 4",
      [&] { serial_ref::group_rip_check(g38, 4); },
      [&] { group_rip_check(g38, 4); }, repeats);
  row("enumerate effect size 5",
      [&] { serial_ref::enumerate_algebras(Kind::Effect, 5); },
      [&] { enumerate_algebras(Kind::Effect, 5); }, repeats);
  row("enumerate effect size 6",
      [&] { serial_ref::enumerate_algebras(Kind::Effect, 6); },
      [&] { enumerate_algebras(Kind::Effect, 6); }, 1);
  row("enumerate effect size 7",
      [&] { serial_ref::enumerate_algebras(Kind::Effect, 7); },
      [&] { enumerate_algebras(Kind::Effect, 7); }, 1);
  return 0;
}
