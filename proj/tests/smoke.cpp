// Build sanity: pulls every public header through the umbrella include and
// exercises one tiny end-to-end path so link and runtime basics are covered.
#include <hesskit/hesskit.hpp>

#include <cstdio>

int main() {
  using namespace hesskit;
  auto inst = perazzo();
  SampleConfig cfg;
  cfg.trials = 4;
  cfg.sample_points = 4;
  auto profile = hessian_profile(inst.f, cfg);
  if (!profile.hess_is_zero) {
    std::puts("smoke: expected a vanishing hessian");
    return 1;
  }
  if (profile.generic_rank != 4 || profile.rank_mod_f != 4) {
    std::puts("smoke: unexpected hessian ranks");
    return 1;
  }
  std::puts("smoke: ok");
  return 0;
}
