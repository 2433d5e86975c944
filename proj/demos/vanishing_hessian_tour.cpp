// Walks the core API on the classical cubic in P^4 with vanishing hessian:
// build the form, inspect its hessian matrix, compute the rank profile and
// confirm it is not a cone.
#include <hesskit/hesskit.hpp>

#include <cstdio>

using namespace hesskit;

int main() {
  FamilyInstance inst = perazzo();
  std::printf("f = %s\n\n", format_poly(inst.f).c_str());

  Matrix<PolyQ> h = hessian_matrix(inst.f);
  std::printf("hessian matrix (%zu x %zu):\n", h.rows(), h.cols());
  for (std::size_t i = 0; i < h.rows(); ++i) {
    for (std::size_t j = 0; j < h.cols(); ++j) {
      std::printf("  %-14s", format_poly(h.at(i, j)).c_str());
    }
    std::printf("\n");
  }

  PolyQ det = determinant(h);
  std::printf("\ndet H = %s\n", det.is_zero() ? "0" : format_poly(det).c_str());

  SampleConfig cfg;
  HessianProfile p = hessian_profile(inst.f, cfg);
  std::printf("generic rank of H:        %zu\n", p.generic_rank);
  std::printf("rank of H mod f:          %zu (%s)\n", p.rank_mod_f,
              to_string(p.rank_mod_method));
  std::printf("dim of the polar image:   %lld\n", p.dim_polar_image);
  std::printf("dim of the dual variety:  %lld\n", p.dim_dual);
  std::printf("dual codim in the image:  %lld\n", p.dual_codim_in_polar);

  ConeResult cone = cone_test(inst.f);
  std::printf("cone:                     %s\n", cone.is_cone ? "yes" : "no");
  std::printf("\nthe hessian vanishes identically, yet the form is not a cone\n");
  return 0;
}
