#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gcat/fusion_cat.hpp"

namespace gcat {

/// Pointed category: simple objects = elements of a label group, fusion =
/// group law, F-symbols = a 3-cochain omega on the labels. The grading
/// group may differ from the label group (degree = a homomorphism).
/// Pivotal coefficients and dims are solved so that the category is
/// spherical; throws if the cochain does not admit a spherical structure
/// over the given conductor.
FusionCategorySpec make_pointed(const GroupTable& labels, const GroupTable& grading,
                                const std::vector<int>& label_degree,
                                const std::function<Scalar(int, int, int)>& omega,
                                long conductor, const std::string& name);

/// Vec_G graded by itself. For cyclic G, cocycle_k selects the standard
/// 3-cocycle omega_k(a,b,c) = zeta_n^{k a floor((b+c)/n)}; for other G
/// only the trivial cocycle is provided here.
FusionCategorySpec make_vec_g(const GroupTable& g, int cocycle_k, long conductor,
                              const std::string& name);

/// Vec_{Z/2} with trivial grading group (the toric-code input).
FusionCategorySpec make_toric_code();

/// Vec_{Z/4} graded by Z/2 through reduction mod 2.
FusionCategorySpec make_vec_z4_mod2();

/// Fibonacci category (trivial grading group), exact golden-ratio gauge
/// over Q(zeta_5).
FusionCategorySpec make_fibonacci();

/// A gauge-transformed copy of Vec_{Z/3}^omega (same cohomology class,
/// different F-symbols); invariants must agree with the untransformed one.
FusionCategorySpec make_vec_z3_omega_gauged();

/// The full bundled corpus, fixed order.
std::vector<FusionCategorySpec> bundled_specs();

/// Six specs each violating exactly one named axiom, with the expected
/// error fragment.
struct MutatedSpec {
  FusionCategorySpec spec;
  std::string expected_error_fragment;
};
std::vector<MutatedSpec> mutated_specs();

}  // namespace gcat
