#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gcat/group.hpp"
#include "gcat/mat.hpp"
#include "gcat/scalar.hpp"

namespace gcat {

/// Index key for one F-symbol entry:
/// (a,b,c,d, e,mu,nu, f,rho,sigma) in the tree-basis convention below.
using FKey = std::array<int, 10>;

/// Skeletal presentation of a spherical G-fusion category.
///
/// Simple objects are indexed 0..num_simples-1 with the monoidal unit at
/// index `unit`. Fusion trees are written with splitting vertices: the
/// basis of Hom(d, (a (x) b) (x) c) consists of (s^{ab}_{e,mu} (x) id_c) o
/// s^{ec}_{d,nu} over simples e and multiplicity indices, and the basis of
/// Hom(d, a (x) (b (x) c)) of (id_a (x) s^{bc}_{f,rho}) o s^{af}_{d,sigma}.
/// The F-symbols express the first basis in the second:
///
///   (s^{ab}_{e,mu} (x) id_c) s^{ec}_{d,nu}
///     = sum_{f,rho,sigma} F^{abc}_d[(e,mu,nu),(f,rho,sigma)]
///         (id_a (x) s^{bc}_{f,rho}) s^{af}_{d,sigma}.
///
/// F-matrices with a unit argument are the identity (strict unit
/// convention); files must not override them.
class FusionCategorySpec {
 public:
  std::string name;
  GroupTable group;
  long conductor = 1;
  std::vector<std::string> simple_names;
  std::vector<int> degree;  // group element per simple
  std::vector<int> dual;    // involution on simples
  int unit = 0;
  // fusion[a][b][c] = N_{ab}^c
  std::vector<std::vector<std::vector<int>>> fusion;
  std::map<FKey, Scalar> f_entries;
  std::vector<Scalar> pivotal;
  std::vector<Scalar> dims;

  int num_simples() const { return static_cast<int>(simple_names.size()); }
  int n(int a, int b, int c) const { return fusion[a][b][c]; }
  const Scalar& dim(int a) const { return dims[a]; }

  std::vector<int> simples_of_degree(int alpha) const;

  /// F-matrix of (a,b,c;d): rows = left basis (e,mu,nu), cols = right
  /// basis (f,rho,sigma), both enumerated ascending. Identity when one of
  /// a,b,c is the unit.
  Mat f_matrix(int a, int b, int c, int d) const;
  /// Enumerations backing f_matrix.
  std::vector<std::array<int, 3>> left_tree_basis(int a, int b, int c, int d) const;
  std::vector<std::array<int, 3>> right_tree_basis(int a, int b, int c, int d) const;

  Scalar dim_c1() const;

  // ---- serialization (bit-exact round-trip) ----
  std::string to_json() const;
  static FusionCategorySpec from_json(const std::string& text);
  static FusionCategorySpec load_file(const std::string& path);
  void save_file(const std::string& path) const;
};

/// Full axiom validation; throws validation_error naming the first
/// violated identity and the offending indices. Returns the neutral
/// global dimension (which it checks to be nonzero).
Scalar validate_spec(const FusionCategorySpec& spec);

}  // namespace gcat
