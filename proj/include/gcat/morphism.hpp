#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gcat/fusion_cat.hpp"

namespace gcat {

/// A tensor word of simple objects (strictly associative, unit = empty).
using Word = std::vector<int>;

/// Formal finite direct sum of tensor words.
struct SumObject {
  std::vector<Word> words;

  static SumObject unit() { return SumObject{{Word{}}}; }
  static SumObject of(Word w) { return SumObject{{std::move(w)}}; }
  static SumObject simple(int a) { return SumObject{{Word{a}}}; }

  bool operator==(const SumObject& o) const { return words == o.words; }
  size_t num_summands() const { return words.size(); }
  std::string str(const FusionCategorySpec& spec) const;
};

/// Morphism between sum objects, stored block-per-simple: blk[c] is the
/// matrix of the induced map Hom(c, src) -> Hom(c, dst) in the canonical
/// fusion-path bases. Absent blocks are zero.
struct Morphism {
  SumObject src, dst;
  std::map<int, Mat> blk;

  bool is_zero() const;
  bool operator==(const Morphism& o) const;
};

/// One fusion path through a word: steps (z_k, mu_k), one per letter,
/// where z_k is the intermediate simple after consuming letter k.
struct FusionPath {
  std::vector<std::pair<int, int>> steps;
  bool operator<(const FusionPath& o) const { return steps < o.steps; }
  bool operator==(const FusionPath& o) const { return steps == o.steps; }
};

/// Enumerated fusion paths from a start simple through a word, grouped by
/// final simple. Deterministic order (DP over letters, ascending simples
/// and multiplicity indices).
struct PathTable {
  std::vector<std::vector<FusionPath>> by_target;  // [c] -> ordered paths
  int index_of(int c, const FusionPath& p) const;
};

/// The morphism calculus bound to one category spec. Holds caches; not
/// thread-safe — use one instance per thread and share the spec.
class Calc {
 public:
  explicit Calc(const FusionCategorySpec& spec);

  const FusionCategorySpec& spec() const { return spec_; }

  // ---- path bookkeeping ----
  const PathTable& table(int start, const Word& w);
  size_t block_dim(int c, const SumObject& x);
  /// Offset of summand k inside the block-c index space of x.
  size_t summand_offset(int c, const SumObject& x, size_t k);

  // ---- basic constructors ----
  Morphism id(const SumObject& x);
  Morphism zero(const SumObject& src, const SumObject& dst);
  /// Basis path p (index i at block c) of word w as morphism (c) -> w.
  Morphism path_vector(const Word& w, int c, int i);
  /// Dual basis covector as morphism w -> (c).
  Morphism path_covector(const Word& w, int c, int i);
  /// Injection of summand k and projection onto summand k.
  Morphism inject(const SumObject& x, size_t k);
  Morphism project(const SumObject& x, size_t k);

  // ---- algebra ----
  Morphism compose(const Morphism& g, const Morphism& f);
  Morphism add(const Morphism& f, const Morphism& g);
  Morphism sub(const Morphism& f, const Morphism& g);
  Morphism scale(const Scalar& s, const Morphism& f);
  Morphism tensor(const Morphism& f, const Morphism& g);
  Morphism invert(const Morphism& f);  // throws math_error if not invertible
  bool invertible(const Morphism& f);

  SumObject tensor_obj(const SumObject& x, const SumObject& y);

  // ---- duality ----
  SumObject dual_obj(const SumObject& x);
  Word dual_word(const Word& w);
  Morphism ev(const SumObject& x);     // x* (x) x -> unit
  Morphism coev(const SumObject& x);   // unit -> x (x) x*
  Morphism tev(const SumObject& x);    // x (x) x* -> unit
  Morphism tcoev(const SumObject& x);  // unit -> x* (x) x
  Morphism dual_morphism(const Morphism& f);  // f*: dst* -> src*

  // ---- scalars, traces, dims ----
  /// The unique block entry of a morphism unit -> unit.
  Scalar scalar_of(const Morphism& f);
  Scalar trace_left(const Morphism& f);
  Scalar trace_right(const Morphism& f);
  /// Spherical trace via block traces (valid once sphericity holds).
  Scalar trace_fast(const Morphism& f);
  Scalar dim_of(const SumObject& x);  // declared dims, additive/multiplicative

  size_t hom_dim(const SumObject& x, const SumObject& y);
  /// Basis of Hom(x, y) as morphisms, deterministic order.
  std::vector<Morphism> hom_basis(const SumObject& x, const SumObject& y);
  /// Coordinates of f in hom_basis(src, dst) order.
  std::vector<Scalar> hom_coords(const Morphism& f);

  /// Degree of a homogeneous object; nullopt for non-homogeneous.
  std::optional<int> degree_of(const SumObject& x) const;
  std::optional<int> degree_of_word(const Word& w) const;

  /// Duality normalization scalars (computed on demand):
  const Scalar& ev_norm(int a);
  const Scalar& tev_norm(int a);

  /// Change of basis from paths-from-e through w to the split basis
  /// (c', nu in N_{e c'}^c, path of w to c'): rows = split basis, cols =
  /// paths from e.  omega_inv is its inverse.
  const Mat& omega(int e, const Word& w, int c);
  const Mat& omega_inv(int e, const Word& w, int c);
  /// Enumeration of the split basis rows: (c', nu, path index).
  std::vector<std::array<int, 3>> omega_rows(int e, const Word& w, int c);

  Mat f_matrix_cached(int a, int b, int c, int d);

 private:
  const FusionCategorySpec& spec_;
  std::map<std::pair<int, Word>, PathTable> tables_;
  std::map<std::tuple<int, Word, int>, Mat> omega_, omega_inv_;
  std::map<std::array<int, 4>, Mat> fmat_;
  std::vector<std::optional<Scalar>> ev_norm_, tev_norm_;

  Morphism tensor_id_right(const Morphism& f, const SumObject& z);
  Morphism tensor_id_left(const SumObject& z, const Morphism& g);
  Morphism ev_word(const Word& w);
  Morphism coev_word(const Word& w);
  Morphism tev_word(const Word& w);
  Morphism tcoev_word(const Word& w);
};

}  // namespace gcat
