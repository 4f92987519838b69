#include "gcat/fusion_cat.hpp"
#include "gcat/morphism.hpp"

namespace gcat {

namespace {

std::string idx3(const FusionCategorySpec& s, int a, int b, int c) {
  return "(" + s.simple_names[a] + "," + s.simple_names[b] + "," + s.simple_names[c] + ")";
}

void check_shapes(const FusionCategorySpec& s) {
  int m = s.num_simples();
  if (m == 0) throw validation_error("spec: no simple objects");
  if (static_cast<int>(s.degree.size()) != m) throw validation_error("spec: degree size mismatch");
  if (static_cast<int>(s.dual.size()) != m) throw validation_error("spec: dual size mismatch");
  if (static_cast<int>(s.pivotal.size()) != m)
    throw validation_error("spec: pivotal size mismatch");
  if (static_cast<int>(s.dims.size()) != m) throw validation_error("spec: dims size mismatch");
  if (s.unit < 0 || s.unit >= m) throw validation_error("spec: unit index out of range");
  if (s.conductor < 1) throw validation_error("spec: conductor must be positive");
  for (int a = 0; a < m; ++a) {
    if (s.degree[a] < 0 || s.degree[a] >= s.group.order())
      throw validation_error("spec: degree out of range for simple " + s.simple_names[a]);
    if (s.dual[a] < 0 || s.dual[a] >= m)
      throw validation_error("spec: dual out of range for simple " + s.simple_names[a]);
  }
  for (int a = 0; a < m; ++a)
    if (s.dual[s.dual[a]] != a)
      throw validation_error("spec: dual is not an involution at simple " + s.simple_names[a]);
  if (s.dual[s.unit] != s.unit) throw validation_error("spec: dual of the unit is not the unit");
}

void check_fusion(const FusionCategorySpec& s) {
  int m = s.num_simples();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (s.n(s.unit, a, b) != (a == b ? 1 : 0))
        throw validation_error("fusion: unit strictness fails at N(1," + s.simple_names[a] + ";" +
                               s.simple_names[b] + ")");
      if (s.n(a, s.unit, b) != (a == b ? 1 : 0))
        throw validation_error("fusion: unit strictness fails at N(" + s.simple_names[a] + ",1;" +
                               s.simple_names[b] + ")");
    }
  if (s.degree[s.unit] != s.group.unit())
    throw validation_error("grading: unit object does not have degree 1");
  for (int a = 0; a < m; ++a)
    if (s.degree[s.dual[a]] != s.group.inv(s.degree[a]))
      throw validation_error("grading: dual degree violated at simple " + s.simple_names[a]);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        if (s.n(a, b, c) < 0)
          throw validation_error("fusion: negative multiplicity at " + idx3(s, a, b, c));
        if (s.n(a, b, c) > 0 &&
            s.group.mul(s.degree[a], s.degree[b]) != s.degree[c])
          throw validation_error("grading: fusion-degree compatibility violated at " +
                                 idx3(s, a, b, c));
      }
  for (int alpha = 0; alpha < s.group.order(); ++alpha)
    if (s.simples_of_degree(alpha).empty())
      throw validation_error("grading: component " + std::to_string(alpha) +
                             " has no simple objects");
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (s.n(a, b, s.unit) != (b == s.dual[a] ? 1 : 0))
        throw validation_error("duality: N(" + s.simple_names[a] + "," + s.simple_names[b] +
                               ";1) must be delta(b, a*)");
  // associativity of fusion multiplicities
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d) {
          long lhs = 0, rhs = 0;
          for (int e = 0; e < m; ++e) {
            lhs += static_cast<long>(s.n(a, b, e)) * s.n(e, c, d);
            rhs += static_cast<long>(s.n(b, c, e)) * s.n(a, e, d);
          }
          if (lhs != rhs)
            throw validation_error("fusion: associativity of multiplicities fails at " +
                                   idx3(s, a, b, c) + "->" + s.simple_names[d]);
        }
}

void check_f_symbols(const FusionCategorySpec& s) {
  int m = s.num_simples();
  for (const auto& [k, v] : s.f_entries)
    if (k[0] == s.unit || k[1] == s.unit || k[2] == s.unit)
      throw validation_error("F-symbols: entries with a unit argument are fixed to identity and "
                             "must not be supplied");
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d) {
          auto lb = s.left_tree_basis(a, b, c, d);
          if (lb.empty()) continue;
          Mat F = s.f_matrix(a, b, c, d);
          if (F.rows() != F.cols())
            throw internal_error("F-matrix not square after associativity check");
          if (!F.invertible())
            throw validation_error("F-symbols: F-matrix is singular at " + idx3(s, a, b, c) +
                                   "->" + s.simple_names[d]);
        }
}

// index helpers for the pentagon bases
struct Enum5 {
  std::vector<std::array<int, 5>> items;
  size_t index(const std::array<int, 5>& t) const {
    for (size_t i = 0; i < items.size(); ++i)
      if (items[i] == t) return i;
    throw internal_error("pentagon basis index not found");
  }
};

void check_pentagon(const FusionCategorySpec& s) {
  int m = s.num_simples();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d)
          for (int x = 0; x < m; ++x) {
            // basis L: (e, mu1, g, mu2, mu3):  (((ab)c)d -> x)
            Enum5 L, R, M1, M2, M3;
            for (int e = 0; e < m; ++e)
              for (int mu1 = 0; mu1 < s.n(a, b, e); ++mu1)
                for (int g = 0; g < m; ++g)
                  for (int mu2 = 0; mu2 < s.n(e, c, g); ++mu2)
                    for (int mu3 = 0; mu3 < s.n(g, d, x); ++mu3)
                      L.items.push_back({e, mu1, g, mu2, mu3});
            if (L.items.empty()) continue;
            for (int h = 0; h < m; ++h)
              for (int rho = 0; rho < s.n(c, d, h); ++rho)
                for (int k = 0; k < m; ++k)
                  for (int tau = 0; tau < s.n(b, h, k); ++tau)
                    for (int ups = 0; ups < s.n(a, k, x); ++ups)
                      R.items.push_back({h, rho, k, tau, ups});
            for (int e = 0; e < m; ++e)
              for (int mu1 = 0; mu1 < s.n(a, b, e); ++mu1)
                for (int h = 0; h < m; ++h)
                  for (int rho = 0; rho < s.n(c, d, h); ++rho)
                    for (int sig = 0; sig < s.n(e, h, x); ++sig)
                      M1.items.push_back({e, mu1, h, rho, sig});
            for (int f = 0; f < m; ++f)
              for (int nu1 = 0; nu1 < s.n(b, c, f); ++nu1)
                for (int g = 0; g < m; ++g)
                  for (int nu2 = 0; nu2 < s.n(a, f, g); ++nu2)
                    for (int mu3 = 0; mu3 < s.n(g, d, x); ++mu3)
                      M2.items.push_back({f, nu1, g, nu2, mu3});
            for (int f = 0; f < m; ++f)
              for (int nu1 = 0; nu1 < s.n(b, c, f); ++nu1)
                for (int l = 0; l < m; ++l)
                  for (int kap = 0; kap < s.n(f, d, l); ++kap)
                    for (int om = 0; om < s.n(a, l, x); ++om)
                      M3.items.push_back({f, nu1, l, kap, om});

            Mat f1a(M1.items.size(), L.items.size());
            for (size_t col = 0; col < L.items.size(); ++col) {
              auto [e, mu1, g, mu2, mu3] = L.items[col];
              Mat F = s.f_matrix(e, c, d, x);
              auto lb = s.left_tree_basis(e, c, d, x);
              auto rb = s.right_tree_basis(e, c, d, x);
              for (size_t i = 0; i < lb.size(); ++i) {
                if (lb[i] != std::array<int, 3>{g, mu2, mu3}) continue;
                for (size_t j = 0; j < rb.size(); ++j) {
                  if (F.at(i, j).is_zero()) continue;
                  f1a.at(M1.index({e, mu1, rb[j][0], rb[j][1], rb[j][2]}), col) += F.at(i, j);
                }
              }
            }
            Mat f2a(R.items.size(), M1.items.size());
            for (size_t col = 0; col < M1.items.size(); ++col) {
              auto [e, mu1, h, rho, sig] = M1.items[col];
              Mat F = s.f_matrix(a, b, h, x);
              auto lb = s.left_tree_basis(a, b, h, x);
              auto rb = s.right_tree_basis(a, b, h, x);
              for (size_t i = 0; i < lb.size(); ++i) {
                if (lb[i] != std::array<int, 3>{e, mu1, sig}) continue;
                for (size_t j = 0; j < rb.size(); ++j) {
                  if (F.at(i, j).is_zero()) continue;
                  f2a.at(R.index({h, rho, rb[j][0], rb[j][1], rb[j][2]}), col) += F.at(i, j);
                }
              }
            }
            Mat f1b(M2.items.size(), L.items.size());
            for (size_t col = 0; col < L.items.size(); ++col) {
              auto [e, mu1, g, mu2, mu3] = L.items[col];
              Mat F = s.f_matrix(a, b, c, g);
              auto lb = s.left_tree_basis(a, b, c, g);
              auto rb = s.right_tree_basis(a, b, c, g);
              for (size_t i = 0; i < lb.size(); ++i) {
                if (lb[i] != std::array<int, 3>{e, mu1, mu2}) continue;
                for (size_t j = 0; j < rb.size(); ++j) {
                  if (F.at(i, j).is_zero()) continue;
                  f1b.at(M2.index({rb[j][0], rb[j][1], g, rb[j][2], mu3}), col) += F.at(i, j);
                }
              }
            }
            Mat f2b(M3.items.size(), M2.items.size());
            for (size_t col = 0; col < M2.items.size(); ++col) {
              auto [f, nu1, g, nu2, mu3] = M2.items[col];
              Mat F = s.f_matrix(a, f, d, x);
              auto lb = s.left_tree_basis(a, f, d, x);
              auto rb = s.right_tree_basis(a, f, d, x);
              for (size_t i = 0; i < lb.size(); ++i) {
                if (lb[i] != std::array<int, 3>{g, nu2, mu3}) continue;
                for (size_t j = 0; j < rb.size(); ++j) {
                  if (F.at(i, j).is_zero()) continue;
                  f2b.at(M3.index({f, nu1, rb[j][0], rb[j][1], rb[j][2]}), col) += F.at(i, j);
                }
              }
            }
            Mat f3b(R.items.size(), M3.items.size());
            for (size_t col = 0; col < M3.items.size(); ++col) {
              auto [f, nu1, l, kap, om] = M3.items[col];
              Mat F = s.f_matrix(b, c, d, l);
              auto lb = s.left_tree_basis(b, c, d, l);
              auto rb = s.right_tree_basis(b, c, d, l);
              for (size_t i = 0; i < lb.size(); ++i) {
                if (lb[i] != std::array<int, 3>{f, nu1, kap}) continue;
                for (size_t j = 0; j < rb.size(); ++j) {
                  if (F.at(i, j).is_zero()) continue;
                  f3b.at(R.index({rb[j][0], rb[j][1], l, rb[j][2], om}), col) += F.at(i, j);
                }
              }
            }
            Mat routeA = f2a * f1a;
            Mat routeB = f3b * (f2b * f1b);
            if (!(routeA == routeB))
              throw validation_error(
                  "pentagon identity fails at (" + s.simple_names[a] + "," + s.simple_names[b] +
                  "," + s.simple_names[c] + "," + s.simple_names[d] + ") -> " + s.simple_names[x]);
          }
}

void check_dims_and_pivotal(const FusionCategorySpec& s, Calc& calc) {
  int m = s.num_simples();
  // fusion-dimension relation on the declared dims
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      Scalar lhs = s.dim(a) * s.dim(b);
      Scalar rhs = Scalar::zero(s.conductor);
      for (int c = 0; c < m; ++c)
        if (s.n(a, b, c)) rhs += Scalar(s.n(a, b, c)) * s.dim(c);
      if (lhs != rhs)
        throw validation_error("dims: d(a)d(b) != sum N d(c) at (" + s.simple_names[a] + "," +
                               s.simple_names[b] + ")");
    }
  for (int a = 0; a < m; ++a) {
    Morphism ida = calc.id(SumObject::simple(a));
    Scalar dl = calc.trace_left(ida), dr = calc.trace_right(ida);
    if (dl != s.dim(a))
      throw validation_error("dims: left dimension of " + s.simple_names[a] +
                             " differs from declared (" + dl.str() + " vs " + s.dim(a).str() +
                             ")");
    if (dr != s.dim(a))
      throw validation_error("sphericity: right dimension of " + s.simple_names[a] +
                             " differs from declared (" + dr.str() + " vs " + s.dim(a).str() +
                             ")");
    if (s.dim(a).is_zero())
      throw validation_error("dims: simple " + s.simple_names[a] + " has dimension zero");
    // dual-compatible dimensions
    if (!(s.dim(s.dual[a]) == s.dim(a)))
      throw validation_error("dims: dim(a*) != dim(a) at simple " + s.simple_names[a]);
  }
}

void check_pivotal_functoriality(const FusionCategorySpec& s, Calc& calc) {
  // the two expressions for the dual morphism must agree on fusion generators
  int m = s.num_simples();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        int mult = s.n(a, b, c);
        for (int mu = 0; mu < mult; ++mu) {
          Morphism f = calc.path_vector(Word{a, b}, c, mu);
          Morphism f1 = calc.dual_morphism(f);
          // second formula: (id_{X*} (x) tev_Y)(id (x) f (x) id)(tcoev_X (x) id_{Y*})
          const SumObject& X = f.src;
          const SumObject& Y = f.dst;
          SumObject Xs = calc.dual_obj(X), Ys = calc.dual_obj(Y);
          Morphism s1 = calc.tensor(calc.tcoev(X), calc.id(Ys));
          Morphism s2 = calc.tensor(calc.id(Xs), calc.tensor(f, calc.id(Ys)));
          Morphism s3 = calc.tensor(calc.id(Xs), calc.tev(Y));
          Morphism f2 = calc.compose(s3, calc.compose(s2, s1));
          if (!(f1 == f2))
            throw validation_error("pivotality: the two dual-morphism formulas disagree at " +
                                   idx3(s, a, b, c));
        }
      }
}

void check_sphericity(const FusionCategorySpec& s, Calc& calc) {
  int m = s.num_simples();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      SumObject w = SumObject::of(Word{a, b});
      auto basis = calc.hom_basis(w, w);
      for (const auto& f : basis) {
        Scalar tl = calc.trace_left(f), tr = calc.trace_right(f);
        if (tl != tr)
          throw validation_error("sphericity: left and right traces differ on End(" +
                                 s.simple_names[a] + " (x) " + s.simple_names[b] + ")");
      }
    }
}

}  // namespace

Scalar validate_spec(const FusionCategorySpec& spec) {
  spec.group.validate();
  check_shapes(spec);
  check_fusion(spec);
  check_f_symbols(spec);
  check_pentagon(spec);
  Calc calc(spec);
  check_dims_and_pivotal(spec, calc);
  check_pivotal_functoriality(spec, calc);
  check_sphericity(spec, calc);
  Scalar d1 = spec.dim_c1();
  if (d1.is_zero()) throw validation_error("dims: dim(C_1) is zero");
  return d1;
}

}  // namespace gcat
