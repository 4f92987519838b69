#include "gcat/bundle.hpp"

#include "gcat/morphism.hpp"

namespace gcat {

namespace {

/// Square root of x in Q(zeta_N) searched over roots of unity times
/// rational square roots, optionally times golden-ratio units when 5 | N.
std::optional<Scalar> find_sqrt(const Scalar& x, long N) {
  std::vector<Scalar> units{Scalar::one()};
  if (N % 5 == 0) {
    Scalar phi = Scalar(1) + Scalar::root_of_unity(5, 1) + Scalar::root_of_unity(5, 4);
    units.push_back(phi);
    units.push_back(phi.inverse());
  }
  for (const Scalar& w : units) {
    Scalar w2 = w * w;
    for (long j = 0; j < N; ++j) {
      Scalar cand_unit = Scalar::root_of_unity(N, j) * w;
      Scalar rest = x * (cand_unit * cand_unit).inverse();
      if (!rest.is_rational()) {
        Scalar shrunk = rest.shrink();
        if (shrunk.conductor() != 1) continue;
        rest = shrunk;
      }
      auto root = Scalar::sqrt_rational(rest.rational_value(), N);
      if (!root) continue;
      Scalar cand = cand_unit * *root;
      if (cand * cand == x) return cand;
    }
  }
  return std::nullopt;
}

/// Solve pivotal coefficients making the category spherical. The spec
/// must be complete except pivotal/dims, which are overwritten.
void solve_spherical_structure(FusionCategorySpec& s,
                               const std::vector<Scalar>& preferred_dims = {}) {
  int m = s.num_simples();
  s.pivotal.assign(m, Scalar::one());
  s.dims.assign(m, Scalar::one());
  Calc raw(s);
  std::vector<Scalar> L(m, Scalar::zero()), R(m, Scalar::zero());
  for (int a = 0; a < m; ++a) {
    L[a] = raw.trace_left(raw.id(SumObject::simple(a)));
    R[a] = raw.trace_right(raw.id(SumObject::simple(a)));
  }
  for (int a = 0; a < m; ++a) {
    Scalar rho = R[a] * L[a].inverse();
    auto p = find_sqrt(rho, s.conductor);
    if (!p)
      throw math_error("spherical structure: no square root of " + rho.str() +
                       " in the declared conductor for simple " + s.simple_names[a]);
    Scalar d = *p * L[a];
    if (!preferred_dims.empty() && !(d == preferred_dims[a])) {
      // try the other square root
      Scalar p2 = -*p;
      Scalar d2 = p2 * L[a];
      if (d2 == preferred_dims[a]) {
        p = p2;
        d = d2;
      }
    }
    s.pivotal[a] = *p;
    s.dims[a] = d;
  }
}

}  // namespace

FusionCategorySpec make_pointed(const GroupTable& labels, const GroupTable& grading,
                                const std::vector<int>& label_degree,
                                const std::function<Scalar(int, int, int)>& omega,
                                long conductor, const std::string& name) {
  FusionCategorySpec s;
  s.name = name;
  s.group = grading;
  s.conductor = conductor;
  int m = labels.order();
  for (int a = 0; a < m; ++a) s.simple_names.push_back("g" + std::to_string(a));
  s.simple_names[labels.unit()] = "1";
  s.degree = label_degree;
  s.dual.resize(m);
  for (int a = 0; a < m; ++a) s.dual[a] = labels.inv(a);
  s.unit = labels.unit();
  s.fusion.assign(m, std::vector<std::vector<int>>(m, std::vector<int>(m, 0)));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) s.fusion[a][b][labels.mul(a, b)] = 1;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        if (a == s.unit || b == s.unit || c == s.unit) continue;
        Scalar v = omega(a, b, c);
        int ab = labels.mul(a, b), abc = labels.mul(ab, c);
        int bc = labels.mul(b, c);
        FKey key{a, b, c, abc, ab, 0, 0, bc, 0, 0};
        s.f_entries[key] = v;
      }
  solve_spherical_structure(s);
  return s;
}

FusionCategorySpec make_vec_g(const GroupTable& g, int cocycle_k, long conductor,
                              const std::string& name) {
  int n = g.order();
  std::vector<int> deg(n);
  for (int a = 0; a < n; ++a) deg[a] = a;
  auto omega = [cocycle_k, n](int a, int b, int c) {
    if (cocycle_k == 0) return Scalar::one();
    // standard generator of H^3(Z/n): zeta_n^{k a floor((b+c)/n)}
    long carry = (b + c) / n;
    return Scalar::root_of_unity(n, (static_cast<long>(cocycle_k) * a * carry) % n);
  };
  return make_pointed(g, g, deg, omega, conductor, name);
}

FusionCategorySpec make_toric_code() {
  GroupTable z2 = GroupTable::cyclic(2);
  GroupTable triv = GroupTable::trivial();
  return make_pointed(z2, triv, {0, 0}, [](int, int, int) { return Scalar::one(); }, 4,
                      "toric_code");
}

FusionCategorySpec make_vec_z4_mod2() {
  GroupTable z4 = GroupTable::cyclic(4);
  GroupTable z2 = GroupTable::cyclic(2);
  return make_pointed(z4, z2, {0, 1, 0, 1}, [](int, int, int) { return Scalar::one(); }, 4,
                      "vec_z4_mod2");
}

FusionCategorySpec make_fibonacci() {
  FusionCategorySpec s;
  s.name = "fibonacci";
  s.group = GroupTable::trivial();
  s.conductor = 5;
  s.simple_names = {"1", "tau"};
  s.degree = {0, 0};
  s.dual = {0, 1};
  s.unit = 0;
  s.fusion.assign(2, std::vector<std::vector<int>>(2, std::vector<int>(2, 0)));
  s.fusion[0][0][0] = 1;
  s.fusion[0][1][1] = 1;
  s.fusion[1][0][1] = 1;
  s.fusion[1][1][0] = 1;
  s.fusion[1][1][1] = 1;
  Scalar phi = Scalar(1) + Scalar::root_of_unity(5, 1) + Scalar::root_of_unity(5, 4);
  Scalar iphi = phi.inverse();
  // F^{ttt}_t in the rational golden-ratio gauge:
  // rows/cols ordered (e=1),(e=tau)
  s.f_entries[FKey{1, 1, 1, 1, 0, 0, 0, 0, 0, 0}] = iphi;
  s.f_entries[FKey{1, 1, 1, 1, 0, 0, 0, 1, 0, 0}] = iphi;
  s.f_entries[FKey{1, 1, 1, 1, 1, 0, 0, 0, 0, 0}] = Scalar::one();
  s.f_entries[FKey{1, 1, 1, 1, 1, 0, 0, 1, 0, 0}] = -iphi;
  Scalar one = Scalar::one();
  solve_spherical_structure(s, {one, phi});
  return s;
}

FusionCategorySpec make_vec_z3_omega_gauged() {
  GroupTable z3 = GroupTable::cyclic(3);
  // gauge the standard cocycle by the coboundary of beta(a,b) = zeta_3^{ab}
  auto beta_exp = [](int a, int b) { return (a * b) % 3; };
  auto omega = [&beta_exp](int a, int b, int c) {
    long carry = (b + c) / 3;
    long base = (static_cast<long>(a) * carry) % 3;
    long d = beta_exp(b, c) + beta_exp(a, (b + c) % 3) - beta_exp((a + b) % 3, c) -
             beta_exp(a, b);
    long e = ((base + d) % 3 + 3) % 3;
    return Scalar::root_of_unity(3, e);
  };
  std::vector<int> deg = {0, 1, 2};
  return make_pointed(z3, z3, deg, omega, 3, "vec_z3_omega_gauged");
}

std::vector<FusionCategorySpec> bundled_specs() {
  std::vector<FusionCategorySpec> out;
  out.push_back(make_vec_g(GroupTable::cyclic(2), 0, 4, "vec_z2"));
  out.push_back(make_vec_g(GroupTable::cyclic(2), 1, 4, "vec_z2_omega"));
  out.push_back(make_vec_g(GroupTable::cyclic(3), 0, 3, "vec_z3"));
  out.push_back(make_vec_g(GroupTable::cyclic(3), 1, 3, "vec_z3_omega"));
  out.push_back(make_vec_g(GroupTable::symmetric3(), 0, 4, "vec_s3"));
  out.push_back(make_toric_code());
  out.push_back(make_vec_z4_mod2());
  out.push_back(make_fibonacci());
  out.push_back(make_vec_z3_omega_gauged());
  return out;
}

std::vector<MutatedSpec> mutated_specs() {
  std::vector<MutatedSpec> out;
  {
    // pentagon violation: perturb one F-entry of vec_z3_omega
    FusionCategorySpec s = make_vec_g(GroupTable::cyclic(3), 1, 3, "mut_pentagon");
    FKey key{1, 1, 1, 0, 2, 0, 0, 2, 0, 0};
    s.f_entries[key] = s.f_entries[key] * Scalar::root_of_unity(3, 1);
    out.push_back({s, "pentagon identity fails"});
  }
  {
    // fusion-degree compatibility: add a degree-incompatible fusion channel
    FusionCategorySpec s = make_vec_g(GroupTable::cyclic(2), 0, 4, "mut_degree");
    s.fusion[1][1][1] = 1;
    out.push_back({s, "fusion-degree compatibility"});
  }
  {
    // unit degree: vec_z2 with the unit placed in the nontrivial component
    FusionCategorySpec s = make_vec_g(GroupTable::cyclic(2), 0, 4, "mut_unit_degree");
    s.degree = {1, 0};
    out.push_back({s, "unit object does not have degree 1"});
  }
  {
    // dual degree: vec_z3 with identity dual map
    FusionCategorySpec s = make_vec_g(GroupTable::cyclic(3), 0, 3, "mut_dual_degree");
    s.dual = {0, 1, 2};
    out.push_back({s, "dual degree violated"});
  }
  {
    // dims: fibonacci with unit dims
    FusionCategorySpec s = make_fibonacci();
    s.name = "mut_dims";
    s.dims[1] = Scalar::one();
    out.push_back({s, "d(a)d(b) != sum N d(c)"});
  }
  {
    // sphericity: twist pivotal and dims of vec_z3 by a character
    FusionCategorySpec s = make_vec_g(GroupTable::cyclic(3), 0, 3, "mut_spherical");
    for (int a = 0; a < 3; ++a) {
      Scalar chi = Scalar::root_of_unity(3, a);
      s.pivotal[a] = s.pivotal[a] * chi;
      s.dims[a] = s.dims[a] * chi;
    }
    out.push_back({s, "sphericity"});
  }
  return out;
}

}  // namespace gcat
