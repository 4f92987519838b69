#include "gcat/fusion_cat.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gcat {

using nlohmann::json;

std::vector<int> FusionCategorySpec::simples_of_degree(int alpha) const {
  std::vector<int> out;
  for (int a = 0; a < num_simples(); ++a)
    if (degree[a] == alpha) out.push_back(a);
  return out;
}

std::vector<std::array<int, 3>> FusionCategorySpec::left_tree_basis(int a, int b, int c,
                                                                    int d) const {
  std::vector<std::array<int, 3>> basis;
  for (int e = 0; e < num_simples(); ++e)
    for (int mu = 0; mu < n(a, b, e); ++mu)
      for (int nu = 0; nu < n(e, c, d); ++nu) basis.push_back({e, mu, nu});
  return basis;
}

std::vector<std::array<int, 3>> FusionCategorySpec::right_tree_basis(int a, int b, int c,
                                                                     int d) const {
  std::vector<std::array<int, 3>> basis;
  for (int f = 0; f < num_simples(); ++f)
    for (int rho = 0; rho < n(b, c, f); ++rho)
      for (int sigma = 0; sigma < n(a, f, d); ++sigma) basis.push_back({f, rho, sigma});
  return basis;
}

Mat FusionCategorySpec::f_matrix(int a, int b, int c, int d) const {
  auto lb = left_tree_basis(a, b, c, d);
  auto rb = right_tree_basis(a, b, c, d);
  Mat m(lb.size(), rb.size());
  if (a == unit || b == unit || c == unit) {
    // strict unit convention: the bases biject in order and F is identity
    if (lb.size() != rb.size())
      throw internal_error("unit F-matrix is not square; fusion rules inconsistent");
    for (size_t i = 0; i < lb.size(); ++i) m.at(i, i) = Scalar::one();
    return m;
  }
  for (size_t i = 0; i < lb.size(); ++i)
    for (size_t j = 0; j < rb.size(); ++j) {
      FKey key{a, b, c, d, lb[i][0], lb[i][1], lb[i][2], rb[j][0], rb[j][1], rb[j][2]};
      auto it = f_entries.find(key);
      if (it != f_entries.end()) m.at(i, j) = it->second;
    }
  return m;
}

Scalar FusionCategorySpec::dim_c1() const {
  Scalar s = Scalar::zero(conductor);
  for (int a : simples_of_degree(group.unit())) s += dim(a) * dim(a);
  return s;
}

// ---------------- JSON ----------------

std::string FusionCategorySpec::to_json() const {
  json j;
  j["name"] = name;
  j["group"] = {{"order", group.order()}, {"unit", group.unit()}, {"mul", group.table()}};
  j["conductor"] = conductor;
  j["simples"] = simple_names;
  j["degree"] = degree;
  j["dual"] = dual;
  j["unit"] = unit;
  json fus = json::array();
  for (int a = 0; a < num_simples(); ++a)
    for (int b = 0; b < num_simples(); ++b)
      for (int c = 0; c < num_simples(); ++c)
        if (n(a, b, c) != 0) fus.push_back({a, b, c, n(a, b, c)});
  j["fusion"] = fus;
  json fs = json::array();
  for (const auto& [k, v] : f_entries) {
    json e;
    e["abcd"] = {k[0], k[1], k[2], k[3]};
    e["left"] = {k[4], k[5], k[6]};
    e["right"] = {k[7], k[8], k[9]};
    e["v"] = v.str();
    fs.push_back(e);
  }
  j["F"] = fs;
  json piv = json::array(), dm = json::array();
  for (const auto& p : pivotal) piv.push_back(p.str());
  for (const auto& d : dims) dm.push_back(d.str());
  j["pivotal"] = piv;
  j["dims"] = dm;
  return j.dump(1);
}

FusionCategorySpec FusionCategorySpec::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw parse_error(std::string("category spec: invalid JSON: ") + e.what());
  }
  FusionCategorySpec s;
  try {
    s.name = j.value("name", "");
    s.group = GroupTable(j.at("group").at("mul").get<std::vector<std::vector<int>>>(),
                         j.at("group").at("unit").get<int>());
    s.conductor = j.at("conductor").get<long>();
    s.simple_names = j.at("simples").get<std::vector<std::string>>();
    s.degree = j.at("degree").get<std::vector<int>>();
    s.dual = j.at("dual").get<std::vector<int>>();
    s.unit = j.at("unit").get<int>();
    int m = s.num_simples();
    s.fusion.assign(m, std::vector<std::vector<int>>(m, std::vector<int>(m, 0)));
    for (const auto& row : j.at("fusion")) {
      int a = row.at(0), b = row.at(1), c = row.at(2), nv = row.at(3);
      if (a < 0 || a >= m || b < 0 || b >= m || c < 0 || c >= m)
        throw parse_error("category spec: fusion index out of range");
      s.fusion[a][b][c] = nv;
    }
    for (const auto& e : j.at("F")) {
      FKey k{};
      auto abcd = e.at("abcd");
      auto left = e.at("left");
      auto right = e.at("right");
      for (int i = 0; i < 4; ++i) k[i] = abcd.at(i);
      for (int i = 0; i < 3; ++i) k[4 + i] = left.at(i);
      for (int i = 0; i < 3; ++i) k[7 + i] = right.at(i);
      s.f_entries[k] = Scalar::parse(e.at("v").get<std::string>());
    }
    for (const auto& p : j.at("pivotal")) s.pivotal.push_back(Scalar::parse(p.get<std::string>()));
    for (const auto& d : j.at("dims")) s.dims.push_back(Scalar::parse(d.get<std::string>()));
  } catch (const json::exception& e) {
    throw parse_error(std::string("category spec: missing or malformed field: ") + e.what());
  }
  return s;
}

FusionCategorySpec FusionCategorySpec::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open category spec file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

void FusionCategorySpec::save_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write category spec file: " + path);
  out << to_json() << "\n";
}

}  // namespace gcat
