#include "gcat/group.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace gcat {

GroupTable::GroupTable(std::vector<std::vector<int>> mul, int unit)
    : n_(static_cast<int>(mul.size())), unit_(unit), mul_(std::move(mul)) {
  if (n_ == 0) throw validation_error("group: empty multiplication table");
  for (const auto& row : mul_)
    if (static_cast<int>(row.size()) != n_)
      throw validation_error("group: multiplication table is not square");
  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mul_[a][b] == unit_) inv_[a] = b;
  validate();
}

GroupTable GroupTable::trivial() { return cyclic(1); }

GroupTable GroupTable::cyclic(int n) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m[a][b] = (a + b) % n;
  return GroupTable(std::move(m), 0);
}

GroupTable GroupTable::symmetric3() {
  // permutations of {0,1,2} listed as: id, (01), (02), (12), (012), (021)
  std::vector<std::array<int, 3>> perms = {
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  auto compose = [&](int a, int b) {
    // (a*b)(x) = a(b(x))
    std::array<int, 3> c;
    for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
    for (size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == c) return static_cast<int>(i);
    throw internal_error("symmetric3 composition table");
  };
  std::vector<std::vector<int>> m(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) m[a][b] = compose(a, b);
  return GroupTable(std::move(m), 0);
}

void GroupTable::validate() const {
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      int ab = mul_[a][b];
      if (ab < 0 || ab >= n_)
        throw validation_error("group: entry out of range at (" + std::to_string(a) + "," +
                               std::to_string(b) + ")");
    }
  for (int a = 0; a < n_; ++a) {
    if (mul_[unit_][a] != a || mul_[a][unit_] != a)
      throw validation_error("group: unit law fails at element " + std::to_string(a));
    if (inv_[a] < 0 || mul_[a][inv_[a]] != unit_ || mul_[inv_[a]][a] != unit_)
      throw validation_error("group: inverse law fails at element " + std::to_string(a));
  }
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
          throw validation_error("group: associativity fails at (" + std::to_string(a) + "," +
                                 std::to_string(b) + "," + std::to_string(c) + ")");
}

std::vector<int> GroupTable::conjugacy_class_of(int a) const {
  std::set<int> cls;
  for (int k = 0; k < n_; ++k) cls.insert(conj(a, k));
  return std::vector<int>(cls.begin(), cls.end());
}

std::vector<int> GroupTable::conjugacy_class_reps() const {
  std::vector<int> reps;
  std::set<int> seen;
  for (int a = 0; a < n_; ++a) {
    if (seen.count(a)) continue;
    reps.push_back(a);
    for (int x : conjugacy_class_of(a)) seen.insert(x);
  }
  return reps;
}

std::vector<int> GroupTable::elements_of_order_dividing(int p) const {
  std::vector<int> out;
  for (int a = 0; a < n_; ++a) {
    int x = unit_;
    for (int i = 0; i < p; ++i) x = mul_[x][a];
    if (x == unit_) out.push_back(a);
  }
  return out;
}

}  // namespace gcat
