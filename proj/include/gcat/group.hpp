#pragma once

#include <string>
#include <vector>

#include "gcat/error.hpp"

namespace gcat {

/// Finite group given by its multiplication table. Elements are 0..n-1.
class GroupTable {
 public:
  GroupTable() = default;
  GroupTable(std::vector<std::vector<int>> mul, int unit);

  static GroupTable trivial();
  static GroupTable cyclic(int n);
  static GroupTable symmetric3();

  int order() const { return n_; }
  int unit() const { return unit_; }
  int mul(int a, int b) const { return mul_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int a, int k) const { return mul(mul(inv(k), a), k); }  // k^-1 a k
  const std::vector<std::vector<int>>& table() const { return mul_; }

  /// Checks associativity, unit, and inverse laws; throws validation_error.
  void validate() const;

  /// One representative per conjugacy class, ascending by representative.
  std::vector<int> conjugacy_class_reps() const;
  std::vector<int> conjugacy_class_of(int a) const;

  /// Elements g with g^p = unit.
  std::vector<int> elements_of_order_dividing(int p) const;

 private:
  int n_ = 0;
  int unit_ = 0;
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
};

}  // namespace gcat
