#pragma once

#include <string>
#include <vector>

#include "sympdec/cyclotomic.hpp"

namespace sympdec {

/// Finitely generated abelian group as an ordered product of cyclic groups.
/// An order of 0 stands for Z, an order k >= 2 for Z/k; factors of order 1
/// are dropped on construction. The order of the factors is significant: it
/// fixes the generator basis that homomorphism matrices refer to.
class FgAbGroup {
 public:
  FgAbGroup() = default;
  explicit FgAbGroup(std::vector<Integer> orders);

  static FgAbGroup trivial() { return {}; }
  static FgAbGroup integers() { return FgAbGroup({Integer(0)}); }
  static FgAbGroup cyclic(const Integer& k) { return FgAbGroup({k}); }

  const std::vector<Integer>& orders() const { return orders_; }
  std::size_t num_generators() const { return orders_.size(); }
  bool is_trivial() const { return orders_.empty(); }
  std::size_t rank() const;
  bool is_finite() const { return rank() == 0; }

  /// Invariant-factor form: torsion d1 | d2 | ... followed by the free part.
  FgAbGroup canonical() const;
  bool isomorphic_to(const FgAbGroup& other) const;

  /// "0", "Z", "Z/2", "Z x Z/2", ...
  std::string to_string() const;

  friend FgAbGroup product(const FgAbGroup& a, const FgAbGroup& b);
  friend bool operator==(const FgAbGroup& a, const FgAbGroup& b) { return a.orders_ == b.orders_; }

 private:
  std::vector<Integer> orders_;
};

}  // namespace sympdec
