#include "sympdec/ab_group.hpp"

#include <sstream>

#include "sympdec/error.hpp"
#include "sympdec/smith.hpp"

namespace sympdec {

FgAbGroup::FgAbGroup(std::vector<Integer> orders) {
  orders_.reserve(orders.size());
  for (auto& k : orders) {
    if (k < 0) fail(ErrorKind::InvalidArgument, "cyclic order must be non-negative");
    if (k != 1) orders_.push_back(std::move(k));
  }
}

std::size_t FgAbGroup::rank() const {
  std::size_t r = 0;
  for (const auto& k : orders_) {
    if (k.is_zero()) ++r;
  }
  return r;
}

FgAbGroup FgAbGroup::canonical() const {
  std::vector<Integer> torsion;
  for (const auto& k : orders_) {
    if (!k.is_zero()) torsion.push_back(k);
  }
  IntMatrix rel(torsion.size(), torsion.size());
  for (std::size_t i = 0; i < torsion.size(); ++i) rel(i, i) = torsion[i];
  std::vector<Integer> out = smith_normal_form(rel).diagonal();
  out.resize(out.size() + rank(), Integer(0));
  return FgAbGroup(std::move(out));
}

bool FgAbGroup::isomorphic_to(const FgAbGroup& other) const {
  return canonical() == other.canonical();
}

std::string FgAbGroup::to_string() const {
  if (orders_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) os << " x ";
    if (orders_[i].is_zero()) {
      os << 'Z';
    } else {
      os << "Z/" << orders_[i];
    }
  }
  return os.str();
}

FgAbGroup product(const FgAbGroup& a, const FgAbGroup& b) {
  FgAbGroup out = a;
  out.orders_.insert(out.orders_.end(), b.orders_.begin(), b.orders_.end());
  return out;
}

}  // namespace sympdec
