#ifndef FENT_GROUP_ELEMENT_HPP
#define FENT_GROUP_ELEMENT_HPP

#include <compare>
#include <string>
#include <vector>

namespace fent {

// Element of the countable direct sum of Z/2Z copies indexed by the positive
// integers. Represented by its finite support (sorted, 1-based coordinate
// indices). The group is written additively; addition is symmetric difference
// of supports and every element is its own inverse.
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::vector<int> support);
  static GroupElement identity() { return GroupElement{}; }
  static GroupElement single(int coordinate);

  const std::vector<int>& support() const { return support_; }
  bool is_identity() const { return support_.empty(); }
  bool contains(int coordinate) const;

  // max of support; 0 for the identity (empty-support convention).
  int norm() const { return support_.empty() ? 0 : support_.back(); }

  GroupElement operator+(const GroupElement& other) const;
  GroupElement& operator+=(const GroupElement& other);

  auto operator<=>(const GroupElement&) const = default;

  // Canonical rendering, e.g. "{1,4,9}"; identity is "{}".
  std::string to_string() const;
  static GroupElement parse(const std::string& text);

 private:
  std::vector<int> support_;  // sorted ascending, all >= 1, no duplicates
};

}  // namespace fent

#endif
