#include "qdeform/rmx/coloured_family.hpp"

#include <algorithm>

#include "qdeform/errors.hpp"

namespace qdeform {

ColouredFamily::ColouredFamily(SymMatrix entries, ColourGroup first, ColourGroup second)
    : entries_(std::move(entries)), first_(std::move(first)), second_(std::move(second)) {
  if (first_.empty() || first_.size() != second_.size()) {
    throw SlotError("colour slot groups must be nonempty and of equal size");
  }
  for (const auto& s : first_) {
    if (std::find(second_.begin(), second_.end(), s) != second_.end()) {
      throw SlotError("colour slot '" + s + "' appears in both groups");
    }
  }
}

SymMatrix ColouredFamily::instantiate(const ColourGroup& c1, const ColourGroup& c2) const {
  if (c1.size() != first_.size() || c2.size() != second_.size()) {
    throw SlotError("colour group size does not match the family's slots");
  }
  Bindings b;
  for (std::size_t i = 0; i < first_.size(); ++i) {
    if (c1[i] != first_[i]) b.emplace(first_[i], RatFunc::symbol(c1[i]));
    if (c2[i] != second_[i]) b.emplace(second_[i], RatFunc::symbol(c2[i]));
  }
  if (b.empty()) return entries_;
  return entries_.substitute(b);
}

bool ColouredFamily::is_colour_constant() const {
  for (const auto& e : entries_.entries()) {
    for (const auto& s : first_)
      if (e.depends_on(s)) return false;
    for (const auto& s : second_)
      if (e.depends_on(s)) return false;
  }
  return true;
}

}  // namespace qdeform
