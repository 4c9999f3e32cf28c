#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace loopmod {

struct IndexPair {
  int k = 0;
  int i = 0;
  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

// A basis label: a plain integer index or a pair (k, i).
using Label = std::variant<int, IndexPair>;

// Integer part of a label: the index itself, or k for a pair.
int label_degree(const Label& l);
std::string label_str(const Label& l);
// Inverse of label_str: "3" or "2,1" / "(2,1)".
Label parse_label(const std::string& text);

// Finitely supported map Label -> nonzero integer, kept sorted by label.
class MultiIndex {
 public:
  using Entry = std::pair<Label, std::int64_t>;

  MultiIndex() = default;
  MultiIndex(std::initializer_list<Entry> entries);

  std::int64_t get(const Label& l) const;
  MultiIndex with(const Label& l, std::int64_t value) const;
  MultiIndex plus(const Label& l, std::int64_t delta) const;

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  // Sum of entries.
  std::int64_t total() const;
  // Sum of absolute values of entries.
  std::int64_t abs_total() const;
  std::int64_t max_abs_entry() const;
  MultiIndex operator+(const MultiIndex& o) const;
  MultiIndex operator-(const MultiIndex& o) const;
  MultiIndex negated() const;

  std::string str() const;

  // Storage order, used for containers. Not the tuple order of multiindex_compare.
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<Entry> entries_;
};

// Tuple order on nonnegative multi-indices: the first label (ascending) where the
// entries differ decides. Throws InvalidArgument on a negative entry.
std::strong_ordering multiindex_compare(const MultiIndex& a, const MultiIndex& b);

// Sum of entry * label_degree(label).
std::int64_t z_degree(const MultiIndex& k);

std::ostream& operator<<(std::ostream& os, const MultiIndex& m);

}  // namespace loopmod
