#include "loopmod/multi_index.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>

#include "loopmod/errors.hpp"

namespace loopmod {

int label_degree(const Label& l) {
  if (const int* v = std::get_if<int>(&l)) return *v;
  return std::get<IndexPair>(l).k;
}

std::string label_str(const Label& l) {
  if (const int* v = std::get_if<int>(&l)) return std::to_string(*v);
  const auto& p = std::get<IndexPair>(l);
  return std::to_string(p.k) + "," + std::to_string(p.i);
}

Label parse_label(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ') s.push_back(c);
  try {
    const auto comma = s.find(',');
    std::size_t used = 0;
    if (comma == std::string::npos) {
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw InvalidArgument("bad label: " + text);
      return v;
    }
    const std::string a = s.substr(0, comma);
    const std::string b = s.substr(comma + 1);
    std::size_t ua = 0;
    std::size_t ub = 0;
    IndexPair p{std::stoi(a, &ua), std::stoi(b, &ub)};
    if (ua != a.size() || ub != b.size()) throw InvalidArgument("bad label: " + text);
    return p;
  } catch (const std::logic_error&) {
    throw InvalidArgument("bad label: " + text);
  }
}

MultiIndex::MultiIndex(std::initializer_list<Entry> entries) {
  for (const auto& [l, v] : entries) *this = plus(l, v);
}

std::int64_t MultiIndex::get(const Label& l) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), l,
                             [](const Entry& e, const Label& key) { return e.first < key; });
  return (it != entries_.end() && it->first == l) ? it->second : 0;
}

MultiIndex MultiIndex::with(const Label& l, std::int64_t value) const {
  MultiIndex out = *this;
  auto it = std::lower_bound(out.entries_.begin(), out.entries_.end(), l,
                             [](const Entry& e, const Label& key) { return e.first < key; });
  if (it != out.entries_.end() && it->first == l) {
    if (value == 0)
      out.entries_.erase(it);
    else
      it->second = value;
  } else if (value != 0) {
    out.entries_.insert(it, Entry{l, value});
  }
  return out;
}

MultiIndex MultiIndex::plus(const Label& l, std::int64_t delta) const { return with(l, get(l) + delta); }

std::int64_t MultiIndex::total() const {
  std::int64_t s = 0;
  for (const auto& e : entries_) s += e.second;
  return s;
}

std::int64_t MultiIndex::abs_total() const {
  std::int64_t s = 0;
  for (const auto& e : entries_) s += std::llabs(e.second);
  return s;
}

std::int64_t MultiIndex::max_abs_entry() const {
  std::int64_t m = 0;
  for (const auto& e : entries_) m = std::max<std::int64_t>(m, std::llabs(e.second));
  return m;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  MultiIndex out = *this;
  for (const auto& [l, v] : o.entries_) out = out.plus(l, v);
  return out;
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const { return *this + o.negated(); }

MultiIndex MultiIndex::negated() const {
  MultiIndex out = *this;
  for (auto& e : out.entries_) e.second = -e.second;
  return out;
}

std::string MultiIndex::str() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [l, v] : entries_) {
    if (!first) s += ", ";
    first = false;
    s += (std::holds_alternative<int>(l) ? label_str(l) : "(" + label_str(l) + ")") + ":" + std::to_string(v);
  }
  return s + "}";
}

std::strong_ordering multiindex_compare(const MultiIndex& a, const MultiIndex& b) {
  for (const auto* m : {&a, &b})
    for (const auto& e : m->entries())
      if (e.second < 0) throw InvalidArgument("multiindex_compare: negative entry in " + m->str());
  // Walk the union of supports in label order; absent entries are zero.
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ea.size() || j < eb.size()) {
    std::int64_t va = 0;
    std::int64_t vb = 0;
    if (j >= eb.size() || (i < ea.size() && ea[i].first < eb[j].first)) {
      va = ea[i++].second;
    } else if (i >= ea.size() || eb[j].first < ea[i].first) {
      vb = eb[j++].second;
    } else {
      va = ea[i++].second;
      vb = eb[j++].second;
    }
    if (va != vb) return va < vb ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::int64_t z_degree(const MultiIndex& k) {
  std::int64_t d = 0;
  for (const auto& [l, v] : k.entries()) d += v * label_degree(l);
  return d;
}

std::ostream& operator<<(std::ostream& os, const MultiIndex& m) { return os << m.str(); }

}  // namespace loopmod
