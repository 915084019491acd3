#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

namespace qks {

// Integer partition: weakly decreasing nonnegative parts, stored without
// trailing zeros.  operator[] returns 0 past the end, which keeps strip and
// containment logic free of length bookkeeping.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : parts_(parts) { normalize(); }
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { normalize(); }

  int operator[](int i) const {
    return (i >= 0 && i < static_cast<int>(parts_.size())) ? parts_[i] : 0;
  }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }

  bool contains(const Partition& inner) const {
    for (int i = 0; i < inner.length(); ++i)
      if ((*this)[i] < inner[i]) return false;
    return true;
  }

  Partition conjugate() const {
    std::vector<int> c;
    for (int j = 0; parts_.size() > 0 && j < parts_[0]; ++j) {
      int cnt = 0;
      for (int p : parts_)
        if (p > j) ++cnt;
      c.push_back(cnt);
    }
    return Partition(std::move(c));
  }

  // Raise part `row` (0-based) by `by`; caller must keep the result a partition.
  Partition with_part(int row, int by) const {
    std::vector<int> p = parts_;
    if (row >= static_cast<int>(p.size())) p.resize(row + 1, 0);
    p[row] += by;
    return Partition(std::move(p));
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

  std::string to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

 private:
  void normalize() {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i + 1 < parts_.size(); ++i) assert(parts_[i] >= parts_[i + 1]);
    for (int p : parts_) assert(p >= 0);
  }
  std::vector<int> parts_;
};

// Difference outer/inner is a horizontal strip: at most one cell per column.
bool is_horizontal_strip(const Partition& outer, const Partition& inner);

// All partitions of n (optionally with at most max_rows parts), in a fixed
// deterministic order (largest first part first).
std::vector<Partition> all_partitions(int n, int max_rows = -1);

// All partitions gamma with inner <= gamma, |gamma/inner| = extra, and at most
// max_rows parts.
std::vector<Partition> partitions_over(const Partition& inner, int extra, int max_rows);

// Partitions mu with floor <= mu <= outer and outer/mu a horizontal strip of k
// cells.
std::vector<Partition> horizontal_strip_under(const Partition& outer, int k,
                                              const Partition& floor = Partition());
// Partitions gamma >= inner with gamma/inner a horizontal strip of k cells
// (max_rows < 0 leaves the row count free, i.e. at most length+1 rows).
std::vector<Partition> horizontal_strip_over(const Partition& inner, int k, int max_rows = -1);
// Partitions mu <= outer with outer/mu a vertical strip of k cells.
std::vector<Partition> vertical_strip_under(const Partition& outer, int k);

// Tuple of r partitions, one per quiver node.
class MultiPartition {
 public:
  MultiPartition() = default;
  explicit MultiPartition(std::vector<Partition> comp) : comp_(std::move(comp)) {}
  MultiPartition(int r, const Partition& fill) : comp_(r, fill) {}

  int r() const { return static_cast<int>(comp_.size()); }
  const Partition& operator[](int i) const { return comp_[i]; }
  Partition& operator[](int i) { return comp_[i]; }
  const std::vector<Partition>& components() const { return comp_; }
  int size() const {
    int s = 0;
    for (const auto& p : comp_) s += p.size();
    return s;
  }
  std::vector<int> size_vector() const {
    std::vector<int> v;
    v.reserve(comp_.size());
    for (const auto& p : comp_) v.push_back(p.size());
    return v;
  }

  friend bool operator==(const MultiPartition&, const MultiPartition&) = default;
  // Canonical output order: by size vector, then componentwise lexicographic.
  friend bool operator<(const MultiPartition& a, const MultiPartition& b) {
    auto sa = a.size_vector(), sb = b.size_vector();
    if (sa != sb) return sa < sb;
    return a.comp_ < b.comp_;
  }

  std::string to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < comp_.size(); ++i) {
      if (i) s += ",";
      s += comp_[i].to_string();
    }
    return s + "]";
  }

 private:
  std::vector<Partition> comp_;
};

// All r-tuples of partitions with given total size N and every component of
// length <= max_rows (max_rows < 0 means unbounded), sorted canonically.
std::vector<MultiPartition> all_multipartitions(int r, int N, int max_rows = -1);

}  // namespace qks
