#include "qks/partition.hpp"

#include <algorithm>

namespace qks {

bool is_horizontal_strip(const Partition& outer, const Partition& inner) {
  if (!outer.contains(inner)) return false;
  // Strip condition: inner_i >= outer_{i+1} for all rows.
  for (int i = 0; i < outer.length(); ++i)
    if (inner[i] < outer[i + 1]) return false;
  return true;
}

namespace {

void gen_partitions(int n, int max_part, int max_rows, std::vector<int>& acc,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(acc));
    return;
  }
  if (max_rows == 0) return;
  for (int p = std::min(n, max_part); p >= 1; --p) {
    acc.push_back(p);
    gen_partitions(n - p, p, max_rows - 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> all_partitions(int n, int max_rows) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> acc;
  gen_partitions(n, n, max_rows < 0 ? n + 1 : max_rows, acc, out);
  return out;
}

std::vector<Partition> partitions_over(const Partition& inner, int extra, int max_rows) {
  std::vector<Partition> out;
  if (extra < 0) return out;
  if (max_rows >= 0 && inner.length() > max_rows) return out;
  // Build row by row: row i can take any value between inner[i] and previous row.
  std::vector<int> rows;
  int nrows = max_rows < 0 ? inner.length() + extra : max_rows;
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (remaining == 0 && i >= inner.length()) {
      out.push_back(Partition(rows));
      return;
    }
    if (i >= nrows) return;
    int hi = i == 0 ? inner[0] + remaining : std::min(rows[i - 1], inner[i] + remaining);
    for (int v = hi; v >= inner[i]; --v) {
      if (v == 0) {
        // All further rows are zero; accept only if inner is exhausted.
        if (remaining - (v - inner[i]) == 0 && i >= inner.length())
          out.push_back(Partition(rows));
        return;
      }
      rows.push_back(v);
      self(self, i + 1, remaining - (v - inner[i]));
      rows.pop_back();
    }
  };
  rec(rec, 0, extra);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Partition> horizontal_strip_under(const Partition& outer, int k,
                                              const Partition& floor) {
  std::vector<Partition> out;
  if (k < 0 || k > outer.size() - floor.size()) return out;
  if (!outer.contains(floor)) return out;
  int len = outer.length();
  std::vector<int> rows;
  // Row i of mu ranges over [max(floor_i, outer_{i+1}), outer_i]; the lower
  // bound outer_{i+1} is exactly the horizontal-strip condition.
  auto rec = [&](auto&& self, int i, int removed) -> void {
    if (removed > k) return;
    if (i == len) {
      if (removed == k) out.push_back(Partition(rows));
      return;
    }
    int lo = std::max(floor[i], outer[i + 1]);
    for (int v = outer[i]; v >= lo; --v) {
      if (v > 0) rows.push_back(v);
      self(self, i + 1, removed + outer[i] - v);
      if (v > 0) rows.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<Partition> horizontal_strip_over(const Partition& inner, int k, int max_rows) {
  std::vector<Partition> out;
  if (k < 0) return out;
  int len = inner.length() + 1;
  if (max_rows >= 0) {
    if (inner.length() > max_rows) return out;
    len = std::min(len, max_rows);
  }
  std::vector<int> rows;
  // Row i of gamma ranges over [inner_i, inner_{i-1}] (row 0 unbounded above);
  // the upper bound inner_{i-1} is the horizontal-strip condition.
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i == len) {
      if (remaining == 0) out.push_back(Partition(rows));
      return;
    }
    int hi = i == 0 ? inner[0] + remaining : std::min(inner[i - 1], inner[i] + remaining);
    for (int v = hi; v >= inner[i]; --v) {
      if (v > 0) rows.push_back(v);
      if (v == 0) {
        if (remaining == 0) out.push_back(Partition(rows));
        continue;
      }
      self(self, i + 1, remaining - (v - inner[i]));
      rows.pop_back();
    }
  };
  rec(rec, 0, k);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Partition> vertical_strip_under(const Partition& outer, int k) {
  std::vector<Partition> out;
  if (k < 0 || k > outer.length()) return out;
  int len = outer.length();
  std::vector<int> rows;
  // Remove at most one cell per row, keeping rows weakly decreasing (prev
  // tracks the previous row's value, including zeros).
  auto rec = [&](auto&& self, int i, int removed, int prev) -> void {
    if (removed > k) return;
    if (i == len) {
      if (removed == k) out.push_back(Partition(rows));
      return;
    }
    for (int d = 0; d <= 1; ++d) {
      int v = outer[i] - d;
      if (v < 0 || v > prev) continue;
      if (v > 0) rows.push_back(v);
      self(self, i + 1, removed + d, v);
      if (v > 0) rows.pop_back();
    }
  };
  rec(rec, 0, 0, outer[0]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<MultiPartition> all_multipartitions(int r, int N, int max_rows) {
  std::vector<MultiPartition> out;
  std::vector<Partition> acc(r);
  auto rec = [&](auto&& self, int node, int remaining) -> void {
    if (node == r) {
      if (remaining == 0) out.push_back(MultiPartition(acc));
      return;
    }
    for (int k = (node == r - 1 ? remaining : 0); k <= remaining; ++k)
      for (const auto& p : all_partitions(k, max_rows)) {
        acc[node] = p;
        self(self, node + 1, remaining - k);
        acc[node] = Partition();
      }
  };
  rec(rec, 0, N);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qks
