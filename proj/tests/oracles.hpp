#pragma once

// Slow, independent reference computations used by the tests.

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace oracle {

using Pt = std::vector<long long>;
using Part = std::vector<int>;

// Full box scan of sum c_i x_i^2 = k.
inline std::vector<Pt> quadric_points(const std::vector<long long>& c, long long k) {
  std::vector<Pt> out;
  Pt cur(c.size());
  std::function<void(std::size_t, long long)> rec = [&](std::size_t i, long long acc) {
    if (i == c.size()) {
      if (acc == k) out.push_back(cur);
      return;
    }
    long long b = 0;
    while ((b + 1) * (b + 1) * c[i] <= k) ++b;
    for (long long x = -b; x <= b; ++x) {
      cur[i] = x;
      rec(i + 1, acc + c[i] * x * x);
    }
  };
  if (k >= 0) rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Part> partitions(int n) {
  std::vector<Part> out;
  Part cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int x = std::min(left, cap); x >= 1; --x) {
      cur.push_back(x);
      rec(left - x, x);
      cur.pop_back();
    }
  };
  rec(n, n);
  std::sort(out.begin(), out.end());
  return out;
}

inline int hook(const Part& p, int r, int c) {
  int arm = p[r] - c - 1;
  int leg = 0;
  for (int k = r + 1; k < static_cast<int>(p.size()) && p[k] > c; ++k) ++leg;
  return arm + leg + 1;
}

inline bool has_hook(const Part& p, int d) {
  for (int r = 0; r < static_cast<int>(p.size()); ++r)
    for (int c = 0; c < p[r]; ++c)
      if (hook(p, r, c) == d) return true;
  return false;
}

inline Part transpose(const Part& p) {
  Part t;
  for (int c = 0; !p.empty() && c < p[0]; ++c) {
    int len = 0;
    for (int x : p)
      if (x > c) ++len;
    t.push_back(len);
  }
  return t;
}

inline int size(const Part& p) { return std::accumulate(p.begin(), p.end(), 0); }

// Boxes (r, c) with (c - r) mod d == i.
inline int residue_boxes(const Part& p, int d, int i) {
  int n = 0;
  for (int r = 0; r < static_cast<int>(p.size()); ++r)
    for (int c = 0; c < p[r]; ++c)
      if (((c - r) % d + d) % d == i) ++n;
  return n;
}

// Doubled diagram of a strict partition: diagonal hooks with arm l_k and leg l_k - 1.
inline Part doubled(const Part& bar) {
  std::vector<int> rows;
  auto put = [&](int r) {
    if (static_cast<int>(rows.size()) <= r) rows.resize(r + 1, 0);
    ++rows[r];
  };
  for (int k = 0; k < static_cast<int>(bar.size()); ++k) {
    for (int c = k; c <= k + bar[k]; ++c) put(k);
    for (int i = k + 1; i <= k + bar[k] - 1; ++i) put(i);
  }
  return rows;
}

inline std::set<Pt> orbit(const std::string& group, const Pt& p) {
  std::set<Pt> out;
  if (group == "D8" || group == "C4" || group == "V4") {
    const long long x = p[0], y = p[1];
    if (group == "V4") return {{x, y}, {-x, y}, {x, -y}, {-x, -y}};
    out = {{x, y}, {-y, x}, {-x, -y}, {y, -x}};
    if (group == "D8") out.insert({{y, x}, {-x, y}, {-y, -x}, {x, -y}});
    return out;
  }
  if (group == "C6") {
    Pt q = p;
    for (int k = 0; k < 6; ++k) {
      out.insert(q);
      q = {(q[0] - 3 * q[1]) / 2, (q[0] + q[1]) / 2};
    }
    return out;
  }
  if (group == "G_A3") {
    Pt q = p;
    for (int k = 0; k < 6; ++k) {
      out.insert(q);
      out.insert({q[0], q[1], -q[2]});
      q = {(q[0] - 3 * q[2]) / 2, q[1], (q[0] + q[2]) / 2};
    }
    return out;
  }
  // signed permutations
  std::vector<int> idx(p.size());
  std::iota(idx.begin(), idx.end(), 0);
  do {
    for (unsigned mask = 0; mask < (1u << p.size()); ++mask) {
      Pt q(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) q[i] = (mask >> i & 1 ? -1 : 1) * p[idx[i]];
      out.insert(q);
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

inline std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace oracle
