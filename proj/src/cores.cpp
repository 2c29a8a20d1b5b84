#include "corelat/cores.hpp"

#include "corelat/atomic.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

namespace corelat {

int partition_size(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

Partition conjugate(const Partition& p) {
  Partition c(p.empty() ? 0 : p[0], 0);
  for (int x : p)
    for (int j = 0; j < x; ++j) ++c[j];
  return c;
}

bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i && p[i] > p[i - 1]) return false;
  }
  return true;
}

bool is_self_conjugate(const Partition& p) { return conjugate(p) == p; }

int diagonal_boxes(const Partition& p) {
  int d = 0;
  while (d < static_cast<int>(p.size()) && p[d] > d) ++d;
  return d;
}

int hook_length(const Partition& p, const Partition& conj, int row, int col) {
  return (p[row] - col - 1) + (conj[col] - row - 1) + 1;
}

bool is_d_core(const Partition& p, int d) {
  Partition c = conjugate(p);
  for (int r = 0; r < static_cast<int>(p.size()); ++r)
    for (int col = 0; col < p[r]; ++col)
      if (hook_length(p, c, r, col) == d) return false;
  return true;
}

bool has_hook_divisible_by(const Partition& p, int d) {
  Partition c = conjugate(p);
  for (int r = 0; r < static_cast<int>(p.size()); ++r)
    for (int col = 0; col < p[r]; ++col)
      if (hook_length(p, c, r, col) % d == 0) return true;
  return false;
}

int residue_count(const Partition& p, int d, int i) {
  int count = 0;
  for (int r = 0; r < static_cast<int>(p.size()); ++r)
    for (int col = 0; col < p[r]; ++col)
      if (((col - r) % d + d) % d == i) ++count;
  return count;
}

Partition from_frobenius(const std::vector<int>& arms, const std::vector<int>& legs) {
  const int r = static_cast<int>(arms.size());
  std::vector<int> rows;
  auto grow = [&](int row, int len) {
    if (static_cast<int>(rows.size()) <= row) rows.resize(row + 1, 0);
    rows[row] = std::max(rows[row], len);
  };
  for (int k = 0; k < r; ++k) {
    grow(k, k + 1 + arms[k]);
    for (int i = k + 1; i <= k + legs[k]; ++i) grow(i, k + 1);
  }
  Partition p(rows.begin(), rows.end());
  if (!is_partition(p)) throw InternalInconsistency("invalid Frobenius symbol");
  return p;
}

IVec charge_of_core(int d, const Partition& p) {
  if (!is_d_core(p, d)) throw NotACore(format_partition(p) + " is not a " + std::to_string(d) + "-core");
  const long long len = static_cast<long long>(p.size());
  // beads at p_i - i for i <= len, then every position below -len
  IVec top(d, std::numeric_limits<long long>::min());
  auto place = [&](long long pos) {
    long long r = ((pos % d) + d) % d;
    top[r] = std::max(top[r], pos);
  };
  for (long long i = 1; i <= len; ++i) place(p[i - 1] - i);
  for (long long pos = -len - 1; pos >= -len - d; --pos) place(pos);
  IVec c(d);
  for (int r = 0; r < d; ++r) c[r] = (top[r] - (r - d)) / d;
  return c;
}

Partition core_from_charge(int d, const IVec& charge) {
  if (static_cast<int>(charge.size()) != d) throw BadCharge("charge must have " + std::to_string(d) + " entries");
  long long sum = 0;
  for (long long x : charge) sum += x;
  if (sum != 0) throw BadCharge("charge entries sum to " + std::to_string(sum) + ", not 0");
  IVec top(d);
  for (int r = 0; r < d; ++r) top[r] = (r - d) + static_cast<long long>(d) * charge[r];
  const long long floor_pos = *std::min_element(top.begin(), top.end());
  const long long ceil_pos = *std::max_element(top.begin(), top.end());
  std::vector<long long> beads;
  for (long long pos = ceil_pos; pos > floor_pos; --pos) {
    long long r = ((pos % d) + d) % d;
    if (pos <= top[r]) beads.push_back(pos);
  }
  Partition p;
  long long i = 1;
  for (long long b : beads) {
    if (b + i > 0) p.push_back(static_cast<int>(b + i));
    ++i;
  }
  // below floor_pos every position is a bead, so the remaining parts are floor_pos + i
  if (floor_pos + i != 0) throw InternalInconsistency("abacus is not balanced");
  return p;
}

long long core_size_from_charge(const IVec& charge) {
  const long long d = static_cast<long long>(charge.size());
  long long sq = 0, lin = 0;
  for (long long r = 0; r < d; ++r) {
    sq += charge[r] * charge[r];
    lin += r * charge[r];
  }
  return d * sq / 2 + lin;
}

std::vector<Partition> all_partitions(int N) {
  std::vector<Partition> out;
  Partition cur;
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
  rec(N, N);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> distinct_partitions(int N) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int x = std::min(left, cap); x >= 1; --x) {
      cur.push_back(x);
      rec(left - x, x - 1);
      cur.pop_back();
    }
  };
  rec(N, N);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Self-conjugate partitions of N from their diagonal hooks (distinct odd parts).
std::vector<Partition> self_conjugate_partitions(int N) {
  std::vector<Partition> out;
  std::vector<int> arms;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.push_back(from_frobenius(arms, arms));
      return;
    }
    for (int hook = std::min(left, cap); hook >= 1; --hook) {
      if (hook % 2 == 0) continue;
      arms.push_back((hook - 1) / 2);
      rec(left - hook, hook - 2);
      arms.pop_back();
    }
  };
  rec(N, N % 2 ? N : N - 1);
  return out;
}

std::vector<IVec> charges_of_size(long long N, int d, Exec exec) {
  std::vector<IVec> out;
  if (d == 1) {
    if (N == 0) out.push_back({0});
    return out;
  }
  std::vector<Vec> basis;
  for (int r = 0; r + 1 < d; ++r) {
    Vec b(d, Rational(0));
    b[r] = 1;
    b[d - 1] = -1;
    basis.push_back(b);
  }
  auto size = [](const Vec& v) { return Rational(core_size_from_charge(to_ivec(v))); };
  CompiledForm form = compile_form(size, Vec(d, Rational(0)), basis);
  long long target = N * form.denom;
  for (auto& pt : points_in_range(form.q, target, target, exec)) {
    IVec c(pt.k);
    long long s = 0;
    for (long long x : c) s += x;
    c.push_back(-s);
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::vector<Partition> cores_by_charge(int N, int d, Exec exec) {
  std::vector<Partition> out;
  for (const auto& c : charges_of_size(N, d, exec)) out.push_back(core_from_charge(d, c));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> enumerate_partitions(int N, PartitionFilter filter, int d, Exec exec) {
  std::vector<Partition> out;
  switch (filter) {
    case PartitionFilter::All:
      return all_partitions(N);
    case PartitionFilter::Core:
      return cores_by_charge(N, d, exec);
    case PartitionFilter::SelfConjugateCore:
    case PartitionFilter::EvenDiagonalSelfConjugateCore:
      for (auto& p : self_conjugate_partitions(N)) {
        if (!is_d_core(p, d)) continue;
        if (filter == PartitionFilter::EvenDiagonalSelfConjugateCore && diagonal_boxes(p) % 2) continue;
        out.push_back(std::move(p));
      }
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

SizeRule parse_size_rule(const std::string& name) {
  static const std::pair<const char*, SizeRule> names[] = {
      {"C", SizeRule::C},       {"Dt", SizeRule::Dt},         {"Aeven", SizeRule::Aeven},
      {"B", SizeRule::B},       {"Aodd", SizeRule::Aodd},     {"D", SizeRule::D},
      {"G2", SizeRule::G2},     {"D43", SizeRule::D43},       {"DtPlus", SizeRule::DtPlus},
      {"AevenHalf", SizeRule::AevenHalf}};
  for (const auto& [key, rule] : names)
    if (name == key) return rule;
  throw std::invalid_argument("unknown size rule " + name);
}

Rational weighted_size(SizeRule rule, const Partition& p, int n) {
  if (rule == SizeRule::G2 || rule == SizeRule::D43) n = 3;
  const int d = 2 * n;
  const Rational all = partition_size(p);
  const Rational zero = residue_count(p, d, 0);
  const Rational mid = residue_count(p, d, n % d);
  const Rational half(1, 2);
  switch (rule) {
    case SizeRule::C: return all;
    case SizeRule::Dt: return half * (all - zero + mid);
    case SizeRule::Aeven: return all + zero;
    case SizeRule::B: return half * (all - zero + mid);
    case SizeRule::Aodd: return half * (all - zero);
    case SizeRule::D: return half * (all - zero - mid);
    case SizeRule::G2: return half * (all - zero + mid);
    case SizeRule::D43: return half * (all - zero - mid);
    case SizeRule::DtPlus: return half * (all + zero + mid);
    case SizeRule::AevenHalf: return half * (all + zero);
  }
  return all;
}

Partition doubled_distinct(const Partition& bar) {
  std::vector<int> legs;
  for (int x : bar) legs.push_back(x - 1);
  return from_frobenius(bar, legs);
}

std::optional<Partition> bar_of_doubled(const Partition& p) {
  Partition bar;
  for (int k = 0; k < static_cast<int>(p.size()); ++k) {
    int part = p[k] - (k + 1);
    if (part <= 0) break;
    bar.push_back(part);
  }
  for (std::size_t i = 1; i < bar.size(); ++i)
    if (bar[i] >= bar[i - 1]) return std::nullopt;
  if (doubled_distinct(bar) != p) return std::nullopt;
  return bar;
}

Partition bar_core_from_lattice(int n, const IVec& q) {
  IVec charge{0};
  for (int i = 0; i < n; ++i) charge.push_back(q[i]);
  charge.push_back(0);
  for (int i = n - 1; i >= 0; --i) charge.push_back(-q[i]);
  Partition doubled = core_from_charge(2 * n + 2, charge);
  auto bar = bar_of_doubled(doubled);
  if (!bar) throw InternalInconsistency(format_partition(doubled) + " is not doubled distinct");
  return *bar;
}

std::vector<Partition> bar_cores(int N, int n) {
  std::vector<Partition> out;
  for (auto& p : distinct_partitions(N)) {
    if (std::find(p.begin(), p.end(), n + 1) != p.end()) continue;
    if (!is_d_core(doubled_distinct(p), 2 * n + 2)) continue;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Partition> bar_cores_by_charge(int N, int n, Exec exec) {
  std::vector<Partition> out;
  for (const auto& core : cores_by_charge(2 * N, 2 * n + 2, exec)) {
    auto bar = bar_of_doubled(core);
    if (!bar || std::find(bar->begin(), bar->end(), n + 1) != bar->end()) continue;
    out.push_back(*bar);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ResidueCounts d4flat_counts(long long q1, long long q2) {
  ResidueCounts m{};
  m.m2 = static_cast<int>(std::llabs(q1));
  if (q2 <= 0) {
    m.m1 = static_cast<int>(-q2);
    m.m_minus1 = 0;
  } else {
    m.m1 = 0;
    m.m_minus1 = static_cast<int>(q2);
  }
  const long long s = q1 + q2;
  m.m0 = static_cast<int>(s >= 0 ? s : -s - 1);
  return m;
}

Partition d4flat_from_lattice(long long q1, long long q2) {
  ResidueCounts m = d4flat_counts(q1, q2);
  Partition p;
  // each residue class is an arithmetic run starting at its least positive member
  auto run = [&](int first, int count) {
    for (int k = 0; k < count; ++k) p.push_back(first + 4 * k);
  };
  run(4, m.m0);
  run(1, m.m1);
  run(3, m.m_minus1);
  run(2, m.m2);
  std::sort(p.rbegin(), p.rend());
  return p;
}

bool d4flat_intrinsic(const Partition& p) {
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p[i] == p[i - 1]) return false;
  Partition doubled = doubled_distinct(p);
  Partition c = conjugate(doubled);
  for (int r = 0; r < static_cast<int>(doubled.size()); ++r)
    for (int col = 0; col < std::min(r, doubled[r]); ++col)
      if (hook_length(doubled, c, r, col) == 4) return false;
  // parts close downward under k -> k - 4
  std::set<int> parts(p.begin(), p.end());
  for (int k : p)
    if (k > 4 && !parts.count(k - 4)) return false;
  // part counts must come from some lattice vector
  int count[4] = {0, 0, 0, 0};
  for (int k : p) ++count[k % 4];
  if (count[1] && count[3]) return false;
  const long long q2 = count[3] ? count[3] : -count[1];
  for (long long q1 : {static_cast<long long>(count[2]), -static_cast<long long>(count[2])})
    if (d4flat_counts(q1, q2).m0 == count[0]) return true;
  return false;
}

std::string format_parts(const Partition& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s;
}

std::string format_partition(const Partition& p) { return "(" + format_parts(p) + ")"; }

Partition parse_parts(const std::string& text) {
  Partition p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) p.push_back(std::stoi(item));
  return p;
}

}  // namespace corelat
