#pragma once

// Brute-force reference computations on plain strings and parent arrays.
// Nothing here calls into the library.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace oracle {

/// parent[v] for vertices in bracket order; parent[0] = -1.
using Parents = std::vector<int>;

inline Parents parse(const std::string &s) {
  Parents out;
  std::vector<int> stack;
  for (char ch : s) {
    if (ch == '[') {
      out.push_back(stack.empty() ? -1 : stack.back());
      stack.push_back(static_cast<int>(out.size()) - 1);
    } else if (ch == ']') {
      stack.pop_back();
    }
  }
  return out;
}

/// Canonical string of the subtree at v, keeping only vertices in `keep`.
inline std::string canonical(const Parents &p, int v, const std::vector<bool> &keep) {
  std::vector<std::string> kids;
  for (int c = 0; c < static_cast<int>(p.size()); ++c)
    if (p[c] == v && keep[c])
      kids.push_back(canonical(p, c, keep));
  std::sort(kids.begin(), kids.end());
  std::string out = "[";
  for (const auto &k : kids)
    out += k;
  return out + "]";
}

inline std::string canonical(const std::string &s) {
  Parents p = parse(s);
  return canonical(p, 0, std::vector<bool>(p.size(), true));
}

/// Forest as a sorted list of canonical tree strings, rendered with spaces.
inline std::string forest_str(std::vector<std::string> trees) {
  if (trees.empty())
    return "1";
  std::sort(trees.begin(), trees.end());
  std::string out;
  for (const auto &t : trees)
    out += (out.empty() ? "" : " ") + t;
  return out;
}

/// Coproduct of a tree by edge subsets: {(crown, trunk) -> multiplicity},
/// including the empty cut and the total cut.
inline std::map<std::pair<std::string, std::string>, int> coproduct(const std::string &tree) {
  Parents p = parse(tree);
  int n = static_cast<int>(p.size());
  std::map<std::pair<std::string, std::string>, int> out;
  out[{"1", canonical(tree)}] += 1;
  out[{canonical(tree), "1"}] += 1;
  // edges are named by their lower vertex 1..n-1
  for (int mask = 1; mask < (1 << (n - 1)); ++mask) {
    auto cut = [&](int v) { return v > 0 && (mask >> (v - 1)) & 1; };
    bool admissible = true;
    for (int v = 1; v < n && admissible; ++v) {
      if (!cut(v))
        continue;
      for (int u = p[v]; u > 0; u = p[u])
        if (cut(u))
          admissible = false;
    }
    if (!admissible)
      continue;
    std::vector<bool> trunk(n, true);
    for (int v = 1; v < n; ++v)
      for (int u = v; u > 0; u = p[u])
        if (cut(u))
          trunk[v] = false;
    std::vector<std::string> crowns;
    for (int v = 1; v < n; ++v)
      if (cut(v)) {
        std::vector<bool> keep(n, false);
        for (int w = 0; w < n; ++w)
          for (int u = w; u >= 0; u = p[u])
            if (u == v) {
              keep[w] = true;
              break;
            }
        crowns.push_back(canonical(p, v, keep));
      }
    out[{forest_str(crowns), canonical(p, 0, trunk)}] += 1;
  }
  return out;
}

/// All canonical trees of weight n, grown one leaf at a time.
inline std::vector<std::string> trees(int n) {
  std::set<std::string> current{"[]"};
  for (int w = 2; w <= n; ++w) {
    std::set<std::string> next;
    for (const auto &t : current) {
      for (std::size_t pos = 0; pos < t.size(); ++pos)
        if (t[pos] == '[')
          next.insert(canonical(t.substr(0, pos + 1) + "[]" + t.substr(pos + 1)));
    }
    current = std::move(next);
  }
  return {current.begin(), current.end()};
}

/// Number of forests of weight n, from multisets of the trees above.
inline long forest_count(int n) {
  std::vector<long> t(n + 1, 0);
  for (int w = 1; w <= n; ++w)
    t[w] = static_cast<long>(trees(w).size());
  // multisets over tree types
  std::vector<long> f(n + 1, 0);
  f[0] = 1;
  for (int w = 1; w <= n; ++w)
    for (long k = 0; k < t[w]; ++k)
      for (int s = w; s <= n; ++s)
        f[s] += f[s - w];
  return f[n];
}

/// Rank by dense elimination over Q.
inline int rank(std::vector<std::vector<mpq_class>> m) {
  int r = 0;
  int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  for (int c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    int pivot = -1;
    for (int i = r; i < static_cast<int>(m.size()); ++i)
      if (m[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0)
      continue;
    std::swap(m[r], m[pivot]);
    for (int i = 0; i < static_cast<int>(m.size()); ++i) {
      if (i == r || m[i][c] == 0)
        continue;
      mpq_class f = m[i][c] / m[r][c];
      for (int k = c; k < cols; ++k)
        m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

/// Number of automorphisms of a tree given as a canonical string.
inline long symmetry(const std::string &tree) {
  Parents p = parse(tree);
  std::function<long(int)> sym = [&](int v) -> long {
    std::map<std::string, int> groups;
    long out = 1;
    std::vector<bool> all(p.size(), true);
    for (int c = 0; c < static_cast<int>(p.size()); ++c)
      if (p[c] == v) {
        out *= sym(c);
        ++groups[canonical(p, c, all)];
      }
    for (const auto &[s, k] : groups)
      for (int i = 2; i <= k; ++i)
        out *= i;
    return out;
  };
  return sym(0);
}

} // namespace oracle
