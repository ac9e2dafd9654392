#ifndef BQM_DYNKIN_HPP_
#define BQM_DYNKIN_HPP_

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace bqm {

  enum class family : char { A = 'A', D = 'D', E = 'E' };

  // Simply-laced Dynkin type.  Vertex numbering: A_n is the path 1-2-...-n;
  // D_n has the fork vertices 1 and 2 attached to 3, then 3-4-...-n; E_n uses
  // Bourbaki numbering (1-3-4-5-...-n with 2 attached to 4).
  struct dynkin_type {
    family fam  = family::A;
    int    rank = 1;

    dynkin_type() = default;
    dynkin_type(family f, int n) : fam(f), rank(n) {
      bool ok = (f == family::A && n >= 1) || (f == family::D && n >= 4)
                || (f == family::E && n >= 6 && n <= 8);
      if (!ok) {
        throw input_error("invalid Dynkin type " + std::string(1, char(f))
                          + std::to_string(n));
      }
    }

    std::string str() const {
      return std::string(1, static_cast<char>(fam)) + std::to_string(rank);
    }

    friend bool operator==(dynkin_type const&, dynkin_type const&) = default;
    friend auto operator<=>(dynkin_type const&, dynkin_type const&) = default;
  };

  inline dynkin_type parse_dynkin_type(std::string_view s) {
    if (s.size() < 2) {
      throw input_error("invalid Dynkin type string \"" + std::string(s) + "\"");
    }
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (c != 'A' && c != 'D' && c != 'E') {
      throw input_error("unknown Dynkin family in \"" + std::string(s) + "\"");
    }
    int n = 0;
    for (char d : s.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(d)) || n > 1000) {
        throw input_error("invalid Dynkin rank in \"" + std::string(s) + "\"");
      }
      n = 10 * n + (d - '0');
    }
    return dynkin_type(static_cast<family>(c), n);
  }

  // Edges of the diagram on vertices 1..n, each as (smaller, larger).
  inline std::vector<std::pair<int, int>> dynkin_edges(dynkin_type const& t) {
    std::vector<std::pair<int, int>> e;
    int n = t.rank;
    switch (t.fam) {
      case family::A:
        for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
        break;
      case family::D:
        e.emplace_back(1, 3);
        e.emplace_back(2, 3);
        for (int i = 3; i < n; ++i) e.emplace_back(i, i + 1);
        break;
      case family::E:
        e.emplace_back(1, 3);
        e.emplace_back(2, 4);
        for (int i = 3; i < n; ++i) e.emplace_back(i, i + 1);
        break;
    }
    std::sort(e.begin(), e.end());
    return e;
  }

  // Cartan matrix, row-major, indices 0..n-1 for vertices 1..n.
  inline std::vector<int> cartan_matrix(dynkin_type const& t) {
    int              n = t.rank;
    std::vector<int> c(n * n, 0);
    for (int i = 0; i < n; ++i) c[i * n + i] = 2;
    for (auto [a, b] : dynkin_edges(t)) {
      c[(a - 1) * n + (b - 1)] = -1;
      c[(b - 1) * n + (a - 1)] = -1;
    }
    return c;
  }

  // Recognises an ADE diagram among simple undirected graphs on 0..n-1.  On
  // success returns the type and, for each graph vertex, its number (1-based)
  // in the standard diagram.
  struct dynkin_match {
    dynkin_type      type;
    std::vector<int> label;
  };

  inline std::optional<dynkin_match>
  match_dynkin_graph(int n, std::vector<std::pair<int, int>> const& edges) {
    if (n == 0 || static_cast<int>(edges.size()) != n - 1) return std::nullopt;
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : edges) {
      if (a == b) return std::nullopt;
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    for (auto& a : adj) {
      std::sort(a.begin(), a.end());
      if (std::adjacent_find(a.begin(), a.end()) != a.end()) return std::nullopt;
    }
    // connected?
    std::vector<int> seen(n, 0), stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : adj[v]) {
        if (!seen[u]) {
          seen[u] = 1;
          ++count;
          stack.push_back(u);
        }
      }
    }
    if (count != n) return std::nullopt;

    std::vector<int> branch;
    for (int v = 0; v < n; ++v) {
      if (adj[v].size() > 3) return std::nullopt;
      if (adj[v].size() == 3) branch.push_back(v);
    }
    if (branch.size() > 1) return std::nullopt;

    std::vector<int> label(n, 0);
    // walk from `from` away from `prev`, returning the arm (excluding prev)
    auto arm = [&](int prev, int from) {
      std::vector<int> out{from};
      while (true) {
        int cur  = out.back();
        int next = -1;
        for (int u : adj[cur]) {
          if (u != prev) next = u;
        }
        if (next == -1 || adj[cur].size() != 2) break;
        prev = cur;
        out.push_back(next);
      }
      return out;
    };

    if (branch.empty()) {
      int end = 0;
      for (int v = 0; v < n; ++v) {
        if (adj[v].size() <= 1) {
          end = v;
          break;
        }
      }
      std::vector<int> path{end};
      if (n > 1) {
        auto rest = arm(end, adj[end][0]);
        path.insert(path.end(), rest.begin(), rest.end());
      }
      for (int i = 0; i < n; ++i) label[path[i]] = i + 1;
      return dynkin_match{dynkin_type(family::A, n), label};
    }

    int                           b = branch[0];
    std::vector<std::vector<int>> arms;
    for (int u : adj[b]) arms.push_back(arm(b, u));
    std::stable_sort(arms.begin(), arms.end(), [](auto const& x, auto const& y) {
      return x.size() < y.size();
    });
    std::size_t l0 = arms[0].size(), l1 = arms[1].size(), l2 = arms[2].size();
    if (l0 == 1 && l1 == 1) {
      label[arms[0][0]] = 1;
      label[arms[1][0]] = 2;
      label[b]          = 3;
      for (std::size_t i = 0; i < l2; ++i) label[arms[2][i]] = 4 + int(i);
      return dynkin_match{dynkin_type(family::D, n), label};
    }
    if (l0 == 1 && l1 == 2 && l2 >= 2 && l2 <= 4) {
      label[b]          = 4;
      label[arms[0][0]] = 2;
      label[arms[1][0]] = 3;
      label[arms[1][1]] = 1;
      for (std::size_t i = 0; i < l2; ++i) label[arms[2][i]] = 5 + int(i);
      return dynkin_match{dynkin_type(family::E, n), label};
    }
    return std::nullopt;
  }

}  // namespace bqm

#endif  // BQM_DYNKIN_HPP_
