#ifndef BQM_QUIVER_HPP_
#define BQM_QUIVER_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dynkin.hpp"
#include "errors.hpp"

namespace bqm {

  using vertex = int;

  struct arrow {
    vertex source;
    vertex target;

    friend bool operator==(arrow const&, arrow const&)  = default;
    friend auto operator<=>(arrow const&, arrow const&) = default;
  };

  // A finite quiver without loops or oriented 2-cycles.  Vertex ids are
  // positive integers kept sorted; arrows are a sorted multiset.
  class quiver {
   public:
    quiver() = default;

    quiver(std::vector<vertex> vertices, std::vector<arrow> arrows)
        : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
      std::sort(vertices_.begin(), vertices_.end());
      if (std::adjacent_find(vertices_.begin(), vertices_.end())
          != vertices_.end()) {
        throw input_error("duplicate vertex id");
      }
      for (vertex v : vertices_) {
        if (v <= 0) {
          throw input_error("vertex ids must be positive, found "
                            + std::to_string(v));
        }
      }
      std::sort(arrows_.begin(), arrows_.end());
      for (auto const& a : arrows_) {
        if (!contains(a.source) || !contains(a.target)) {
          throw input_error("arrow [" + std::to_string(a.source) + ","
                            + std::to_string(a.target)
                            + "] refers to an unknown vertex");
        }
        if (a.source == a.target) {
          throw input_error("loop at vertex " + std::to_string(a.source));
        }
      }
      for (auto const& a : arrows_) {
        if (std::binary_search(
                arrows_.begin(), arrows_.end(), arrow{a.target, a.source})) {
          throw input_error("oriented 2-cycle between "
                            + std::to_string(a.source) + " and "
                            + std::to_string(a.target));
        }
      }
    }

    std::vector<vertex> const& vertices() const noexcept {
      return vertices_;
    }
    std::vector<arrow> const& arrows() const noexcept {
      return arrows_;
    }
    std::size_t rank() const noexcept {
      return vertices_.size();
    }

    bool contains(vertex v) const {
      return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }

    std::size_t index_of(vertex v) const {
      auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
      if (it == vertices_.end() || *it != v) {
        throw input_error("unknown vertex " + std::to_string(v));
      }
      return static_cast<std::size_t>(it - vertices_.begin());
    }

    // Number of arrows i -> j.
    int multiplicity(vertex i, vertex j) const {
      auto r = std::equal_range(arrows_.begin(), arrows_.end(), arrow{i, j});
      return static_cast<int>(r.second - r.first);
    }

    bool adjacent(vertex i, vertex j) const {
      return multiplicity(i, j) + multiplicity(j, i) > 0;
    }

    friend bool operator==(quiver const&, quiver const&)  = default;
    friend auto operator<=>(quiver const&, quiver const&) = default;

   private:
    std::vector<vertex> vertices_;
    std::vector<arrow>  arrows_;
  };

  // Fomin-Zelevinsky mutation at k: add a composite i -> j for each path
  // i -> k -> j, reverse the arrows at k, cancel a maximal set of 2-cycles.
  inline quiver mutate(quiver const& q, vertex k) {
    if (!q.contains(k)) {
      throw input_error("cannot mutate at unknown vertex " + std::to_string(k));
    }
    std::vector<arrow> in, out, next;
    for (auto const& a : q.arrows()) {
      if (a.target == k) {
        in.push_back(a);
      } else if (a.source == k) {
        out.push_back(a);
      } else {
        next.push_back(a);
      }
    }
    for (auto const& a : in) {
      for (auto const& b : out) {
        next.push_back({a.source, b.target});
      }
    }
    for (auto const& a : in) next.push_back({k, a.source});
    for (auto const& b : out) next.push_back({b.target, k});

    // cancel 2-cycles
    std::map<std::pair<vertex, vertex>, int> net;
    for (auto const& a : next) {
      if (a.source < a.target) {
        ++net[{a.source, a.target}];
      } else {
        --net[{a.target, a.source}];
      }
    }
    std::vector<arrow> result;
    for (auto const& [p, m] : net) {
      for (int c = 0; c < m; ++c) result.push_back({p.first, p.second});
      for (int c = 0; c < -m; ++c) result.push_back({p.second, p.first});
    }
    return quiver(q.vertices(), std::move(result));
  }

  inline quiver mutate(quiver q, std::vector<vertex> const& path) {
    for (vertex k : path) q = mutate(q, k);
    return q;
  }

  ////////////////////////////////////////////////////////////////////////
  // Exchange matrices
  ////////////////////////////////////////////////////////////////////////

  // B_xy = #(x -> y) - #(y -> x), indexed by position in the vertex list.
  struct exchange_matrix {
    std::vector<vertex> vertices;
    std::vector<int>    entries;  // row-major

    int operator()(std::size_t x, std::size_t y) const {
      return entries[x * vertices.size() + y];
    }
    friend bool operator==(exchange_matrix const&, exchange_matrix const&)
        = default;
  };

  inline exchange_matrix to_exchange_matrix(quiver const& q) {
    std::size_t     n = q.rank();
    exchange_matrix b{q.vertices(), std::vector<int>(n * n, 0)};
    for (auto const& a : q.arrows()) {
      std::size_t x = q.index_of(a.source), y = q.index_of(a.target);
      b.entries[x * n + y] += 1;
      b.entries[y * n + x] -= 1;
    }
    return b;
  }

  inline quiver from_exchange_matrix(exchange_matrix const& b) {
    std::size_t n = b.vertices.size();
    if (b.entries.size() != n * n) {
      throw input_error("exchange matrix has the wrong number of entries");
    }
    std::vector<arrow> arrows;
    for (std::size_t x = 0; x < n; ++x) {
      if (b(x, x) != 0) {
        throw input_error("exchange matrix has a nonzero diagonal entry");
      }
      for (std::size_t y = 0; y < n; ++y) {
        if (b(x, y) != -b(y, x)) {
          throw input_error("exchange matrix is not skew-symmetric");
        }
        for (int c = 0; c < b(x, y); ++c) {
          arrows.push_back({b.vertices[x], b.vertices[y]});
        }
      }
    }
    return quiver(b.vertices, std::move(arrows));
  }

  ////////////////////////////////////////////////////////////////////////
  // Chordless cycles
  ////////////////////////////////////////////////////////////////////////

  struct chordless_cycle {
    // Cyclic order; when oriented, follows the arrows starting at the
    // smallest vertex id.
    std::vector<vertex> vertices;
    bool                oriented = false;

    friend bool operator==(chordless_cycle const&, chordless_cycle const&)
        = default;
  };

  namespace detail {
    inline std::vector<std::vector<char>> adjacency(quiver const& q) {
      std::size_t                    n = q.rank();
      std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
      for (auto const& a : q.arrows()) {
        std::size_t x = q.index_of(a.source), y = q.index_of(a.target);
        adj[x][y] = adj[y][x] = 1;
      }
      return adj;
    }
  }  // namespace detail

  // Every chordless cycle (length >= 3) of the underlying simple graph, each
  // reported once.
  inline std::vector<chordless_cycle> chordless_cycles(quiver const& q) {
    std::size_t                      n   = q.rank();
    auto                             adj = detail::adjacency(q);
    std::vector<std::vector<size_t>> found;

    std::vector<std::size_t> path;
    // Extend a chordless path starting at path[0] using vertices > path[0].
    auto extend = [&](auto&& self) -> void {
      std::size_t s = path.front(), last = path.back();
      for (std::size_t v = s + 1; v < n; ++v) {
        if (!adj[last][v]
            || std::find(path.begin(), path.end(), v) != path.end()) {
          continue;
        }
        bool chord = false;
        for (std::size_t j = 1; j + 1 < path.size(); ++j) {
          if (adj[path[j]][v]) {
            chord = true;
            break;
          }
        }
        if (chord) continue;
        if (path.size() >= 2 && adj[s][v]) {
          if (path[1] < v) {
            auto c = path;
            c.push_back(v);
            found.push_back(std::move(c));
          }
          continue;
        }
        path.push_back(v);
        self(self);
        path.pop_back();
      }
    };
    for (std::size_t s = 0; s < n; ++s) {
      path.assign(1, s);
      extend(extend);
    }

    std::vector<chordless_cycle> result;
    for (auto& c : found) {
      std::size_t m       = c.size();
      bool        forward = true, backward = true;
      for (std::size_t i = 0; i < m; ++i) {
        vertex x = q.vertices()[c[i]], y = q.vertices()[c[(i + 1) % m]];
        if (q.multiplicity(x, y) == 0) forward = false;
        if (q.multiplicity(y, x) == 0) backward = false;
      }
      if (backward && !forward) std::reverse(c.begin() + 1, c.end());
      chordless_cycle cc;
      cc.oriented = forward || backward;
      for (auto i : c) cc.vertices.push_back(q.vertices()[i]);
      result.push_back(std::move(cc));
    }
    std::sort(result.begin(), result.end(), [](auto const& a, auto const& b) {
      return a.vertices < b.vertices;
    });
    return result;
  }

  // Local 2-finiteness: every arrow multiplicity is 1 and every chordless
  // cycle is oriented.  Necessary for mutation-Dynkin quivers.
  inline bool is_two_finite_shape(quiver const& q) {
    auto const& a = q.arrows();
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) return false;
    for (auto const& c : chordless_cycles(q)) {
      if (!c.oriented) return false;
    }
    return true;
  }

  inline void require_two_finite_shape(quiver const& q) {
    auto const& a = q.arrows();
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) {
      throw domain_error("quiver has a multiple arrow; not mutation-Dynkin");
    }
    for (auto const& c : chordless_cycles(q)) {
      if (!c.oriented) {
        throw domain_error(
            "quiver has a non-oriented chordless cycle; not mutation-Dynkin");
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Canonical labelling
  ////////////////////////////////////////////////////////////////////////

  // Isomorphism-invariant key of a quiver: the exchange matrix under a
  // canonical ordering of the vertices.
  struct canonical_key {
    std::int32_t             n = 0;
    std::vector<std::int8_t> entries;

    friend bool operator==(canonical_key const&, canonical_key const&)
        = default;
    friend auto operator<=>(canonical_key const&, canonical_key const&)
        = default;
  };

  struct canonical_labelling {
    canonical_key key;
    // order[p] = index (into vertices()) of the vertex placed at position p.
    std::vector<std::size_t> order;
  };

  namespace detail {
    // Individualisation-refinement search.  Colour refinement uses the
    // multiset of (neighbour colour, B entry) pairs; the minimal key over
    // all leaves of the search tree is canonical.
    class canonicaliser {
     public:
      explicit canonicaliser(quiver const& q)
          : n_(q.rank()), b_(to_exchange_matrix(q).entries) {}

      canonical_labelling run() {
        std::vector<int> colour(n_);
        for (std::size_t v = 0; v < n_; ++v) {
          int out = 0, in = 0;
          for (std::size_t u = 0; u < n_; ++u) {
            int e = b_[v * n_ + u];
            if (e > 0) out += e;
            if (e < 0) in -= e;
          }
          colour[v] = out * 1024 + in;
        }
        colour = renumber(colour);
        refine(colour);
        search(colour);
        return {best_key_, best_order_};
      }

     private:
      std::vector<int> renumber(std::vector<int> const& sig) const {
        std::vector<int> sorted(sig);
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> out(n_);
        for (std::size_t v = 0; v < n_; ++v) {
          out[v] = static_cast<int>(
              std::lower_bound(sorted.begin(), sorted.end(), sig[v])
              - sorted.begin());
        }
        return out;
      }

      static int count_colours(std::vector<int> const& c) {
        int m = 0;
        for (int x : c) m = std::max(m, x + 1);
        return m;
      }

      void refine(std::vector<int>& colour) const {
        int classes = count_colours(colour);
        while (true) {
          using signature = std::pair<int, std::vector<std::pair<int, int>>>;
          std::vector<signature> sig(n_);
          for (std::size_t v = 0; v < n_; ++v) {
            sig[v].first = colour[v];
            for (std::size_t u = 0; u < n_; ++u) {
              int e = b_[v * n_ + u];
              if (e != 0) sig[v].second.emplace_back(colour[u], e);
            }
            std::sort(sig[v].second.begin(), sig[v].second.end());
          }
          std::vector<signature> sorted(sig);
          std::sort(sorted.begin(), sorted.end());
          sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
          std::vector<int> next(n_);
          for (std::size_t v = 0; v < n_; ++v) {
            next[v] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), sig[v])
                - sorted.begin());
          }
          int m = static_cast<int>(sorted.size());
          colour.swap(next);
          if (m == classes) return;
          classes = m;
        }
      }

      void search(std::vector<int> const& colour) {
        int m = count_colours(colour);
        if (static_cast<std::size_t>(m) == n_) {
          std::vector<std::size_t> order(n_);
          for (std::size_t v = 0; v < n_; ++v) order[colour[v]] = v;
          canonical_key key{static_cast<std::int32_t>(n_), {}};
          key.entries.resize(n_ * n_);
          for (std::size_t p = 0; p < n_; ++p) {
            for (std::size_t r = 0; r < n_; ++r) {
              key.entries[p * n_ + r]
                  = static_cast<std::int8_t>(b_[order[p] * n_ + order[r]]);
            }
          }
          if (!have_best_ || key < best_key_) {
            best_key_   = std::move(key);
            best_order_ = std::move(order);
            have_best_  = true;
          }
          return;
        }
        // first smallest non-singleton cell
        std::vector<int> size(m, 0);
        for (int c : colour) ++size[c];
        int cell = -1;
        for (int c = 0; c < m; ++c) {
          if (size[c] > 1 && (cell == -1 || size[c] < size[cell])) cell = c;
        }
        for (std::size_t v = 0; v < n_; ++v) {
          if (colour[v] != cell) continue;
          std::vector<int> next(n_);
          for (std::size_t u = 0; u < n_; ++u) {
            next[u] = 2 * colour[u] + ((colour[u] == cell && u != v) ? 1 : 0);
          }
          next = renumber(next);
          refine(next);
          search(next);
        }
      }

      std::size_t              n_;
      std::vector<int>         b_;
      bool                     have_best_ = false;
      canonical_key            best_key_;
      std::vector<std::size_t> best_order_;
    };
  }  // namespace detail

  inline canonical_labelling canonical_labelling_of(quiver const& q) {
    if (q.rank() == 0) return {};
    return detail::canonicaliser(q).run();
  }

  inline canonical_key canonical_key_of(quiver const& q) {
    return canonical_labelling_of(q).key;
  }

  inline bool isomorphic(quiver const& a, quiver const& b) {
    return a.rank() == b.rank() && canonical_key_of(a) == canonical_key_of(b);
  }

  ////////////////////////////////////////////////////////////////////////
  // Dynkin quivers
  ////////////////////////////////////////////////////////////////////////

  // Orientation of the diagram with every arrow from the smaller label to the
  // larger, on vertices 1..n.
  inline quiver dynkin_quiver(dynkin_type const& t) {
    std::vector<vertex> vs(t.rank);
    std::iota(vs.begin(), vs.end(), 1);
    std::vector<arrow> as;
    for (auto [a, b] : dynkin_edges(t)) as.push_back({a, b});
    return quiver(std::move(vs), std::move(as));
  }

  // If the underlying graph of q is an ADE diagram (single arrows), returns
  // the type and the label of each vertex (by index) in the standard diagram.
  inline std::optional<dynkin_match> dynkin_shape(quiver const& q) {
    auto const& as = q.arrows();
    if (std::adjacent_find(as.begin(), as.end()) != as.end()) {
      return std::nullopt;
    }
    std::vector<std::pair<int, int>> edges;
    for (auto const& a : as) {
      edges.emplace_back(static_cast<int>(q.index_of(a.source)),
                         static_cast<int>(q.index_of(a.target)));
    }
    return match_dynkin_graph(static_cast<int>(q.rank()), edges);
  }

}  // namespace bqm

#endif  // BQM_QUIVER_HPP_
