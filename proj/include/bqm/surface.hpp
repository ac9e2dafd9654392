#ifndef BQM_SURFACE_HPP_
#define BQM_SURFACE_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dynkin.hpp"
#include "errors.hpp"
#include "quiver.hpp"

// Triangulations of the (n+3)-gon (type A_n) and tagged triangulations of
// the once-punctured n-gon (type D_n).  Boundary marked points are numbered
// 1..m clockwise.
namespace bqm {

  enum class tag { plain, notched };

  // Type A: a diagonal {a, b} with a < b.
  // Type D peripheral (a, b): the arc homotopic to the clockwise boundary
  // path from a to b, the puncture lying on its other side.
  // Type D radius (a, t): from boundary point a to the puncture, tagged t at
  // the puncture.
  struct tagged_arc {
    enum class kind { chord, peripheral, radius };
    kind k = kind::chord;
    int  a = 0;
    int  b = 0;
    tag  t = tag::plain;

    static tagged_arc chord(int a, int b) {
      return {kind::chord, std::min(a, b), std::max(a, b), tag::plain};
    }
    static tagged_arc peripheral(int a, int b) {
      return {kind::peripheral, a, b, tag::plain};
    }
    static tagged_arc radius(int a, tag t) {
      return {kind::radius, a, 0, t};
    }

    friend bool operator==(tagged_arc const&, tagged_arc const&)  = default;
    friend auto operator<=>(tagged_arc const&, tagged_arc const&) = default;
  };

  inline std::string to_string(tagged_arc const& x);

  struct triangulation {
    dynkin_type             type;
    std::vector<tagged_arc> arcs;  // arcs[i] is the arc with quiver vertex i+1

    friend bool operator==(triangulation const&, triangulation const&) = default;
  };

  class surface {
   public:
    explicit surface(dynkin_type t) : type_(t) {
      if (t.fam == family::E) {
        throw domain_error("no surface model for type " + t.str());
      }
      m_ = t.fam == family::A ? t.rank + 3 : t.rank;
      if (t.fam == family::A) {
        for (int a = 1; a <= m_; ++a) {
          for (int b = a + 2; b <= m_; ++b) {
            if (a == 1 && b == m_) continue;
            arcs_.push_back(tagged_arc::chord(a, b));
          }
        }
      } else {
        for (int a = 1; a <= m_; ++a) {
          for (int b = 1; b <= m_; ++b) {
            int d = dist(a, b);
            if (d >= 2 && d <= m_ - 1) arcs_.push_back(tagged_arc::peripheral(a, b));
          }
        }
        for (int a = 1; a <= m_; ++a) {
          arcs_.push_back(tagged_arc::radius(a, tag::plain));
          arcs_.push_back(tagged_arc::radius(a, tag::notched));
        }
      }
      std::sort(arcs_.begin(), arcs_.end());
    }

    dynkin_type type() const noexcept {
      return type_;
    }
    int marked_points() const noexcept {
      return m_;
    }
    std::vector<tagged_arc> const& all_arcs() const noexcept {
      return arcs_;
    }

    bool is_arc(tagged_arc const& x) const {
      return std::binary_search(arcs_.begin(), arcs_.end(), x);
    }

    void require_arc(tagged_arc const& x) const {
      if (!is_arc(x)) {
        throw input_error(to_string(x) + " is not an arc of the surface of type "
                          + type_.str());
      }
    }

    // Clockwise distance from a to b, in 0..m-1.
    int dist(int a, int b) const noexcept {
      return ((b - a) % m_ + m_) % m_;
    }
    // x strictly inside the clockwise interval from a to b.
    bool strictly_inside(int x, int a, int b) const noexcept {
      int dx = dist(a, x);
      return dx > 0 && dx < dist(a, b);
    }

    bool compatible(tagged_arc const& x, tagged_arc const& y) const {
      require_arc(x);
      require_arc(y);
      if (x == y) return true;
      using K = tagged_arc::kind;
      if (x.k == K::chord) {
        auto cross = [](tagged_arc const& p, tagged_arc const& q) {
          return p.a < q.a && q.a < p.b && p.b < q.b;
        };
        return !cross(x, y) && !cross(y, x);
      }
      if (x.k == K::peripheral && y.k == K::peripheral) {
        if (nested(x, y) || nested(y, x)) return true;
        return !strictly_inside(y.a, x.a, x.b) && !strictly_inside(y.b, x.a, x.b)
               && !strictly_inside(x.a, y.a, y.b) && !strictly_inside(x.b, y.a, y.b);
      }
      if (x.k == K::radius && y.k == K::radius) {
        return x.a == y.a || x.t == y.t;
      }
      auto const& r = x.k == K::radius ? x : y;
      auto const& p = x.k == K::radius ? y : x;
      return !strictly_inside(r.a, p.a, p.b);
    }

    // Boundary segments and arcs both count as sides of triangles.
    bool is_boundary_segment(int a, int b) const noexcept {
      if (type_.fam == family::A) {
        int lo = std::min(a, b), hi = std::max(a, b);
        return hi - lo == 1 || (lo == 1 && hi == m_);
      }
      return dist(a, b) == 1;
    }

    triangulation initial() const {
      triangulation t{type_, {}};
      int           n = type_.rank;
      if (type_.fam == family::A) {
        for (int i = 1; i <= n; ++i) t.arcs.push_back(tagged_arc::chord(1, i + 2));
      } else {
        for (int i = 1; i <= n - 2; ++i) {
          t.arcs.push_back(tagged_arc::peripheral(1, i + 2));
        }
        t.arcs.push_back(tagged_arc::radius(n, tag::plain));
        t.arcs.push_back(tagged_arc::radius(n, tag::notched));
      }
      return t;
    }

    void validate(triangulation const& t) const {
      if (!(t.type == type_)) {
        throw input_error("triangulation of type " + t.type.str()
                          + " used on a surface of type " + type_.str());
      }
      if (static_cast<int>(t.arcs.size()) != type_.rank) {
        throw domain_error("a triangulation of type " + type_.str() + " has "
                           + std::to_string(type_.rank) + " arcs, got "
                           + std::to_string(t.arcs.size()));
      }
      for (std::size_t i = 0; i < t.arcs.size(); ++i) {
        require_arc(t.arcs[i]);
        for (std::size_t j = 0; j < i; ++j) {
          if (t.arcs[i] == t.arcs[j]) {
            throw domain_error("arc " + to_string(t.arcs[i]) + " listed twice");
          }
          if (!compatible(t.arcs[i], t.arcs[j])) {
            throw domain_error("arcs " + to_string(t.arcs[j]) + " and "
                               + to_string(t.arcs[i]) + " cross");
          }
        }
      }
    }

    // Replace arcs[k] (0-based) by the unique other arc compatible with the
    // rest.
    triangulation flip(triangulation const& t, std::size_t k) const {
      validate(t);
      if (k >= t.arcs.size()) {
        throw input_error("no arc with index " + std::to_string(k + 1));
      }
      std::optional<tagged_arc> found;
      for (auto const& c : arcs_) {
        if (std::find(t.arcs.begin(), t.arcs.end(), c) != t.arcs.end()) continue;
        bool ok = true;
        for (std::size_t j = 0; j < t.arcs.size() && ok; ++j) {
          if (j != k) ok = compatible(c, t.arcs[j]);
        }
        if (!ok) continue;
        if (found) {
          throw domain_error("flip of " + to_string(t.arcs[k])
                             + " is not unique");
        }
        found = c;
      }
      if (!found) {
        throw domain_error("no arc replaces " + to_string(t.arcs[k]));
      }
      auto out    = t;
      out.arcs[k] = *found;
      return out;
    }

    triangulation flip(triangulation const& t, tagged_arc const& x) const {
      auto it = std::find(t.arcs.begin(), t.arcs.end(), x);
      if (it == t.arcs.end()) {
        throw input_error("arc " + to_string(x) + " is not in the triangulation");
      }
      return flip(t, static_cast<std::size_t>(it - t.arcs.begin()));
    }

    // Faces as lists of sides in clockwise order; a side is an arc index or
    // -1 for a boundary segment.  The bigon between two radii at one point is
    // reported separately.
    struct face {
      std::vector<int> sides;
      bool             bigon = false;
    };

    std::vector<face> faces(triangulation const& t) const {
      validate(t);
      std::map<tagged_arc, int> index;
      for (std::size_t i = 0; i < t.arcs.size(); ++i) index[t.arcs[i]] = int(i);
      auto side = [&](tagged_arc const& x, int a, int b) -> std::optional<int> {
        if (is_boundary_segment(a, b)) return -1;
        auto it = index.find(x);
        if (it == index.end()) return std::nullopt;
        return it->second;
      };
      std::vector<face> out;
      if (type_.fam == family::A) {
        for (int a = 1; a <= m_; ++a) {
          for (int b = a + 1; b <= m_; ++b) {
            for (int c = b + 1; c <= m_; ++c) {
              auto ab = side(tagged_arc::chord(a, b), a, b);
              auto bc = side(tagged_arc::chord(b, c), b, c);
              auto ca = side(tagged_arc::chord(a, c), a, c);
              if (ab && bc && ca) out.push_back({{*ab, *bc, *ca}});
            }
          }
        }
        return out;
      }
      // puncture-free triangles (a, b, c), clockwise, b inside (a, c)
      for (int a = 1; a <= m_; ++a) {
        for (int b = 1; b <= m_; ++b) {
          for (int c = 1; c <= m_; ++c) {
            if (!strictly_inside(b, a, c) || dist(a, c) < 2) continue;
            auto ab = side(tagged_arc::peripheral(a, b), a, b);
            auto bc = side(tagged_arc::peripheral(b, c), b, c);
            auto ca = side(tagged_arc::peripheral(a, c), a, c);
            if (ab && bc && ca) out.push_back({{*ab, *bc, *ca}});
          }
        }
      }
      std::vector<int> radii;
      for (std::size_t i = 0; i < t.arcs.size(); ++i) {
        if (t.arcs[i].k == tagged_arc::kind::radius) radii.push_back(int(i));
      }
      std::sort(radii.begin(), radii.end(), [&](int x, int y) {
        return t.arcs[x] < t.arcs[y];
      });
      if (radii.size() == 2 && t.arcs[radii[0]].a == t.arcs[radii[1]].a) {
        // two radii at x: the digon around them, cut by the radii into a
        // bigon and the remaining face
        int x = t.arcs[radii[0]].a;
        for (int y = 1; y <= m_; ++y) {
          if (y == x) continue;
          auto xy = side(tagged_arc::peripheral(x, y), x, y);
          auto yx = side(tagged_arc::peripheral(y, x), y, x);
          if (xy && yx) {
            out.push_back({{*xy, *yx, radii[0], radii[1]}});
            out.push_back({{radii[0], radii[1]}, true});
            return out;
          }
        }
        throw domain_error("malformed triangulation around the puncture");
      }
      std::sort(radii.begin(), radii.end(), [&](int x, int y) {
        return t.arcs[x].a < t.arcs[y].a;
      });
      for (std::size_t i = 0; i < radii.size(); ++i) {
        int  r1 = radii[i], r2 = radii[(i + 1) % radii.size()];
        int  x1 = t.arcs[r1].a, x2 = t.arcs[r2].a;
        auto p  = side(tagged_arc::peripheral(x1, x2), x1, x2);
        if (!p) throw domain_error("malformed triangulation around the puncture");
        out.push_back({{*p, r2, r1}});
      }
      return out;
    }

    // Each triangle with clockwise sides (u, v, w) contributes u -> v -> w ->
    // u between arc sides.  Two radii at one point both take the arrows of
    // the loop they replace.
    quiver quiver_of(triangulation const& t) const {
      auto        fs = faces(t);
      std::size_t n  = t.arcs.size();
      std::vector<int> b(n * n, 0);
      auto add = [&](int u, int v) {
        if (u < 0 || v < 0) return;
        b[u * n + v] += 1;
        b[v * n + u] -= 1;
      };
      for (auto const& f : fs) {
        if (f.bigon) continue;
        if (f.sides.size() == 4) {
          // (xy, yx, r, r'): the loop around the puncture is the third side
          int xy = f.sides[0], yx = f.sides[1];
          add(xy, yx);
          for (int r : {f.sides[2], f.sides[3]}) {
            add(yx, r);
            add(r, xy);
          }
          continue;
        }
        add(f.sides[0], f.sides[1]);
        add(f.sides[1], f.sides[2]);
        add(f.sides[2], f.sides[0]);
      }
      std::vector<vertex> vs(n);
      for (std::size_t i = 0; i < n; ++i) vs[i] = static_cast<vertex>(i) + 1;
      return from_exchange_matrix({vs, b});
    }

    std::vector<triangulation> enumerate(std::size_t budget = 1'000'000) const {
      auto                                t0 = initial();
      std::set<std::vector<tagged_arc>>   seen;
      auto key = [](triangulation const& t) {
        auto k = t.arcs;
        std::sort(k.begin(), k.end());
        return k;
      };
      seen.insert(key(t0));
      std::vector<triangulation> out{t0};
      for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t k = 0; k < out[i].arcs.size(); ++k) {
          auto f = flip(out[i], k);
          if (seen.insert(key(f)).second) {
            out.push_back(std::move(f));
            if (out.size() > budget) {
              throw budget_error("more than " + std::to_string(budget)
                                 + " triangulations");
            }
          }
        }
      }
      return out;
    }

   private:
    // Puncture-free side of q inside that of p.
    bool nested(tagged_arc const& q, tagged_arc const& p) const {
      int c = dist(p.a, q.a), d = dist(p.a, q.b), e = dist(p.a, p.b);
      return c < d && d <= e;
    }

    dynkin_type             type_;
    int                     m_ = 0;
    std::vector<tagged_arc> arcs_;
  };

  inline std::string to_string(tagged_arc const& x) {
    switch (x.k) {
      case tagged_arc::kind::chord:
        return "chord(" + std::to_string(x.a) + "," + std::to_string(x.b) + ")";
      case tagged_arc::kind::peripheral:
        return "peripheral(" + std::to_string(x.a) + "," + std::to_string(x.b) + ")";
      case tagged_arc::kind::radius:
        return "radius(" + std::to_string(x.a) + ","
               + (x.t == tag::plain ? "plain" : "notched") + ")";
    }
    return "?";
  }

  struct braid_graph {
    std::size_t faces = 0;
    struct edge {
      int arc;  // index into the triangulation's arcs
      int u, v;
    };
    std::vector<edge> edges;
  };

  // Faces of T are the vertices; each arc joins the two faces it bounds.
  inline braid_graph braid_graph_of(surface const& s, triangulation const& t) {
    auto        fs = s.faces(t);
    braid_graph g{fs.size(), {}};
    for (std::size_t a = 0; a < t.arcs.size(); ++a) {
      std::vector<int> in;
      for (std::size_t f = 0; f < fs.size(); ++f) {
        if (std::count(fs[f].sides.begin(), fs[f].sides.end(), int(a))) {
          in.push_back(int(f));
        }
      }
      if (in.size() != 2) {
        throw domain_error("arc " + to_string(t.arcs[a]) + " bounds "
                           + std::to_string(in.size()) + " faces");
      }
      g.edges.push_back({int(a), in[0], in[1]});
    }
    return g;
  }

}  // namespace bqm

#endif  // BQM_SURFACE_HPP_
