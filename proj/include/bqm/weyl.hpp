#ifndef BQM_WEYL_HPP_
#define BQM_WEYL_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "dynkin.hpp"
#include "errors.hpp"
#include "word.hpp"

namespace bqm {

  inline constexpr int max_weyl_rank = 16;

  struct weyl_tables;

  // Element of an ADE Weyl group, stored as its matrix in the basis of
  // simple roots (column j = image of alpha_j) together with the inverse
  // matrix and the length.  Left and right multiplication by a simple
  // reflection are O(rank) row/column updates.
  class weyl_element {
   public:
    using matrix = std::array<std::int8_t, max_weyl_rank * max_weyl_rank>;

    weyl_element() = default;

    explicit weyl_element(weyl_tables const& t);

    int rank() const noexcept {
      return n_;
    }
    int length() const noexcept {
      return len_;
    }
    bool is_identity() const noexcept {
      return len_ == 0;
    }

    int operator()(int r, int c) const noexcept {
      return m_[r * max_weyl_rank + c];
    }
    int inverse_entry(int r, int c) const noexcept {
      return inv_[r * max_weyl_rank + c];
    }

    // Bit i-1 set for each vertex i with l(w s_i) < l(w).
    std::uint32_t right_descents() const noexcept {
      std::uint32_t d = 0;
      for (int i = 0; i < n_; ++i) {
        if (negative_column(m_, i)) d |= 1u << i;
      }
      return d;
    }
    std::uint32_t left_descents() const noexcept {
      std::uint32_t d = 0;
      for (int i = 0; i < n_; ++i) {
        if (negative_column(inv_, i)) d |= 1u << i;
      }
      return d;
    }

    // w <- w s_i (i is 1-based).
    void mul_right(int i) {
      check(i);
      int r = i - 1;
      len_ += negative_column(m_, r) ? -1 : 1;
      right_col(m_, r);
      left_row(inv_, r);
    }

    // w <- s_i w.
    void mul_left(int i) {
      check(i);
      int r = i - 1;
      len_ += negative_column(inv_, r) ? -1 : 1;
      left_row(m_, r);
      right_col(inv_, r);
    }

    weyl_element inverse() const {
      weyl_element w(*this);
      std::swap(w.m_, w.inv_);
      return w;
    }

    // Reduced word, greedily peeling the lowest-index left descent.
    word reduced_word() const {
      word         out;
      weyl_element w(*this);
      while (w.len_ > 0) {
        auto d = w.left_descents();
        int  i = __builtin_ctz(d) + 1;
        out.push_back(i);
        w.mul_left(i);
      }
      return out;
    }

    std::vector<std::vector<int>> rows() const {
      std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
      for (int r = 0; r < n_; ++r) {
        for (int c = 0; c < n_; ++c) out[r][c] = (*this)(r, c);
      }
      return out;
    }

    friend weyl_element operator*(weyl_element const& a, weyl_element const& b) {
      weyl_element out(a);
      for (int i : b.reduced_word()) out.mul_right(i);
      return out;
    }

    friend bool operator==(weyl_element const& a, weyl_element const& b) {
      return a.n_ == b.n_ && a.m_ == b.m_;
    }
    friend bool operator<(weyl_element const& a, weyl_element const& b) {
      return a.m_ < b.m_;
    }

    // Relabel by a diagram automorphism (perm is 0-based).
    weyl_element permuted(std::vector<int> const& perm) const {
      weyl_element w(*this);
      for (int r = 0; r < n_; ++r) {
        for (int c = 0; c < n_; ++c) {
          w.m_[perm[r] * max_weyl_rank + perm[c]]   = m_[r * max_weyl_rank + c];
          w.inv_[perm[r] * max_weyl_rank + perm[c]] = inv_[r * max_weyl_rank + c];
        }
      }
      return w;
    }

   private:
    bool negative_column(matrix const& m, int c) const noexcept {
      for (int r = 0; r < n_; ++r) {
        int x = m[r * max_weyl_rank + c];
        if (x != 0) return x < 0;
      }
      return false;
    }

    // M <- M S_c : column j gets  M_j - C_{cj} M_c.
    void right_col(matrix& m, int c) const noexcept {
      for (int j : neighbours(c)) {
        for (int r = 0; r < n_; ++r) {
          m[r * max_weyl_rank + j] += m[r * max_weyl_rank + c];
        }
      }
      for (int r = 0; r < n_; ++r) {
        m[r * max_weyl_rank + c] = -m[r * max_weyl_rank + c];
      }
    }

    // M <- S_c M : row c gets  M_c - sum_k C_{ck} M_k.
    void left_row(matrix& m, int c) const noexcept {
      for (int col = 0; col < n_; ++col) {
        int v = -m[c * max_weyl_rank + col];
        for (int k : neighbours(c)) v += m[k * max_weyl_rank + col];
        m[c * max_weyl_rank + col] = static_cast<std::int8_t>(v);
      }
    }

    std::vector<int> const& neighbours(int c) const noexcept;

    void check(int i) const {
      if (i < 1 || i > n_) {
        throw input_error("generator s" + std::to_string(i)
                          + " is not a vertex of the diagram");
      }
    }

    int                n_   = 0;
    int                len_ = 0;
    matrix             m_{};
    matrix             inv_{};
    weyl_tables const* tab_ = nullptr;
  };

  // Per-type data, built once and shared.
  struct weyl_tables {
    dynkin_type                    type;
    int                            n = 0;
    std::vector<int>               cartan;  // row-major
    std::vector<std::vector<int>>  neighbours;
    std::vector<std::vector<int>>  positive_roots;
    weyl_element                   w0;
    word                           w0_word;
    std::vector<int>               tau;  // 1-based: tau[i-1]
  };

  inline weyl_element::weyl_element(weyl_tables const& t)
      : n_(t.n), tab_(&t) {
    for (int i = 0; i < n_; ++i) {
      m_[i * max_weyl_rank + i]   = 1;
      inv_[i * max_weyl_rank + i] = 1;
    }
  }

  inline std::vector<int> const& weyl_element::neighbours(int c) const noexcept {
    return tab_->neighbours[c];
  }

  namespace detail {
    inline std::shared_ptr<weyl_tables const> build_weyl_tables(dynkin_type t) {
      if (t.rank > max_weyl_rank) {
        throw input_error("Weyl group rank " + std::to_string(t.rank)
                          + " exceeds the supported maximum "
                          + std::to_string(max_weyl_rank));
      }
      auto tab        = std::make_shared<weyl_tables>();
      tab->type       = t;
      tab->n          = t.rank;
      tab->cartan     = cartan_matrix(t);
      int n           = t.rank;
      tab->neighbours.assign(n, {});
      for (auto [a, b] : dynkin_edges(t)) {
        tab->neighbours[a - 1].push_back(b - 1);
        tab->neighbours[b - 1].push_back(a - 1);
      }

      // positive roots: close the simple roots under simple reflections
      std::set<std::vector<int>> roots;
      std::vector<std::vector<int>> todo;
      for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        roots.insert(e);
        todo.push_back(e);
      }
      while (!todo.empty()) {
        auto b = todo.back();
        todo.pop_back();
        for (int i = 0; i < n; ++i) {
          int pairing = 0;
          for (int j = 0; j < n; ++j) pairing += tab->cartan[i * n + j] * b[j];
          auto c = b;
          c[i] -= pairing;
          bool pos = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
          if (pos && roots.insert(c).second) todo.push_back(c);
        }
      }
      tab->positive_roots.assign(roots.begin(), roots.end());

      weyl_element w(*tab);
      while (true) {
        auto d = w.right_descents();
        if (d == (1u << n) - 1) break;
        int i = __builtin_ctz(~d) + 1;
        w.mul_right(i);
        tab->w0_word.push_back(i);
      }
      tab->w0 = w;
      tab->tau.assign(n, 0);
      for (int c = 0; c < n; ++c) {
        for (int r = 0; r < n; ++r) {
          if (w(r, c) != 0) tab->tau[c] = r + 1;
        }
      }
      return tab;
    }
  }  // namespace detail

  inline weyl_tables const& weyl_tables_of(dynkin_type const& t) {
    static std::mutex                                                   mu;
    static std::map<dynkin_type, std::shared_ptr<weyl_tables const>> cache;
    std::lock_guard<std::mutex>                                         lock(mu);
    auto it = cache.find(t);
    if (it == cache.end()) {
      it = cache.emplace(t, detail::build_weyl_tables(t)).first;
    }
    return *it->second;
  }

  inline weyl_element identity_element(dynkin_type const& t) {
    return weyl_element(weyl_tables_of(t));
  }

  inline weyl_element simple_reflection(dynkin_type const& t, int i) {
    auto w = identity_element(t);
    w.mul_right(i);
    return w;
  }

  // Image of a braid word in W (inverse letters map to the same reflection).
  inline weyl_element evaluate(dynkin_type const& t, word const& w) {
    auto e = identity_element(t);
    for (int x : w) e.mul_right(std::abs(x));
    return e;
  }

  inline weyl_element longest_element(dynkin_type const& t) {
    return weyl_tables_of(t).w0;
  }

  // tau(i) with w0 s_i w0 = s_{tau(i)}.
  inline int diagram_automorphism(dynkin_type const& t, int i) {
    auto const& tab = weyl_tables_of(t);
    if (i < 1 || i > tab.n) {
      throw input_error("vertex " + std::to_string(i) + " is not in "
                        + t.str());
    }
    return tab.tau[i - 1];
  }

  enum class side { left, right };

  inline std::vector<int> descents(weyl_element const& w, side s) {
    auto             d = s == side::left ? w.left_descents() : w.right_descents();
    std::vector<int> out;
    for (int i = 0; i < w.rank(); ++i) {
      if (d >> i & 1u) out.push_back(i + 1);
    }
    return out;
  }

  // |W| as the product, over k, of the orbit size of the k-th fundamental
  // weight under the parabolic subgroup <s_1..s_k>; the stabiliser of that
  // weight there is <s_1..s_{k-1}>.
  inline std::uint64_t group_order(dynkin_type const& t) {
    auto const&   tab   = weyl_tables_of(t);
    int           n     = tab.n;
    std::uint64_t order = 1;
    for (int k = 0; k < n; ++k) {
      std::vector<int>           start(n, 0);
      start[k] = 1;
      std::set<std::vector<int>> orbit{start};
      std::vector<std::vector<int>> todo{start};
      while (!todo.empty()) {
        auto v = todo.back();
        todo.pop_back();
        for (int i = 0; i <= k; ++i) {
          if (v[i] == 0) continue;
          auto u = v;
          for (int j = 0; j < n; ++j) u[j] -= v[i] * tab.cartan[i * n + j];
          if (orbit.insert(u).second) todo.push_back(std::move(u));
        }
      }
      order *= orbit.size();
    }
    return order;
  }

}  // namespace bqm

#endif  // BQM_WEYL_HPP_
