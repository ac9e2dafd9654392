#ifndef BQM_GARSIDE_HPP_
#define BQM_GARSIDE_HPP_

#include <vector>

#include "weyl.hpp"
#include "word.hpp"

namespace bqm {

  // Delta^p x_1 ... x_l with each x_i a proper nonidentity simple (a Weyl
  // group element standing for its positive lift) and every adjacent pair
  // left-weighted.
  struct garside_nf {
    int                       delta_power = 0;
    std::vector<weyl_element> factors;

    bool trivial() const noexcept {
      return delta_power == 0 && factors.empty();
    }
    friend bool operator==(garside_nf const&, garside_nf const&) = default;
  };

  inline bool left_weighted(weyl_element const& a, weyl_element const& b) {
    return (b.left_descents() & ~a.right_descents()) == 0;
  }

  namespace detail {
    // Make (a, b) left-weighted by moving left descents of b onto a, lowest
    // index first.  Returns whether anything moved.
    inline bool repair(weyl_element& a, weyl_element& b) {
      bool moved = false;
      while (true) {
        auto bad = b.left_descents() & ~a.right_descents();
        if (!bad) return moved;
        int s = __builtin_ctz(bad) + 1;
        a.mul_right(s);
        b.mul_left(s);
        moved = true;
      }
    }

    class nf_builder {
     public:
      explicit nf_builder(dynkin_type const& t)
          : tab_(weyl_tables_of(t)), tau_(tab_.n) {
        for (int i = 0; i < tab_.n; ++i) tau_[i] = tab_.tau[i] - 1;
      }

      void push(int letter) {
        int i = std::abs(letter);
        if (i < 1 || i > tab_.n) {
          throw input_error("generator s" + std::to_string(i)
                            + " is not a vertex of " + tab_.type.str());
        }
        weyl_element x(tab_);
        if (letter > 0) {
          x.mul_right(i);
        } else {
          // s_i^{-1} = Delta^{-1} lift(w0 s_i); moving Delta^{-1} to the front
          // twists everything before it by tau.
          x = tab_.w0;
          x.mul_right(i);
          --p_;
          twisted_ = !twisted_;
        }
        factors_.push_back(twisted_ ? x.permuted(tau_) : x);
        settle();
      }

      garside_nf finish() {
        // full right-to-left passes to a fixpoint; a no-op after settle()
        bool changed = true;
        while (changed) {
          changed = false;
          for (std::size_t j = factors_.size(); j-- > 1;) {
            changed |= repair(factors_[j - 1], factors_[j]);
          }
          tidy();
        }
        garside_nf nf;
        nf.delta_power = p_;
        for (auto& f : factors_) {
          nf.factors.push_back(twisted_ ? f.permuted(tau_) : f);
        }
        return nf;
      }

     private:
      void settle() {
        for (std::size_t j = factors_.size(); j-- > 1;) {
          if (!repair(factors_[j - 1], factors_[j])) break;
        }
        tidy();
      }

      void tidy() {
        std::vector<weyl_element> keep;
        keep.reserve(factors_.size());
        for (auto& f : factors_) {
          if (!f.is_identity()) keep.push_back(std::move(f));
        }
        std::size_t lead = 0;
        while (lead < keep.size() && keep[lead] == tab_.w0) ++lead;
        p_ += static_cast<int>(lead);
        factors_.assign(keep.begin() + lead, keep.end());
      }

      weyl_tables const&        tab_;
      std::vector<int>          tau_;
      int                       p_       = 0;
      bool                      twisted_ = false;
      std::vector<weyl_element> factors_;
    };
  }  // namespace detail

  inline garside_nf normal_form(dynkin_type const& t, word const& w) {
    detail::nf_builder b(t);
    for (int x : w) b.push(x);
    return b.finish();
  }

  inline bool is_trivial(dynkin_type const& t, word const& w) {
    return normal_form(t, w).trivial();
  }

  inline bool equal(dynkin_type const& t, word const& a, word const& b) {
    return is_trivial(t, concat(a, inverse(b)));
  }

  // Positive word lifting w0.
  inline word delta_word(dynkin_type const& t) {
    return weyl_tables_of(t).w0_word;
  }

  // A word representing the normal form, for display and round trips.
  inline word to_word(dynkin_type const& t, garside_nf const& nf) {
    word out = power(delta_word(t), nf.delta_power);
    for (auto const& f : nf.factors) {
      auto r = f.reduced_word();
      out.insert(out.end(), r.begin(), r.end());
    }
    return free_reduce(out);
  }

}  // namespace bqm

#endif  // BQM_GARSIDE_HPP_
