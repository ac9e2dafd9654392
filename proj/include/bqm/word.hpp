#ifndef BQM_WORD_HPP_
#define BQM_WORD_HPP_

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "quiver.hpp"

namespace bqm {

  // Signed generator sequence: +i is s_i, -i is s_i^{-1}.
  using word = std::vector<int>;

  inline word free_reduce(word const& w) {
    word out;
    out.reserve(w.size());
    for (int x : w) {
      if (x == 0) throw input_error("word contains the letter 0");
      if (!out.empty() && out.back() == -x) {
        out.pop_back();
      } else {
        out.push_back(x);
      }
    }
    return out;
  }

  inline bool is_freely_reduced(word const& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == -w[i + 1]) return false;
    }
    return true;
  }

  inline word inverse(word const& w) {
    word out(w.rbegin(), w.rend());
    for (int& x : out) x = -x;
    return out;
  }

  inline word concat(word const& a, word const& b) {
    word out(a);
    out.insert(out.end(), b.begin(), b.end());
    return free_reduce(out);
  }

  inline word power(word const& w, int e) {
    word out;
    word base = e >= 0 ? w : inverse(w);
    for (int i = 0; i < std::abs(e); ++i) {
      out.insert(out.end(), base.begin(), base.end());
    }
    return free_reduce(out);
  }

  // "s1 s2 s3^-1"; the empty string (or "e" / "1") is the empty word.
  inline word parse_word(std::string_view text) {
    word        w;
    std::size_t i = 0;
    auto        fail = [&](std::string const& why) {
      throw input_error("cannot parse word \"" + std::string(text)
                        + "\": " + why);
    };
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) {
        ++j;
      }
      std::string_view tok = text.substr(i, j - i);
      i                    = j;
      if (tok == "e" || tok == "1") continue;
      if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'S')) {
        fail("expected a token like s3 or s3^-1, got \"" + std::string(tok) + "\"");
      }
      std::size_t k   = 1;
      int         gen = 0;
      while (k < tok.size() && std::isdigit(static_cast<unsigned char>(tok[k]))) {
        gen = 10 * gen + (tok[k] - '0');
        if (gen > 1'000'000) fail("generator index too large");
        ++k;
      }
      if (k == 1 || gen == 0) fail("missing or zero generator index");
      int sign = 1;
      if (k < tok.size()) {
        if (tok.substr(k) == "^-1") {
          sign = -1;
        } else if (tok.substr(k) != "^1") {
          fail("unsupported exponent in \"" + std::string(tok) + "\"");
        }
      }
      w.push_back(sign * gen);
    }
    return w;
  }

  inline std::string format_word(word const& w) {
    if (w.empty()) return "e";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) s += ' ';
      s += 's' + std::to_string(std::abs(w[i]));
      if (w[i] < 0) s += "^-1";
    }
    return s;
  }

  // A homomorphism from the free group on `source` generators, given by the
  // image word (in `target` generators) of each generator.
  class group_hom {
   public:
    group_hom() = default;
    group_hom(std::vector<vertex> source, std::vector<vertex> target,
              std::map<vertex, word> images)
        : source_(std::move(source)),
          target_(std::move(target)),
          images_(std::move(images)) {
      std::sort(source_.begin(), source_.end());
      std::sort(target_.begin(), target_.end());
      for (vertex s : source_) {
        auto it = images_.find(s);
        if (it == images_.end()) {
          throw input_error("generator " + std::to_string(s) + " has no image");
        }
        it->second = free_reduce(it->second);
        for (int x : it->second) {
          if (!std::binary_search(target_.begin(), target_.end(), std::abs(x))) {
            throw input_error("image of generator " + std::to_string(s)
                              + " uses unknown generator "
                              + std::to_string(std::abs(x)));
          }
        }
      }
      if (images_.size() != source_.size()) {
        throw input_error("image given for a generator outside the source");
      }
    }

    static group_hom identity(std::vector<vertex> gens) {
      std::map<vertex, word> im;
      for (vertex v : gens) im[v] = word{v};
      return group_hom(gens, gens, std::move(im));
    }

    std::vector<vertex> const& source() const noexcept {
      return source_;
    }
    std::vector<vertex> const& target() const noexcept {
      return target_;
    }
    std::map<vertex, word> const& images() const noexcept {
      return images_;
    }

    word const& image(vertex s) const {
      auto it = images_.find(s);
      if (it == images_.end()) {
        throw input_error("generator " + std::to_string(s)
                          + " is not in the source of the homomorphism");
      }
      return it->second;
    }

    friend bool operator==(group_hom const&, group_hom const&) = default;

   private:
    std::vector<vertex>    source_;
    std::vector<vertex>    target_;
    std::map<vertex, word> images_;
  };

  inline word apply_hom(group_hom const& h, word const& w) {
    word out;
    for (int x : w) {
      word const& im = h.image(std::abs(x));
      if (x > 0) {
        out.insert(out.end(), im.begin(), im.end());
      } else {
        for (auto it = im.rbegin(); it != im.rend(); ++it) out.push_back(-*it);
      }
    }
    return free_reduce(out);
  }

  // h2 after h1.
  inline group_hom compose(group_hom const& h2, group_hom const& h1) {
    if (h1.target() != h2.source()) {
      throw input_error("cannot compose: generator sets do not match");
    }
    std::map<vertex, word> im;
    for (vertex s : h1.source()) im[s] = apply_hom(h2, h1.image(s));
    return group_hom(h1.source(), h2.target(), std::move(im));
  }

}  // namespace bqm

#endif  // BQM_WORD_HPP_
