#pragma once

#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ofc/error.hpp"

namespace ofc {

// A word is a sequence of signed edge labels; position p holds the side of an
// edge that appears at angle p around the single face.
using Word = std::vector<int>;

// Gluing pattern of a one-faced collection of curves on a closed oriented
// surface: a cyclic word of length 2E in which every edge label occurs once
// with each sign, and whose vertex permutation consists of 4-cycles only
// (every vertex is a transverse crossing of two strands).
//
// Position permutations, all on 0..2E-1:
//   gamma(p) = p+1 (mod 2E)      face traversal
//   alpha(p) = partner side      edge involution (fixed-point free)
//   mu(p)    = alpha(p)+1        vertex rotation; orbits are the vertices
// (alpha then mu retraces the face: mu(alpha(p)) = p+1.)
//
// Stored words are normalized: labels are 1..E in order of first appearance,
// and the first occurrence of each label is positive. Instances are immutable.
class GluingPattern {
 public:
  // Parses a whitespace-separated list of signed labels, e.g. "1 2 -1 -2".
  static GluingPattern parse(std::string_view text) {
    Word letters;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
      size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(tok, &used);
      } catch (const std::exception&) {
        fail(Errc::bad_argument, "not an integer token: '" + tok + "'");
      }
      if (used != tok.size()) fail(Errc::bad_argument, "not an integer token: '" + tok + "'");
      if (value == 0) fail(Errc::bad_argument, "label 0 is not allowed");
      letters.push_back(value);
    }
    return from_word(std::move(letters));
  }

  // Validates and normalizes an explicit word.
  static GluingPattern from_word(Word letters) {
    if (letters.empty()) fail(Errc::empty_word, "a gluing pattern needs at least one edge");
    return GluingPattern(std::move(letters));
  }

  int size() const { return static_cast<int>(word_.size()); }  // 2E
  int edge_count() const { return size() / 2; }                // E
  int vertex_count() const { return size() / 4; }              // V
  int genus() const { return genus_; }

  const Word& word() const { return word_; }
  int label(int pos) const { return word_[static_cast<size_t>(pos)]; }
  int edge_of(int pos) const { return std::abs(word_[static_cast<size_t>(pos)]); }

  int alpha(int pos) const { return alpha_[static_cast<size_t>(pos)]; }
  int gamma(int pos) const { return pos + 1 == size() ? 0 : pos + 1; }
  int mu(int pos) const { return gamma(alpha(pos)); }

  // Steps to the next side on the same curve: C = gamma . alpha . gamma.
  // Fixed points of C are exactly the sides of 1-simple curves.
  int next_on_curve(int pos) const { return gamma(alpha(gamma(pos))); }

  // Face-traversal rank of pos when the traversal starts at root.
  int order_index(int root, int pos) const {
    int d = pos - root;
    return d < 0 ? d + size() : d;
  }

  // Vertices as mu-cycles, each rotated to start at its minimal position,
  // listed in increasing order of that position.
  std::vector<std::array<int, 4>> vertex_cycles() const {
    std::vector<std::array<int, 4>> cycles;
    std::vector<char> seen(static_cast<size_t>(size()), 0);
    for (int p = 0; p < size(); ++p) {
      if (seen[static_cast<size_t>(p)]) continue;
      std::array<int, 4> cyc{p, mu(p), mu(mu(p)), mu(mu(mu(p)))};
      for (int q : cyc) seen[static_cast<size_t>(q)] = 1;
      cycles.push_back(cyc);
    }
    return cycles;
  }

  // Same pattern rooted k positions later (word rotated left by k).
  GluingPattern rotated(int k) const {
    int n = size();
    k = ((k % n) + n) % n;
    Word w(static_cast<size_t>(n));
    for (int p = 0; p < n; ++p) w[static_cast<size_t>(p)] = word_[static_cast<size_t>((p + k) % n)];
    return from_word(std::move(w));
  }

  std::string serialize() const {
    std::string out;
    for (size_t i = 0; i < word_.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(word_[i]);
    }
    return out;
  }

  bool operator==(const GluingPattern& o) const { return word_ == o.word_; }
  bool operator!=(const GluingPattern& o) const { return word_ != o.word_; }

 private:
  explicit GluingPattern(Word letters) {
    normalize(letters);
    word_ = std::move(letters);
    build_alpha();
    check_four_valent();
    const int n = size();
    // V - E + 1 = 2 - 2g with V = n/4, E = n/2.
    genus_ = (n / 4 + 1) / 2;
  }

  // Renames labels to 1..E in order of first appearance, first occurrence
  // positive. Rejects labels that do not occur exactly once with each sign.
  static void normalize(Word& letters) {
    std::vector<int> order;          // old |label| in appearance order
    std::vector<int> first_sign;     // sign of the first occurrence
    std::vector<int> rank;           // old |label| -> new label - 1
    std::vector<int> pos_count, neg_count;
    auto index_of = [&](int a) -> int {
      for (size_t i = 0; i < order.size(); ++i)
        if (order[i] == a) return static_cast<int>(i);
      return -1;
    };
    for (int v : letters) {
      int a = std::abs(v);
      int idx = index_of(a);
      if (idx < 0) {
        idx = static_cast<int>(order.size());
        order.push_back(a);
        first_sign.push_back(v > 0 ? 1 : -1);
        pos_count.push_back(0);
        neg_count.push_back(0);
      }
      (v > 0 ? pos_count : neg_count)[static_cast<size_t>(idx)]++;
    }
    for (size_t i = 0; i < order.size(); ++i) {
      if (pos_count[i] != 1 || neg_count[i] != 1)
        fail(Errc::unpaired_label,
             "label " + std::to_string(order[i]) + " must occur exactly once with each sign");
    }
    rank.resize(order.size());
    for (size_t i = 0; i < order.size(); ++i) rank[i] = static_cast<int>(i) + 1;
    for (int& v : letters) {
      int idx = index_of(std::abs(v));
      int sign = (v > 0 ? 1 : -1) * first_sign[static_cast<size_t>(idx)];
      v = sign * rank[static_cast<size_t>(idx)];
    }
  }

  void build_alpha() {
    const int n = size();
    alpha_.assign(static_cast<size_t>(n), -1);
    std::vector<int> first(static_cast<size_t>(edge_count()) + 1, -1);
    for (int p = 0; p < n; ++p) {
      int e = edge_of(p);
      if (first[static_cast<size_t>(e)] < 0) {
        first[static_cast<size_t>(e)] = p;
      } else {
        int q = first[static_cast<size_t>(e)];
        alpha_[static_cast<size_t>(p)] = q;
        alpha_[static_cast<size_t>(q)] = p;
      }
    }
  }

  void check_four_valent() const {
    const int n = size();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int p = 0; p < n; ++p) {
      if (seen[static_cast<size_t>(p)]) continue;
      int len = 0;
      int q = p;
      do {
        seen[static_cast<size_t>(q)] = 1;
        q = mu(q);
        ++len;
        if (len > 4) break;
      } while (q != p);
      if (len != 4)
        fail(Errc::not_four_valent,
             "vertex cycle through position " + std::to_string(p) + " has length " +
                 std::to_string(len) + (len > 4 ? "+" : ""));
    }
  }

  Word word_;
  std::vector<int> alpha_;
  int genus_ = 0;
};

inline std::string word_text(const Word& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

}  // namespace ofc
