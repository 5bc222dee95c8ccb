#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "ofc/canonical.hpp"
#include "ofc/error.hpp"
#include "ofc/moves.hpp"
#include "ofc/parallel.hpp"
#include "ofc/pattern.hpp"

namespace ofc {

namespace detail {
inline unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
  while (b) {
    unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}
}  // namespace detail

// Number of rooted one-faced collections of genus g: (4g-2)! / (2^(2g-1) g!).
// Signals Overflow instead of wrapping once the value leaves 64 bits.
inline std::uint64_t rooted_count_formula(int g) {
  if (g < 1) fail(Errc::bad_argument, "genus must be at least 1");
  unsigned __int128 num = 1, den = 1;
  for (int k = 0; k < 2 * g - 1; ++k) den *= 2;
  for (int k = 2; k <= g; ++k) den *= static_cast<unsigned>(k);
  const unsigned __int128 lim = ~static_cast<unsigned __int128>(0);
  for (int k = 2; k <= 4 * g - 2; ++k) {
    unsigned __int128 f = static_cast<unsigned>(k);
    unsigned __int128 c = detail::gcd128(f, den);
    f /= c;
    den /= c;
    if (f > 1 && num > lim / f)
      fail(Errc::overflow, "rooted count exceeds the integer range at genus " + std::to_string(g));
    num *= f;
    c = detail::gcd128(num, den);
    num /= c;
    den /= c;
  }
  OFC_ASSERT(den == 1, "the rooted count formula divides exactly");
  if (num > static_cast<unsigned __int128>(~std::uint64_t{0}))
    fail(Errc::overflow, "rooted count exceeds 64 bits at genus " + std::to_string(g));
  return static_cast<std::uint64_t>(num);
}

namespace detail {

// Backtracking enumeration of edge involutions alpha on positions 0..2E-1
// with gamma(p) = p+1, pruned so every vertex cycle closes with length 4.
// The corner walk q -> alpha(q+1) is the alpha-image of the vertex rotation
// (equal cycle lengths); pairing (a, b) fixes its links a-1 -> b and
// b-1 -> a. Partial chains longer than three edges, and closed chains of
// length other than four, are dead.
class RootedEnumerator {
 public:
  explicit RootedEnumerator(int g, std::function<void(const Word&)> emit)
      : n_(8 * g - 4), emit_(std::move(emit)) {
    alpha_.assign(static_cast<size_t>(n_), -1);
    succ_.assign(static_cast<size_t>(n_), -1);
    pred_.assign(static_cast<size_t>(n_), -1);
  }

  void run() { recurse(); }

  // Splits the search at position 0's partner choice; branch k pairs 0 with
  // k+1. Used to parallelize; concatenating branch outputs in order equals
  // the sequential stream.
  int branch_count() const { return n_ - 1; }
  void run_branch(int k) {
    const int q = k + 1;
    if (!try_pair(0, q)) return;
    recurse();
    undo_pair(0, q);
  }

 private:
  enum class LinkState { ok, dead };

  int prev(int p) const { return p == 0 ? n_ - 1 : p - 1; }

  LinkState add_link(int u, int v) {
    succ_[static_cast<size_t>(u)] = v;
    pred_[static_cast<size_t>(v)] = u;
    // Walk the chain through the new link; u == v is a 1-cycle.
    int len = 1;
    int cur = v;
    while (cur != u && succ_[static_cast<size_t>(cur)] != -1) {
      cur = succ_[static_cast<size_t>(cur)];
      ++len;
      if (len > 4) return LinkState::dead;
    }
    if (cur == u) return len == 4 ? LinkState::ok : LinkState::dead;
    int back = u;
    while (pred_[static_cast<size_t>(back)] != -1) {
      back = pred_[static_cast<size_t>(back)];
      ++len;
      if (len >= 4) return LinkState::dead;  // open 4-edge chain cannot close to a 4-cycle
    }
    return LinkState::ok;
  }

  void remove_link(int u, int v) {
    succ_[static_cast<size_t>(u)] = -1;
    pred_[static_cast<size_t>(v)] = -1;
  }

  bool try_pair(int a, int b) {
    alpha_[static_cast<size_t>(a)] = b;
    alpha_[static_cast<size_t>(b)] = a;
    if (add_link(prev(a), b) == LinkState::ok) {
      if (add_link(prev(b), a) == LinkState::ok) return true;
      remove_link(prev(b), a);
    }
    remove_link(prev(a), b);
    alpha_[static_cast<size_t>(a)] = -1;
    alpha_[static_cast<size_t>(b)] = -1;
    return false;
  }

  void undo_pair(int a, int b) {
    remove_link(prev(b), a);
    remove_link(prev(a), b);
    alpha_[static_cast<size_t>(a)] = -1;
    alpha_[static_cast<size_t>(b)] = -1;
  }

  // Chain-extension forced moves first: a tail with three edges behind it can
  // only close its cycle, a shorter tail constrains its successor position.
  int select_position(int* forced_partner) {
    *forced_partner = -1;
    int best = -1, best_len = 0;
    for (int t = 0; t < n_; ++t) {
      if (succ_[static_cast<size_t>(t)] != -1) continue;
      if (pred_[static_cast<size_t>(t)] == -1) continue;  // isolated node
      int len = 0, back = t;
      while (pred_[static_cast<size_t>(back)] != -1) {
        back = pred_[static_cast<size_t>(back)];
        ++len;
      }
      if (len > best_len) {
        best_len = len;
        best = t;
        if (len == 3) {
          // Closing is the only move: pair the tail's next position with
          // the chain head.
          int p = (t + 1) % n_;
          *forced_partner = (alpha_[static_cast<size_t>(back)] == -1 &&
                             alpha_[static_cast<size_t>(p)] == -1 && back != p)
                                ? back
                                : -2;  // -2: no legal close, prune
          return p;
        }
      }
    }
    if (best >= 0) return (best + 1) % n_;
    for (int p = 0; p < n_; ++p)
      if (alpha_[static_cast<size_t>(p)] == -1) return p;
    return -1;
  }

  void recurse() {
    int forced = -1;
    const int p = select_position(&forced);
    if (p == -1) {
      emit_word();
      return;
    }
    if (forced == -2) return;
    if (alpha_[static_cast<size_t>(p)] != -1) return;  // tail successor already taken: dead
    if (forced >= 0) {
      if (try_pair(p, forced)) {
        recurse();
        undo_pair(p, forced);
      }
      return;
    }
    for (int q = 0; q < n_; ++q) {
      if (q == p || alpha_[static_cast<size_t>(q)] != -1) continue;
      if (try_pair(p, q)) {
        recurse();
        undo_pair(p, q);
      }
    }
  }

  void emit_word() {
    Word w(static_cast<size_t>(n_));
    std::vector<int> label(static_cast<size_t>(n_), 0);
    int next = 0;
    for (int p = 0; p < n_; ++p) {
      if (alpha_[static_cast<size_t>(p)] > p) {
        label[static_cast<size_t>(p)] = ++next;
        w[static_cast<size_t>(p)] = label[static_cast<size_t>(p)];
      } else {
        w[static_cast<size_t>(p)] = -label[static_cast<size_t>(alpha_[static_cast<size_t>(p)])];
      }
    }
    emit_(w);
  }

  int n_;
  std::function<void(const Word&)> emit_;
  std::vector<int> alpha_, succ_, pred_;
};

}  // namespace detail

// Streams every rooted pattern of genus g in a fixed deterministic order.
// With threads != 1 the search splits at the first pairing decision and the
// per-branch outputs are concatenated in branch order.
inline void enumerate_rooted(int g, const std::function<void(const GluingPattern&)>& emit,
                             int threads = 1) {
  if (g < 1) fail(Errc::bad_argument, "genus must be at least 1");
  threads = resolve_threads(threads);
  if (threads <= 1) {
    detail::RootedEnumerator en(g, [&](const Word& w) { emit(GluingPattern::from_word(w)); });
    en.run();
    return;
  }
  detail::RootedEnumerator probe(g, [](const Word&) {});
  const int branches = probe.branch_count();
  std::vector<std::vector<Word>> buckets(static_cast<size_t>(branches));
  parallel_for_index(branches, threads, [&](int k) {
    detail::RootedEnumerator en(
        g, [&](const Word& w) { buckets[static_cast<size_t>(k)].push_back(w); });
    en.run_branch(k);
  });
  for (const auto& bucket : buckets)
    for (const auto& w : bucket) emit(GluingPattern::from_word(w));
}

// Counts without materializing words, so large genera stay in constant memory.
inline std::uint64_t count_rooted(int g, int threads = 1) {
  if (g < 1) fail(Errc::bad_argument, "genus must be at least 1");
  threads = resolve_threads(threads);
  if (threads <= 1) {
    std::uint64_t n = 0;
    detail::RootedEnumerator en(g, [&](const Word&) { ++n; });
    en.run();
    return n;
  }
  detail::RootedEnumerator probe(g, [](const Word&) {});
  const int branches = probe.branch_count();
  std::vector<std::uint64_t> counts(static_cast<size_t>(branches), 0);
  parallel_for_index(branches, threads, [&](int k) {
    std::uint64_t c = 0;
    detail::RootedEnumerator en(g, [&](const Word&) { ++c; });
    en.run_branch(k);
    counts[static_cast<size_t>(k)] = c;
  });
  std::uint64_t total = 0;
  for (std::uint64_t c : counts) total += c;
  return total;
}

// Per-class atlas entry with the signature invariants used downstream.
struct AtlasRecord {
  CanonicalClass cls;
  int one_simple = 0;
  int curve_count = 0;
  int census_type1 = 0;
  int census_type2 = 0;
  int census_type3 = 0;  // root 0 of the canonical word
  int trisections_total = 0;
  bool non_simplifiable = false;
};

inline AtlasRecord make_atlas_record(const GluingPattern& p) {
  AtlasRecord r;
  r.cls = canonicalize(p);
  GluingPattern c = GluingPattern::from_word(r.cls.word);
  r.one_simple = one_simple_count(c);
  r.curve_count = static_cast<int>(curve_decomposition(c).curves.size());
  for (const auto& v : vertex_census(c, 0)) {
    r.trisections_total += v.trisections;
    switch (v.vtype) {
      case VertexType::type1: ++r.census_type1; break;
      case VertexType::type2: ++r.census_type2; break;
      case VertexType::type3: ++r.census_type3; break;
    }
  }
  r.non_simplifiable = !find_simplification(c).has_value();
  return r;
}

// All canonical classes of genus g, sorted by canonical word. Each class's
// rooted multiplicity is cross-checked against its rotation orbit size.
inline std::vector<AtlasRecord> enumerate_classes(int g, int threads = 1) {
  std::map<Word, std::uint64_t> hits;
  enumerate_rooted(
      g, [&](const GluingPattern& p) { ++hits[canonicalize(p).word]; }, threads);
  std::vector<AtlasRecord> out;
  out.reserve(hits.size());
  for (const auto& [word, count] : hits) {
    AtlasRecord r = make_atlas_record(GluingPattern::from_word(word));
    OFC_ASSERT(r.cls.word == word, "canonicalization is idempotent");
    OFC_ASSERT(static_cast<std::uint64_t>(r.cls.orbit_size) == count,
               "rooted multiplicity equals the rotation orbit size");
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace ofc
