#pragma once

#include <algorithm>
#include <compare>
#include <vector>

#include "ofc/pattern.hpp"

namespace ofc {

// Canonical representative of a pattern modulo rotation (choice of root) and
// relabeling. orbit_size counts the distinct rooted words of the class, so
// orbit_size * aut_size = 2E.
struct CanonicalClass {
  Word word;
  int orbit_size = 0;
  int aut_size = 0;
  int genus = 0;

  friend bool operator==(const CanonicalClass& a, const CanonicalClass& b) {
    return a.word == b.word;
  }
  friend auto operator<=>(const CanonicalClass& a, const CanonicalClass& b) {
    return a.word <=> b.word;
  }
};

namespace detail {

// First-appearance relabeling of an already-normalized word rotated by k.
// Labels in `w` are 1..E, so the rename map is a flat array.
inline Word relabel_rotation(const Word& w, int k) {
  const int n = static_cast<int>(w.size());
  const int e = n / 2;
  Word out(static_cast<size_t>(n));
  std::vector<int> rename(static_cast<size_t>(e) + 1, 0);  // old label -> signed new label
  int next = 0;
  for (int p = 0; p < n; ++p) {
    int v = w[static_cast<size_t>((p + k) % n)];
    int a = v > 0 ? v : -v;
    int& r = rename[static_cast<size_t>(a)];
    if (r == 0) r = (v > 0 ? 1 : -1) * ++next;
    out[static_cast<size_t>(p)] = v > 0 ? r : -r;
  }
  return out;
}

inline Word reversed_word(const Word& w) {
  Word r(w.rbegin(), w.rend());
  return r;
}

}  // namespace detail

// Lexicographically minimal relabeled rotation. With quotient_reversal the
// minimum is additionally taken over the reversed word's rotations; this
// coarser quotient is opt-in and not used by any frozen count.
inline CanonicalClass canonicalize(const GluingPattern& p, bool quotient_reversal = false) {
  const Word& w = p.word();
  const int n = p.size();
  std::vector<Word> candidates;
  candidates.reserve(static_cast<size_t>(quotient_reversal ? 2 * n : n));
  for (int k = 0; k < n; ++k) candidates.push_back(detail::relabel_rotation(w, k));
  if (quotient_reversal) {
    Word rev = detail::reversed_word(w);
    for (int k = 0; k < n; ++k) candidates.push_back(detail::relabel_rotation(rev, k));
  }
  CanonicalClass cls;
  cls.word = *std::min_element(candidates.begin(), candidates.end());
  std::sort(candidates.begin(), candidates.end());
  cls.orbit_size =
      static_cast<int>(std::unique(candidates.begin(), candidates.end()) - candidates.begin());
  if (quotient_reversal) {
    // Rotation-orbit bookkeeping does not apply to the coarser quotient.
    cls.aut_size = 0;
  } else {
    cls.aut_size = n / cls.orbit_size;
  }
  cls.genus = p.genus();
  return cls;
}

inline CanonicalClass canonicalize_word(const Word& w, bool quotient_reversal = false) {
  return canonicalize(GluingPattern::from_word(w), quotient_reversal);
}

}  // namespace ofc
