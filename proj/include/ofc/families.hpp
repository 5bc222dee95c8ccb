#pragma once

#include <vector>

#include "ofc/error.hpp"
#include "ofc/moves.hpp"
#include "ofc/pattern.hpp"

namespace ofc {

namespace detail {

// Least side of each 1-simple edge, ascending.
inline std::vector<int> one_simple_sides(const GluingPattern& p) {
  std::vector<int> sides;
  for (int s = 0; s < p.size(); ++s)
    if (p.next_on_curve(s) == s && s < p.alpha(s)) sides.push_back(s);
  return sides;
}

inline bool necklace_signature(const GluingPattern& p, int g) {
  if (p.genus() != g) return false;
  const CurveDecomposition dec = curve_decomposition(p);
  if (dec.one_simple_count != g) return false;
  if (static_cast<int>(dec.curves.size()) != g + 1) return false;
  int spirals = 0;
  for (const auto& c : dec.curves) {
    if (c.one_simple) continue;
    ++spirals;
    if (c.self_intersections != g - 1) return false;
  }
  return spirals == 1;
}

}  // namespace detail

// Necklace of genus g: g 1-simple beads strung on one spiral curve with g-1
// self-intersections. Built one torus summand at a time, each gluing site the
// first marked edge whose sum carries the necklace signature.
inline GluingPattern necklace(int g) {
  if (g < 1) fail(Errc::bad_argument, "genus must be at least 1");
  if (g == 1) return torus_pattern();
  GluingPattern prev = necklace(g - 1);
  for (int x = 0; x < prev.size(); ++x) {
    GluingPattern candidate = connected_sum(prev, x, torus_pattern(), 0);
    if (detail::necklace_signature(candidate, g)) return candidate;
  }
  fail(Errc::signature_mismatch, "no gluing site extends the necklace to genus " +
                                     std::to_string(g));
}

namespace detail {

// Glues one torus per listed site, remapping the remaining sites through each
// sum so they keep pointing at the same edges.
inline GluingPattern glue_torus_copies(GluingPattern p, std::vector<int> sites) {
  for (size_t k = 0; k < sites.size(); ++k) {
    std::vector<int> map;
    p = connected_sum_impl(p, sites[k], torus_pattern(), 0, &map);
    for (size_t j = k + 1; j < sites.size(); ++j) {
      OFC_ASSERT(map[static_cast<size_t>(sites[j])] >= 0,
                 "gluing sites are distinct edges and survive earlier sums");
      sites[j] = map[static_cast<size_t>(sites[j])];
    }
  }
  return p;
}

}  // namespace detail

// X-chain of genus 2g: the necklace N_g with one torus glued at the spiral
// strand beside each bead, so every gluing adds a 1-simple curve and S = 2g.
inline GluingPattern chain_X(int g) {
  if (g < 1) fail(Errc::bad_argument, "genus must be at least 1");
  if (g == 1) {
    GluingPattern x2 = connected_sum(torus_pattern(), 0, torus_pattern(), 0);
    OFC_ASSERT(x2.genus() == 2 && one_simple_count(x2) == 2, "X_2 has genus 2 and S = 2");
    return x2;
  }
  GluingPattern p = necklace(g);
  std::vector<int> sites;
  for (int s : detail::one_simple_sides(p)) {
    const std::array<int, 4> cyc{s, p.mu(s), p.mu(p.mu(s)), p.mu(p.mu(p.mu(s)))};
    int site = -1;
    for (int q : cyc)
      if (p.next_on_curve(q) != q && (site < 0 || q < site)) site = q;
    if (site < 0)
      fail(Errc::signature_mismatch, "a necklace bead vertex must carry the spiral strand");
    sites.push_back(site);
  }
  GluingPattern out = detail::glue_torus_copies(std::move(p), std::move(sites));
  if (out.genus() != 2 * g || one_simple_count(out) != 2 * g)
    fail(Errc::signature_mismatch, "X chain must reach genus 2g with S = 2g");
  return out;
}

// Y-chain of genus 2g: the necklace N_{g+1} with g-1 tori glued at 1-simple
// edges. Each such gluing trades the bead for the summand's, keeping S = g+1.
inline GluingPattern chain_Y(int g) {
  if (g < 1) fail(Errc::bad_argument, "genus must be at least 1");
  GluingPattern p = necklace(g + 1);
  std::vector<int> beads = detail::one_simple_sides(p);
  OFC_ASSERT(static_cast<int>(beads.size()) >= g - 1, "the necklace has enough beads");
  beads.resize(static_cast<size_t>(g - 1));
  GluingPattern out = detail::glue_torus_copies(std::move(p), std::move(beads));
  if (out.genus() != 2 * g || one_simple_count(out) != g + 1)
    fail(Errc::signature_mismatch, "Y chain must reach genus 2g with S = g + 1");
  return out;
}

}  // namespace ofc
