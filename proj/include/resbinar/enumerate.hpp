#pragma once

// Isomorphism-free generation of finite lattices and of the residuated
// multiplications living on them.
//
// Lattices are grown one maximal element at a time: a partial state is a
// poset in which every pair has a meet (any order ideal of a lattice is one),
// and each extension step picks a down-closed set as the strict down-set of
// the next element.  States are deduplicated per level with a branch-and-
// bound canonical form, and a state of full size is kept when it has a
// single maximal element, which makes it a lattice.
//
// Multiplications are determined by their values on pairs of join
// irreducibles: residuation forces distribution over joins in both
// arguments, so x*y is the join of the a*b with a, b join-irreducible,
// a <= x, b <= y.  Conversely every monotone assignment on the grid extends
// that way to a candidate table, distinct assignments giving distinct
// tables.  On a distributive lattice every candidate is residuated; on a
// non-distributive one the failures are filtered out.  One model per orbit
// of the lattice automorphism group is emitted (the table that is
// lexicographically least in its orbit).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "resbinar/algebra.hpp"
#include "resbinar/errors.hpp"
#include "resbinar/lattice.hpp"

namespace resbinar {

// Byte string of the order matrix under the relabeling that minimizes it
// lexicographically; equal keys mean isomorphic lattices.
inline std::string canonical_key(const Lattice& lat) {
  const int n = lat.size();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::string best;
  std::string cand(static_cast<std::size_t>(n) * n, '0');
  do {
    bool worse = false;
    bool better = best.empty();
    std::size_t idx = 0;
    for (int i = 0; i < n && !worse; ++i)
      for (int j = 0; j < n; ++j, ++idx) {
        const char c = lat.leq(p[i], p[j]) ? '1' : '0';
        cand[idx] = c;
        if (!better) {
          if (c > best[idx]) {
            worse = true;
            break;
          }
          if (c < best[idx]) better = true;
        }
      }
    if (better && !worse) best = cand;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

// Order matrix followed by the renumbered multiplication table, minimized
// under a single shared relabeling; equal keys mean isomorphic models.
inline std::string canonical_key(const ResiduatedBinar& alg) {
  const Lattice& lat = alg.lattice();
  const int n = lat.size();
  std::vector<int> p(n), pinv(n);
  std::iota(p.begin(), p.end(), 0);
  std::string best;
  std::string cand(2 * static_cast<std::size_t>(n) * n, '0');
  do {
    for (int i = 0; i < n; ++i) pinv[p[i]] = i;
    bool worse = false;
    bool better = best.empty();
    std::size_t idx = 0;
    for (int i = 0; i < n && !worse; ++i)
      for (int j = 0; j < n; ++j, ++idx) {
        const char c = lat.leq(p[i], p[j]) ? '1' : '0';
        cand[idx] = c;
        if (!better) {
          if (c > best[idx]) {
            worse = true;
            break;
          }
          if (c < best[idx]) better = true;
        }
      }
    for (int i = 0; i < n && !worse; ++i)
      for (int j = 0; j < n; ++j, ++idx) {
        const char c = static_cast<char>('0' + pinv[alg.mult(p[i], p[j])]);
        cand[idx] = c;
        if (!better) {
          if (c > best[idx]) {
            worse = true;
            break;
          }
          if (c < best[idx]) better = true;
        }
      }
    if (better && !worse) best = cand;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

// All order-preserving relabelings, each as image vector, lexicographic.
inline std::vector<std::vector<int>> lattice_automorphisms(const Lattice& lat) {
  const int n = lat.size();
  std::vector<std::vector<int>> out;
  std::vector<int> img(n, -1);
  std::vector<char> used(n, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      out.push_back(img);
      return;
    }
    for (int c = 0; c < n; ++c) {
      if (used[c]) continue;
      if (popcount(lat.down_mask(i)) != popcount(lat.down_mask(c)) ||
          popcount(lat.up_mask(i)) != popcount(lat.up_mask(c)))
        continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        ok = lat.leq(i, j) == lat.leq(c, img[j]) &&
             lat.leq(j, i) == lat.leq(img[j], c);
      if (!ok) continue;
      img[i] = c;
      used[c] = 1;
      rec(i + 1);
      used[c] = 0;
    }
  };
  rec(0);
  return out;
}

namespace detail {

// Canonical form of a poset given as down-set masks (down[j] includes j).
// The encoding lists, for each prefix of the relabeling, the new row then
// the new column of the principal submatrix, so a branch is cut as soon as
// its bytes exceed the best known key.
inline std::string poset_key(const std::vector<Mask>& down) {
  const int n = static_cast<int>(down.size());
  auto leq = [&](int i, int j) { return (down[j] >> i & 1) != 0; };
  std::string best;
  std::string cur(static_cast<std::size_t>(n) * (n - 1), '0');
  std::vector<int> perm(n, -1);
  std::vector<char> used(n, 0);
  // `diverged` records that some earlier byte fell below the then-current
  // best; from there on no pruning happens and the leaf decides by a full
  // comparison, so a later shrink of `best` cannot be mistaken for a win.
  std::function<void(int, std::size_t, bool)> rec = [&](int d, std::size_t len,
                                                        bool diverged) {
    if (d == n) {
      if (best.empty() || (diverged && cur.compare(0, len, best) < 0))
        best.assign(cur, 0, len);
      return;
    }
    for (int e = 0; e < n; ++e) {
      if (used[e]) continue;
      std::size_t l = len;
      bool div = diverged;
      bool prune = false;
      auto push = [&](bool bit) {
        const char c = bit ? '1' : '0';
        cur[l] = c;
        if (!div && !best.empty()) {
          if (c > best[l])
            prune = true;
          else if (c < best[l])
            div = true;
        }
        ++l;
      };
      for (int j = 0; j < d && !prune; ++j) push(leq(e, perm[j]));
      for (int j = 0; j < d && !prune; ++j) push(leq(perm[j], e));
      if (prune) continue;
      perm[d] = e;
      used[e] = 1;
      rec(d + 1, l, div);
      used[e] = 0;
    }
  };
  rec(0, 0, false);
  return best;
}

}  // namespace detail

// One lattice per isomorphism class, ordered by canonical_key.  Element
// names are x0, x1, ... in an order compatible with the lattice order.
inline std::vector<Lattice> enumerate_lattices(int n,
                                               bool distributive_only = false) {
  if (n < 1 || n > 8)
    throw ConfigError("lattice size must be between 1 and 8, got " +
                      std::to_string(n));
  std::vector<std::vector<Mask>> level{{Mask{1}}};
  for (int k = 1; k < n; ++k) {
    std::vector<std::vector<Mask>> next;
    std::set<std::string> seen;
    const bool last = k == n - 1;
    for (const auto& st : level) {
      std::vector<Mask> up(k, 0);
      for (int j = 0; j < k; ++j) {
        Mask d = st[j];
        while (d) {
          const int i = lowest_bit(d);
          d &= d - 1;
          up[i] |= Mask{1} << j;
        }
      }
      const Mask all = (Mask{1} << k) - 1;
      for (Mask d = 1; d <= all; ++d) {
        bool ok = true;
        for (Mask rest = d; rest && ok;) {
          const int i = lowest_bit(rest);
          rest &= rest - 1;
          ok = (st[i] & ~d) == 0;  // down-closed
        }
        // the meet of each old element with the new one must exist: the
        // lower bounds, down(x) intersected with d, need a single maximum
        for (int x = 0; x < k && ok; ++x) {
          const Mask lb = st[x] & d;
          int maximal = 0;
          for (Mask rest = lb; rest && maximal < 2;) {
            const int g = lowest_bit(rest);
            rest &= rest - 1;
            if ((lb & up[g]) == Mask{1} << g) ++maximal;
          }
          ok = maximal == 1;
        }
        if (!ok) continue;
        if (last) {
          // a full-size state is a lattice iff the maximal element is unique
          int maximal = 1;  // the element being added
          for (int i = 0; i < k && maximal < 2; ++i)
            if (up[i] == Mask{1} << i && !(d >> i & 1)) ++maximal;
          if (maximal != 1) continue;
        }
        std::vector<Mask> ns = st;
        ns.push_back(d | Mask{1} << k);
        std::string key = detail::poset_key(ns);
        if (seen.insert(std::move(key)).second) next.push_back(std::move(ns));
      }
    }
    level = std::move(next);
  }
  std::vector<std::pair<std::string, Lattice>> keyed;
  for (const auto& st : level) {
    std::vector<Mask> up(n, 0);
    for (int j = 0; j < n; ++j) {
      Mask d = st[j];
      while (d) {
        const int i = lowest_bit(d);
        d &= d - 1;
        up[i] |= Mask{1} << j;
      }
    }
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    Lattice lat = Lattice::from_leq(std::move(names), std::move(up));
    if (distributive_only && !lat.is_distributive()) continue;
    keyed.emplace_back(canonical_key(lat), std::move(lat));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Lattice> out;
  out.reserve(keyed.size());
  for (auto& [key, lat] : keyed) out.push_back(std::move(lat));
  return out;
}

namespace detail {

// Fill order and monotonicity bounds for the join-irreducible grid.
struct GridPlan {
  std::vector<std::pair<int, int>> cells;  // positions into join_irreducibles
  std::vector<std::vector<int>> preds;     // earlier cells bounding each cell
  std::vector<std::vector<int>> at;        // cell index by grid position
};

inline GridPlan make_grid_plan(const Lattice& lat) {
  const auto& ji = lat.join_irreducibles();
  const int k = static_cast<int>(ji.size());
  GridPlan plan;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) plan.cells.emplace_back(a, b);
  auto weight = [&](const std::pair<int, int>& c) {
    return popcount(lat.down_mask(ji[c.first])) +
           popcount(lat.down_mask(ji[c.second]));
  };
  std::sort(plan.cells.begin(), plan.cells.end(),
            [&](const auto& c1, const auto& c2) {
              return std::tuple(weight(c1), c1) < std::tuple(weight(c2), c2);
            });
  auto& at = plan.at;
  at.assign(k, std::vector<int>(k));
  for (int i = 0; i < k * k; ++i)
    at[plan.cells[i].first][plan.cells[i].second] = i;
  // covers of the order induced on the join irreducibles
  std::vector<std::vector<int>> jpred(k);
  for (int a = 0; a < k; ++a)
    for (int a2 = 0; a2 < k; ++a2) {
      if (a2 == a || !lat.leq(ji[a2], ji[a])) continue;
      bool immediate = true;
      for (int a3 = 0; a3 < k && immediate; ++a3)
        immediate = a3 == a || a3 == a2 || !lat.leq(ji[a2], ji[a3]) ||
                    !lat.leq(ji[a3], ji[a]);
      if (immediate) jpred[a].push_back(a2);
    }
  plan.preds.resize(plan.cells.size());
  for (std::size_t i = 0; i < plan.cells.size(); ++i) {
    const auto [a, b] = plan.cells[i];
    for (int a2 : jpred[a]) plan.preds[i].push_back(at[a2][b]);
    for (int b2 : jpred[b]) plan.preds[i].push_back(at[a][b2]);
  }
  return plan;
}

// Every residuated table on lat whose first grid cell carries the value
// `chunk`, in depth-first order; not deduplicated across relabelings.
// Returns false when the visitor stopped the walk.
inline bool for_each_raw_table(const Lattice& lat, int chunk,
                               const std::function<bool(const Table&)>& visit) {
  const int n = lat.size();
  const auto& ji = lat.join_irreducibles();
  const int k = static_cast<int>(ji.size());
  if (k == 0) {
    // single element: the only table sends it to itself
    if (chunk != 0) throw ConfigError("chunk index out of range");
    Table t{static_cast<std::uint8_t>(lat.bot())};
    return visit(t);
  }
  if (chunk < 0 || chunk >= n) throw ConfigError("chunk index out of range");
  const GridPlan plan = make_grid_plan(lat);
  const int m = k * k;
  std::vector<int> val(m, 0);
  Table full(static_cast<std::size_t>(n) * n, 0);
  std::function<bool(int)> rec = [&](int ci) -> bool {
    if (ci == m) {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          int r = lat.bot();
          for (Mask am = lat.ji_below(x); am;) {
            const int a = lowest_bit(am);
            am &= am - 1;
            for (Mask bm = lat.ji_below(y); bm;) {
              const int b = lowest_bit(bm);
              bm &= bm - 1;
              r = lat.join(r, val[plan.at[a][b]]);
            }
          }
          full[static_cast<std::size_t>(x) * n + y] =
              static_cast<std::uint8_t>(r);
        }
      if (!is_residuable(lat, full)) return true;
      return visit(full);
    }
    int lower = lat.bot();
    for (const int p : plan.preds[ci]) lower = lat.join(lower, val[p]);
    for (Mask cand = lat.up_mask(lower); cand;) {
      const int v = lowest_bit(cand);
      cand &= cand - 1;
      val[ci] = v;
      if (!rec(ci + 1)) return false;
    }
    return true;
  };
  val[0] = chunk;
  return rec(1);
}

}  // namespace detail

// Independent slices of the model stream on one lattice: slice i holds the
// tables whose first grid cell equals i, so slices can run in parallel and
// their union, in slice order, is the full deterministic stream.
inline int model_chunk_count(const Lattice& lat) {
  return lat.join_irreducibles().empty() ? 1 : lat.size();
}

// One residuated binar per isomorphism orbit within the chunk, depth-first
// order.  Returns false when the visitor stopped the walk.
inline bool for_each_model_in_chunk(
    const Lattice& lat, int chunk,
    const std::function<bool(const ResiduatedBinar&)>& visit) {
  const int n = lat.size();
  const auto auts = lattice_automorphisms(lat);
  std::vector<std::pair<std::vector<int>, std::vector<int>>> motions;
  for (const auto& sigma : auts) {
    bool identity = true;
    for (int i = 0; i < n && identity; ++i) identity = sigma[i] == i;
    if (identity) continue;
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[sigma[i]] = i;
    motions.emplace_back(sigma, std::move(inv));
  }
  return detail::for_each_raw_table(lat, chunk, [&](const Table& t) {
    for (const auto& [sigma, inv] : motions) {
      bool smaller = false;
      for (int u = 0; u < n && !smaller; ++u)
        for (int v = 0; v < n; ++v) {
          const int a = sigma[t[static_cast<std::size_t>(inv[u]) * n + inv[v]]];
          const int b = t[static_cast<std::size_t>(u) * n + v];
          if (a != b) {
            smaller = a < b;
            u = n;  // settled either way
            break;
          }
        }
      if (smaller) return true;  // an isomorph comes earlier; skip this one
    }
    return visit(ResiduatedBinar::from_mult(lat, t));
  });
}

inline bool for_each_model(
    const Lattice& lat,
    const std::function<bool(const ResiduatedBinar&)>& visit) {
  for (int c = 0; c < model_chunk_count(lat); ++c)
    if (!for_each_model_in_chunk(lat, c, visit)) return false;
  return true;
}

inline std::uint64_t count_models(const Lattice& lat) {
  std::uint64_t count = 0;
  for_each_model(lat, [&](const ResiduatedBinar&) {
    ++count;
    return true;
  });
  return count;
}

}  // namespace resbinar
