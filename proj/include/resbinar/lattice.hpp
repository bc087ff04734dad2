#pragma once

// Finite lattices over at most 32 elements.  Elements are indices into a
// name table; order and derived data live in per-element bitmasks so that
// meets, joins and subset scans stay branch-light.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "resbinar/errors.hpp"

namespace resbinar {

using Mask = std::uint32_t;

constexpr int kMaxElements = 32;

inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest_bit(Mask m) { return std::countr_zero(m); }

struct LatticeFlags {
  bool distributive = false;
  bool complemented = false;
  bool boolean = false;  // distributive && complemented
};

class Lattice {
 public:
  // Builds a lattice from cover pairs (lo, hi), given as element indices.
  // The order is the reflexive-transitive closure of the covers.  Fails if
  // the covers are cyclic or some pair lacks a meet or join.
  static Lattice from_covers(std::vector<std::string> names,
                             const std::vector<std::pair<int, int>>& covers) {
    const int n = check_names(names);
    std::vector<Mask> up(n, 0);
    for (auto [lo, hi] : covers) {
      if (lo < 0 || lo >= n || hi < 0 || hi >= n)
        throw LatticeError("cover index out of range");
      if (lo == hi) throw CyclicCovers();
      up[lo] |= Mask{1} << hi;
    }
    // reflexive-transitive closure; a cycle shows up as i reaching i.
    for (int i = 0; i < n; ++i) up[i] |= Mask{1} << i;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i < n; ++i) {
        Mask reach = up[i];
        Mask m = reach;
        while (m) {
          int j = lowest_bit(m);
          m &= m - 1;
          reach |= up[j];
        }
        if (reach != up[i]) {
          up[i] = reach;
          changed = true;
        }
      }
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if ((up[i] >> j & 1) && (up[j] >> i & 1)) throw CyclicCovers();
    return Lattice(std::move(names), std::move(up));
  }

  // Name-based convenience used by the file reader and tests.
  static Lattice from_covers(
      std::vector<std::string> names,
      const std::vector<std::pair<std::string, std::string>>& covers) {
    std::vector<std::pair<int, int>> ix;
    ix.reserve(covers.size());
    for (const auto& [lo, hi] : covers) {
      int a = index_of(names, lo);
      int b = index_of(names, hi);
      if (a < 0) throw UnknownLabel(lo);
      if (b < 0) throw UnknownLabel(hi);
      ix.emplace_back(a, b);
    }
    return from_covers(std::move(names), ix);
  }

  // Builds directly from up-set masks (up[i] = { j : i <= j }).  Used by the
  // enumerator, which produces orders already closed and antisymmetric; the
  // lattice property is still verified.
  static Lattice from_leq(std::vector<std::string> names,
                          std::vector<Mask> up) {
    check_names(names);
    return Lattice(std::move(names), std::move(up));
  }

  int size() const { return n_; }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  bool leq(int i, int j) const { return up_[i] >> j & 1; }
  Mask up_mask(int i) const { return up_[i]; }
  Mask down_mask(int i) const { return down_[i]; }
  Mask all_mask() const { return n_ == 32 ? ~Mask{0} : (Mask{1} << n_) - 1; }

  int meet(int i, int j) const { return meet_[i * n_ + j]; }
  int join(int i, int j) const { return join_[i * n_ + j]; }
  int bot() const { return bot_; }
  int top() const { return top_; }

  // Join of an arbitrary element subset; empty mask gives bot.
  int join_of(Mask m) const {
    int r = bot_;
    while (m) {
      int j = lowest_bit(m);
      m &= m - 1;
      r = join(r, j);
    }
    return r;
  }

  int meet_of(Mask m) const {
    int r = top_;
    while (m) {
      int j = lowest_bit(m);
      m &= m - 1;
      r = meet(r, j);
    }
    return r;
  }

  // Elements with exactly one lower cover (bot excluded), ascending.
  const std::vector<int>& join_irreducibles() const { return ji_; }

  // Mask over positions in join_irreducibles() of those lying below x.
  Mask ji_below(int x) const { return ji_below_[x]; }

  // Hasse diagram: (lo, hi) with hi covering lo, lexicographic order.
  std::vector<std::pair<int, int>> covers() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (i != j && leq(i, j) && is_cover(i, j)) out.emplace_back(i, j);
    return out;
  }

  bool is_distributive() const { return flags_.distributive; }
  bool is_complemented() const { return flags_.complemented; }
  bool is_boolean() const { return flags_.boolean; }
  LatticeFlags flags() const { return flags_; }

  // All y with x ^ y = bot and x v y = top, ascending.
  std::vector<int> complements_of(int x) const {
    std::vector<int> out;
    for (int y = 0; y < n_; ++y)
      if (meet(x, y) == bot_ && join(x, y) == top_) out.push_back(y);
    return out;
  }

  bool operator==(const Lattice& o) const {
    return names_ == o.names_ && up_ == o.up_;
  }

 private:
  Lattice(std::vector<std::string> names, std::vector<Mask> up)
      : n_(static_cast<int>(names.size())),
        names_(std::move(names)),
        up_(std::move(up)) {
    if (static_cast<int>(up_.size()) != n_)
      throw LatticeError("order table size mismatch");
    for (int i = 0; i < n_; ++i) {
      if (up_[i] & ~all_mask()) throw LatticeError("order mask out of range");
      if (!(up_[i] >> i & 1)) throw LatticeError("order not reflexive");
      Mask m = up_[i];
      while (m) {
        int j = lowest_bit(m);
        m &= m - 1;
        if ((up_[j] & ~up_[i]) != 0) throw LatticeError("order not transitive");
        if (j != i && (up_[j] >> i & 1)) throw LatticeError("order not antisymmetric");
      }
    }
    down_.assign(n_, 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (up_[j] >> i & 1) down_[i] |= Mask{1} << j;

    meet_.assign(static_cast<std::size_t>(n_) * n_, 0);
    join_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (int i = 0; i < n_; ++i)
      for (int j = i; j < n_; ++j) {
        int m = greatest_of(down_[i] & down_[j]);
        if (m < 0) throw NotALattice("pair has no meet: " + names_[i] + ", " + names_[j], i, j);
        int v = least_of(up_[i] & up_[j]);
        if (v < 0) throw NotALattice("pair has no join: " + names_[i] + ", " + names_[j], i, j);
        meet_[i * n_ + j] = meet_[j * n_ + i] = static_cast<std::uint8_t>(m);
        join_[i * n_ + j] = join_[j * n_ + i] = static_cast<std::uint8_t>(v);
      }

    bot_ = 0;
    top_ = 0;
    for (int i = 0; i < n_; ++i) {
      bot_ = meet(bot_, i);
      top_ = join(top_, i);
    }

    for (int j = 0; j < n_; ++j) {
      if (j == bot_) continue;
      int lower_covers = 0;
      for (int i = 0; i < n_; ++i)
        if (i != j && leq(i, j) && is_cover(i, j)) ++lower_covers;
      if (lower_covers == 1) ji_.push_back(j);
    }
    ji_below_.assign(n_, 0);
    for (int x = 0; x < n_; ++x)
      for (std::size_t k = 0; k < ji_.size(); ++k)
        if (leq(ji_[k], x)) ji_below_[x] |= Mask{1} << k;

    // Every element must be the join of the join-irreducibles below it.
    for (int x = 0; x < n_; ++x) {
      int j = bot_;
      Mask m = ji_below_[x];
      while (m) {
        int k = lowest_bit(m);
        m &= m - 1;
        j = join(j, ji_[k]);
      }
      if (j != x)
        throw LatticeError("join-irreducible decomposition failed for " + names_[x]);
    }

    flags_.distributive = compute_distributive();
    flags_.complemented = compute_complemented();
    flags_.boolean = flags_.distributive && flags_.complemented;
  }

  static int check_names(const std::vector<std::string>& names) {
    if (names.empty()) throw LatticeError("element list is empty");
    if (static_cast<int>(names.size()) > kMaxElements)
      throw LatticeError("too many elements (capacity " + std::to_string(kMaxElements) + ")");
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i].empty()) throw LatticeError("empty element label");
      for (std::size_t j = i + 1; j < names.size(); ++j)
        if (names[i] == names[j]) throw DuplicateLabel(names[i]);
    }
    return static_cast<int>(names.size());
  }

  static int index_of(const std::vector<std::string>& names,
                      const std::string& s) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == s) return static_cast<int>(i);
    return -1;
  }

  bool is_cover(int i, int j) const {
    // strict i < j with nothing strictly between
    Mask between = up_[i] & down_[j] & ~(Mask{1} << i) & ~(Mask{1} << j);
    return between == 0;
  }

  // Greatest element of the subset, or -1 if the subset has none.
  int greatest_of(Mask s) const {
    Mask m = s;
    while (m) {
      int g = lowest_bit(m);
      m &= m - 1;
      if ((s & ~down_[g]) == 0) return g;
    }
    return -1;
  }

  int least_of(Mask s) const {
    Mask m = s;
    while (m) {
      int g = lowest_bit(m);
      m &= m - 1;
      if ((s & ~up_[g]) == 0) return g;
    }
    return -1;
  }

  bool compute_distributive() const {
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        for (int z = 0; z < n_; ++z)
          if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) return false;
    return true;
  }

  bool compute_complemented() const {
    for (int x = 0; x < n_; ++x)
      if (complements_of(x).empty()) return false;
    return true;
  }

  int n_;
  std::vector<std::string> names_;
  std::vector<Mask> up_, down_;
  std::vector<std::uint8_t> meet_, join_;
  int bot_ = 0, top_ = 0;
  std::vector<int> ji_;
  std::vector<Mask> ji_below_;
  LatticeFlags flags_;
};

inline LatticeFlags lattice_predicates(const Lattice& lat) { return lat.flags(); }

}  // namespace resbinar
