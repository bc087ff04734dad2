#pragma once

// Residuated binars: a lattice with a multiplication that has both
// residuals.  Residual tables are always derived from the multiplication,
// never taken on trust.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "resbinar/errors.hpp"
#include "resbinar/lattice.hpp"

namespace resbinar {

using Table = std::vector<std::uint8_t>;  // n*n, row-major

struct Residuals {
  Table ldiv;  // ldiv[x][z] = x \ z = largest y with x*y <= z
  Table rdiv;  // rdiv[z][y] = z / y = largest x with x*y <= z
};

namespace detail {

// Candidate residuals by maximum search.  Returns nullopt with a witness
// (x, z, side) when some candidate fails the residuation equivalence.
inline std::optional<Residuals> try_residuals(const Lattice& lat,
                                              const Table& mult,
                                              int* wx = nullptr, int* wz = nullptr,
                                              Side* wside = nullptr) {
  const int n = lat.size();
  Residuals r;
  r.ldiv.assign(static_cast<std::size_t>(n) * n, 0);
  r.rdiv.assign(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int z = 0; z < n; ++z) {
      int cand = -1;
      for (int y = 0; y < n; ++y)
        if (lat.leq(mult[x * n + y], z)) cand = cand < 0 ? y : lat.join(cand, y);
      // residuation demands x*(x\z) <= z and that every qualifying y is
      // below the candidate; the first can fail when mult is not isotone
      if (cand < 0 || !lat.leq(mult[x * n + cand], z)) {
        if (wx) { *wx = x; *wz = z; *wside = Side::Left; }
        return std::nullopt;
      }
      r.ldiv[x * n + z] = static_cast<std::uint8_t>(cand);
    }
  for (int z = 0; z < n; ++z)
    for (int y = 0; y < n; ++y) {
      int cand = -1;
      for (int x = 0; x < n; ++x)
        if (lat.leq(mult[x * n + y], z)) cand = cand < 0 ? x : lat.join(cand, x);
      if (cand < 0 || !lat.leq(mult[cand * n + y], z)) {
        if (wx) { *wx = y; *wz = z; *wside = Side::Right; }
        return std::nullopt;
      }
      r.rdiv[z * n + y] = static_cast<std::uint8_t>(cand);
    }
  // full three-way equivalence: x*y <= z  iff  y <= x\z  iff  x <= z/y
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        bool prod = lat.leq(mult[x * n + y], z);
        if (prod != lat.leq(y, r.ldiv[x * n + z])) {
          if (wx) { *wx = x; *wz = z; *wside = Side::Left; }
          return std::nullopt;
        }
        if (prod != lat.leq(x, r.rdiv[z * n + y])) {
          if (wx) { *wx = y; *wz = z; *wside = Side::Right; }
          return std::nullopt;
        }
      }
  return r;
}

// Independent residuability test: mult distributes over binary joins in
// each argument and annihilates bot.
inline bool is_residuable(const Lattice& lat, const Table& mult) {
  const int n = lat.size();
  for (int x = 0; x < n; ++x) {
    if (mult[x * n + lat.bot()] != lat.bot()) return false;
    if (mult[lat.bot() * n + x] != lat.bot()) return false;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int j = lat.join(y, z);
        if (mult[x * n + j] != lat.join(mult[x * n + y], mult[x * n + z]))
          return false;
        if (mult[j * n + x] != lat.join(mult[y * n + x], mult[z * n + x]))
          return false;
      }
  return true;
}

}  // namespace detail

// Derives both residual tables or throws NotResiduated.  The maximum-search
// derivation and the join-distributivity criterion are both evaluated and
// must agree.
inline Residuals derive_residuals(const Lattice& lat, const Table& mult) {
  int wx = 0, wz = 0;
  Side ws = Side::Left;
  auto r = detail::try_residuals(lat, mult, &wx, &wz, &ws);
  bool ok2 = detail::is_residuable(lat, mult);
  if (r.has_value() != ok2)
    throw Error("internal: residuation criteria disagree");
  if (!r) {
    std::string side = ws == Side::Left ? "left" : "right";
    throw NotResiduated("multiplication has no " + side + " residual at (" +
                            lat.name(wx) + ", " + lat.name(wz) + ")",
                        wx, wz, ws);
  }
  return *r;
}

class ResiduatedBinar {
 public:
  static ResiduatedBinar from_mult(Lattice lat, Table mult) {
    if (mult.size() != static_cast<std::size_t>(lat.size()) * lat.size())
      throw FileFormatError("multiplication table size mismatch");
    for (std::uint8_t v : mult)
      if (v >= lat.size()) throw FileFormatError("multiplication table entry out of range");
    Residuals r = derive_residuals(lat, mult);
    return ResiduatedBinar(std::move(lat), std::move(mult), std::move(r));
  }

  const Lattice& lattice() const { return lat_; }
  int size() const { return lat_.size(); }

  int mult(int x, int y) const { return mult_[x * lat_.size() + y]; }
  int ldiv(int x, int z) const { return ldiv_[x * lat_.size() + z]; }
  int rdiv(int z, int y) const { return rdiv_[z * lat_.size() + y]; }

  const Table& mult_table() const { return mult_; }
  const Table& ldiv_table() const { return ldiv_; }
  const Table& rdiv_table() const { return rdiv_; }

  // Two-sided unit, if the multiplication has one.
  std::optional<int> unit() const { return unit_; }

  bool operator==(const ResiduatedBinar& o) const {
    return lat_ == o.lat_ && mult_ == o.mult_;
  }

 private:
  ResiduatedBinar(Lattice lat, Table mult, Residuals r)
      : lat_(std::move(lat)),
        mult_(std::move(mult)),
        ldiv_(std::move(r.ldiv)),
        rdiv_(std::move(r.rdiv)) {
    const int n = lat_.size();
    for (int e = 0; e < n; ++e) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x)
        ok = mult_[e * n + x] == x && mult_[x * n + e] == x;
      if (ok) {
        unit_ = e;
        break;
      }
    }
  }

  Lattice lat_;
  Table mult_, ldiv_, rdiv_;
  std::optional<int> unit_;
};

struct StructureFlags {
  bool distributive = false;
  bool complemented = false;
  bool boolean = false;
  bool associative = false;
  bool commutative = false;
  bool unital = false;
  bool integral = false;  // unital with unit = top
};

inline StructureFlags algebra_predicates(const ResiduatedBinar& a) {
  StructureFlags f;
  const Lattice& lat = a.lattice();
  f.distributive = lat.is_distributive();
  f.complemented = lat.is_complemented();
  f.boolean = lat.is_boolean();
  const int n = lat.size();
  f.commutative = true;
  for (int x = 0; x < n && f.commutative; ++x)
    for (int y = x + 1; y < n; ++y)
      if (a.mult(x, y) != a.mult(y, x)) {
        f.commutative = false;
        break;
      }
  f.associative = true;
  for (int x = 0; x < n && f.associative; ++x)
    for (int y = 0; y < n && f.associative; ++y)
      for (int z = 0; z < n; ++z)
        if (a.mult(a.mult(x, y), z) != a.mult(x, a.mult(y, z))) {
          f.associative = false;
          break;
        }
  f.unital = a.unit().has_value();
  f.integral = f.unital && *a.unit() == lat.top();
  return f;
}

// Mirror image: same lattice, multiplication transposed.  Residuals swap
// roles: x \' z = z / x and z /' y = y \ z.
inline ResiduatedBinar opposite_algebra(const ResiduatedBinar& a) {
  const int n = a.size();
  Table t(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x * n + y] = static_cast<std::uint8_t>(a.mult(y, x));
  return ResiduatedBinar::from_mult(a.lattice(), std::move(t));
}

}  // namespace resbinar
