#pragma once

// Prime-filter frames of algebras with a distributive lattice reduct, the
// ternary relation R built from complex products of filters, and the three
// first-order conditions matching the laws jr, ml, lj.
//
// The defining containment "F <= G*H" can be read three ways, so the
// relation is a selectable variant:
//   literal   F is contained in the raw product set {g*h : g in G, h in H}
//   upset     F is contained in the upward closure of that set
//   superset  the product set is contained in F
// Under literal and upset the frame order is filter inclusion; under
// superset it is reverse inclusion (the lattice order of the generators).
// Each choice makes R antitone in its first and isotone in its other two
// coordinates, which is asserted after construction. Calibration against
// algebra-level truth picks the variant that actually corresponds.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "resbinar/algebra.hpp"
#include "resbinar/errors.hpp"
#include "resbinar/lattice.hpp"
#include "resbinar/laws.hpp"

namespace resbinar {

enum class FrameVariant { Literal, Upset, Superset };

inline const char* variant_name(FrameVariant v) {
  switch (v) {
    case FrameVariant::Literal: return "literal";
    case FrameVariant::Upset: return "upset";
    case FrameVariant::Superset: return "superset";
  }
  return "?";
}

inline std::optional<FrameVariant> variant_from_name(std::string_view s) {
  if (s == "literal") return FrameVariant::Literal;
  if (s == "upset") return FrameVariant::Upset;
  if (s == "superset") return FrameVariant::Superset;
  return std::nullopt;
}

// All prime filters, as element masks in ascending mask order. Two
// computations run every time: a scan over all subsets, and the principal
// filters of the join-irreducibles. They must agree.
inline std::vector<Mask> prime_filters(const Lattice& lat) {
  if (!lat.is_distributive()) throw NotDistributive();
  const int n = lat.size();
  std::vector<Mask> scan;
  for (std::uint64_t bits = 1; bits < (std::uint64_t(1) << n); ++bits) {
    const Mask f = static_cast<Mask>(bits);
    if (f == lat.all_mask()) continue;  // proper
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      if (!(f & (Mask(1) << x))) continue;
      if ((lat.up_mask(x) & ~f) != 0) ok = false;  // upward closed
      for (int y = x; y < n && ok; ++y)
        if ((f & (Mask(1) << y)) && !(f & (Mask(1) << lat.meet(x, y))))
          ok = false;  // meet closed
    }
    for (int x = 0; x < n && ok; ++x)
      for (int y = x; y < n && ok; ++y)
        if ((f & (Mask(1) << lat.join(x, y))) && !(f & (Mask(1) << x)) &&
            !(f & (Mask(1) << y)))
          ok = false;  // prime
    if (ok) scan.push_back(f);
  }
  std::vector<Mask> principal;
  for (int j : lat.join_irreducibles()) principal.push_back(lat.up_mask(j));
  std::sort(scan.begin(), scan.end());
  std::sort(principal.begin(), principal.end());
  if (scan != principal)
    throw Error("internal: prime filter scan disagrees with join-irreducibles");
  return scan;
}

struct Frame {
  FrameVariant variant = FrameVariant::Literal;
  int n_points = 0;
  std::vector<Mask> points;     // filters as element masks, ascending
  std::vector<int> generators;  // least element of each filter
  std::vector<char> order;      // frame order, row-major n_points^2
  std::vector<char> rel;        // R, n_points^3

  bool leq(int i, int j) const {
    return order[static_cast<std::size_t>(i) * n_points + j] != 0;
  }
  bool r(int f, int g, int h) const {
    return rel[(static_cast<std::size_t>(f) * n_points + g) * n_points + h] != 0;
  }
};

inline Frame build_frame(const ResiduatedBinar& alg,
                         FrameVariant v = FrameVariant::Literal) {
  const Lattice& lat = alg.lattice();
  Frame fr;
  fr.variant = v;
  fr.points = prime_filters(lat);
  const int P = static_cast<int>(fr.points.size());
  fr.n_points = P;
  for (Mask f : fr.points) fr.generators.push_back(lat.meet_of(f));

  fr.order.assign(static_cast<std::size_t>(P) * P, 0);
  for (int i = 0; i < P; ++i)
    for (int j = 0; j < P; ++j) {
      const bool included = (fr.points[i] & ~fr.points[j]) == 0;
      const bool reverse = (fr.points[j] & ~fr.points[i]) == 0;
      fr.order[static_cast<std::size_t>(i) * P + j] =
          v == FrameVariant::Superset ? reverse : included;
    }

  fr.rel.assign(static_cast<std::size_t>(P) * P * P, 0);
  for (int g = 0; g < P; ++g)
    for (int h = 0; h < P; ++h) {
      Mask image = 0;
      for (Mask gm = fr.points[g]; gm;) {
        const int x = lowest_bit(gm);
        gm &= gm - 1;
        for (Mask hm = fr.points[h]; hm;) {
          const int y = lowest_bit(hm);
          hm &= hm - 1;
          image |= Mask(1) << alg.mult(x, y);
        }
      }
      Mask up_image = 0;
      for (Mask m = image; m;) {
        const int s = lowest_bit(m);
        m &= m - 1;
        up_image |= lat.up_mask(s);
      }
      for (int f = 0; f < P; ++f) {
        bool related = false;
        switch (v) {
          case FrameVariant::Literal:
            related = (fr.points[f] & ~image) == 0;
            break;
          case FrameVariant::Upset:
            related = (fr.points[f] & ~up_image) == 0;
            break;
          case FrameVariant::Superset:
            related = (image & ~fr.points[f]) == 0;
            break;
        }
        fr.rel[(static_cast<std::size_t>(f) * P + g) * P + h] = related;
      }
    }

  // antitone in the first coordinate, isotone in the other two
  for (int a = 0; a < P; ++a)
    for (int b = 0; b < P; ++b)
      for (int c = 0; c < P; ++c) {
        if (!fr.r(a, b, c)) continue;
        for (int d = 0; d < P; ++d) {
          if (fr.leq(d, a) && !fr.r(d, b, c))
            throw MonotonicityViolation(
                std::string("R not antitone in first coordinate (") +
                variant_name(v) + ")");
          if (fr.leq(b, d) && !fr.r(a, d, c))
            throw MonotonicityViolation(
                std::string("R not isotone in second coordinate (") +
                variant_name(v) + ")");
          if (fr.leq(c, d) && !fr.r(a, b, d))
            throw MonotonicityViolation(
                std::string("R not isotone in third coordinate (") +
                variant_name(v) + ")");
        }
      }
  return fr;
}

// "{a,top}" style rendering of a point's member set.
inline std::string point_label(const Frame& fr, const Lattice& lat, int i) {
  std::string out = "{";
  for (Mask m = fr.points[static_cast<std::size_t>(i)]; m;) {
    const int x = lowest_bit(m);
    m &= m - 1;
    if (out.size() > 1) out += ',';
    out += lat.name(x);
  }
  out += '}';
  return out;
}

struct FrameConditionResult {
  bool holds = true;
  std::array<int, 5> witness{};  // x, y, p, q, j when failing
};

// The first-order condition matching the law on the algebra side. Only jr,
// ml and lj have one. The witness is the first failing (x,y,p,q,j).
inline FrameConditionResult frame_condition(const Frame& fr, Law which) {
  if (which != Law::jr && which != Law::ml && which != Law::lj)
    throw UnsupportedLaw(std::string("law ") + law_info(which).tag +
                         " has no frame condition");
  const int P = fr.n_points;
  for (int x = 0; x < P; ++x)
    for (int y = 0; y < P; ++y)
      for (int p = 0; p < P; ++p)
        for (int q = 0; q < P; ++q)
          for (int j = 0; j < P; ++j) {
            bool premise = false;
            switch (which) {
              case Law::jr: premise = fr.r(x, j, p) && fr.r(y, j, q); break;
              case Law::ml: premise = fr.r(p, x, j) && fr.r(q, y, j); break;
              default: premise = fr.r(x, p, j) && fr.r(y, q, j); break;
            }
            if (!premise) continue;
            bool found = false;
            for (int z = 0; z < P && !found; ++z) {
              switch (which) {
                case Law::jr:
                  found = fr.leq(x, z) && fr.leq(y, z) &&
                          (fr.r(z, j, p) || fr.r(z, j, q));
                  break;
                case Law::ml:
                  found = fr.leq(z, x) && fr.leq(z, y) &&
                          (fr.r(p, z, j) || fr.r(q, z, j));
                  break;
                default:
                  found = fr.leq(x, z) && fr.leq(y, z) &&
                          (fr.r(z, p, j) || fr.r(z, q, j));
                  break;
              }
            }
            if (!found) return {false, {x, y, p, q, j}};
          }
  return {};
}

struct CorrespondenceEntry {
  Law law;
  bool algebra_holds = false;
  bool frame_holds = false;
  bool agree = false;
};

struct CorrespondenceReport {
  FrameVariant variant = FrameVariant::Literal;
  std::array<CorrespondenceEntry, 3> entries{};
  bool all_agree = true;
};

inline CorrespondenceReport correspondence_check(const ResiduatedBinar& alg,
                                                 FrameVariant v) {
  const Frame fr = build_frame(alg, v);
  CorrespondenceReport rep;
  rep.variant = v;
  const Law laws[3] = {Law::jr, Law::ml, Law::lj};
  for (int i = 0; i < 3; ++i) {
    CorrespondenceEntry& e = rep.entries[static_cast<std::size_t>(i)];
    e.law = laws[i];
    e.algebra_holds = check_law(laws[i], alg) == LawStatus::Holds;
    e.frame_holds = frame_condition(fr, laws[i]).holds;
    e.agree = e.algebra_holds == e.frame_holds;
    if (!e.agree) rep.all_agree = false;
  }
  return rep;
}

struct CalibrationOutcome {
  std::array<long, 3> disagreements{};  // indexed by FrameVariant value
  long algebras = 0;
  std::optional<FrameVariant> chosen;
};

// Runs the correspondence under every variant over a sample of algebras
// with distributive reducts and picks the variant, if any, that never
// disagrees with algebra-level truth.
inline CalibrationOutcome calibrate_variant(
    const std::vector<ResiduatedBinar>& sample) {
  CalibrationOutcome out;
  const FrameVariant variants[3] = {FrameVariant::Literal, FrameVariant::Upset,
                                    FrameVariant::Superset};
  for (const ResiduatedBinar& alg : sample) {
    if (!alg.lattice().is_distributive()) continue;
    ++out.algebras;
    for (FrameVariant v : variants) {
      const auto rep = correspondence_check(alg, v);
      for (const auto& e : rep.entries)
        if (!e.agree) ++out.disagreements[static_cast<std::size_t>(v)];
    }
  }
  for (FrameVariant v : variants)
    if (out.disagreements[static_cast<std::size_t>(v)] == 0) {
      out.chosen = v;
      break;
    }
  return out;
}

}  // namespace resbinar
