#pragma once

// Integer-coefficient polynomial helpers shared by the resultant and the
// Zassenhaus machinery. Not part of the public surface.

#include <optional>
#include <vector>

#include "nonisog/rational.hpp"

namespace nonisog::detail {

using ZPoly = std::vector<Integer>;  // index = degree, no trailing zeros

void trim(ZPoly& f);
inline int deg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }
inline const Integer& lc(const ZPoly& f) { return f.back(); }

ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly scale(const ZPoly& a, const Integer& c);
/// Exact division of every coefficient by c.
ZPoly divexact(const ZPoly& a, const Integer& c);

Integer content(const ZPoly& f);  // nonnegative
ZPoly primitive(const ZPoly& f);  // sign kept

/// lc(b)^(deg a - deg b + 1) * a mod b.
ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b);

/// Quotient if b divides a exactly over Z, otherwise nullopt.
std::optional<ZPoly> exact_quotient(const ZPoly& a, const ZPoly& b);

/// Coefficients reduced into (-m/2, m/2].
ZPoly symmetric_mod(const ZPoly& a, const Integer& m);
/// Coefficients reduced into [0, m).
ZPoly reduce_mod(const ZPoly& a, const Integer& m);
ZPoly mul_mod(const ZPoly& a, const ZPoly& b, const Integer& m);

struct ZDivMod {
  ZPoly quotient;
  ZPoly remainder;
};
/// Division by a monic (mod m) polynomial b, everything reduced into [0, m).
ZDivMod divmod_monic_mod(const ZPoly& a, const ZPoly& b, const Integer& m);

/// Subresultant PRS resultant.
Integer subresultant(ZPoly a, ZPoly b);

}  // namespace nonisog::detail
