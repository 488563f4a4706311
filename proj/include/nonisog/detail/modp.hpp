#pragma once

// Arithmetic on dense F_p polynomials (p < 2^31) used by Berlekamp and Hensel.

#include <cstdint>
#include <vector>

namespace nonisog::detail {

using Fp = std::vector<std::uint64_t>;  // coefficients in [0, p), no trailing zeros

void trim(Fp& f);
inline int deg(const Fp& f) { return static_cast<int>(f.size()) - 1; }

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

Fp add(const Fp& a, const Fp& b, std::uint64_t p);
Fp sub(const Fp& a, const Fp& b, std::uint64_t p);
Fp mul(const Fp& a, const Fp& b, std::uint64_t p);
Fp scale(const Fp& a, std::uint64_t c, std::uint64_t p);
Fp monic(const Fp& a, std::uint64_t p);
Fp derivative(const Fp& a, std::uint64_t p);

struct FpDivMod {
  Fp quotient;
  Fp remainder;
};
FpDivMod divmod(const Fp& a, const Fp& b, std::uint64_t p);
Fp rem(const Fp& a, const Fp& b, std::uint64_t p);
Fp gcd(Fp a, Fp b, std::uint64_t p);  // monic

struct FpExtGcd {
  Fp gcd;
  Fp s;
  Fp t;  // s*a + t*b = gcd
};
FpExtGcd ext_gcd(const Fp& a, const Fp& b, std::uint64_t p);

/// base^e mod m.
Fp powmod(const Fp& base, std::uint64_t e, const Fp& m, std::uint64_t p);

inline bool is_one(const Fp& f) { return f.size() == 1 && f[0] == 1; }

}  // namespace nonisog::detail
