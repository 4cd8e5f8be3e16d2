#pragma once

// Dense polynomials over F_p with p < 2^31, coefficients low-to-high.

#include <cstdint>
#include <vector>

namespace weilzeta::detail {

using FpPoly = std::vector<std::uint64_t>;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

void trim(FpPoly& a);
FpPoly sub(const FpPoly& a, const FpPoly& b, std::uint64_t p);
/// Remainder of a modulo a monic or general nonzero b.
FpPoly rem(FpPoly a, const FpPoly& b, std::uint64_t p);
FpPoly mul(const FpPoly& a, const FpPoly& b, std::uint64_t p);
/// a*b reduced modulo the monic polynomial m.
FpPoly mul_reduce(const FpPoly& a, const FpPoly& b, const FpPoly& m, std::uint64_t p);
FpPoly pow_reduce(FpPoly base, std::uint64_t exponent, const FpPoly& m, std::uint64_t p);
FpPoly gcd(FpPoly a, FpPoly b, std::uint64_t p);

}  // namespace weilzeta::detail
