#pragma once

#include "susp/numeric.hpp"

#include <cstdint>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

// Dense univariate helpers backing the factorization engine. Not part of the
// public surface.
namespace susp::detail {

// Entry k is the coefficient of x^k; no trailing zeros.
using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& a);
int zdeg(const ZPoly& a);
ZPoly zadd(const ZPoly& a, const ZPoly& b);
ZPoly zsub(const ZPoly& a, const ZPoly& b);
ZPoly zmul(const ZPoly& a, const ZPoly& b);
ZPoly zscale(const ZPoly& a, const Integer& c);
ZPoly zderiv(const ZPoly& a);
Integer zcontent(const ZPoly& a);
// Divides out the content and makes the leading coefficient positive.
ZPoly zprimitive(const ZPoly& a);
std::optional<ZPoly> zexact_div(const ZPoly& a, const ZPoly& b);
// Primitive gcd with positive leading coefficient.
ZPoly zgcd(const ZPoly& a, const ZPoly& b);

// Squarefree decomposition of a primitive polynomial: pairs (a_i, i) with
// f = prod a_i^i, every a_i squarefree, primitive, non-constant.
std::vector<std::pair<ZPoly, unsigned>> zsquarefree(const ZPoly& f);

// Irreducible factors over Z of a primitive squarefree polynomial of degree >= 1.
std::vector<ZPoly> zfactor_squarefree(const ZPoly& f);

// Full factorization of a primitive polynomial: irreducible primitive factors
// with multiplicities.
std::vector<std::pair<ZPoly, unsigned>> zfactor(const ZPoly& f);

// Polynomials over F_p, p < 2^31.
using FpPoly = std::vector<std::uint64_t>;

struct Fp {
    std::uint64_t p;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p; }
    std::uint64_t inv(std::uint64_t a) const;

    void trim(FpPoly& a) const;
    FpPoly reduce(const ZPoly& a) const;
    FpPoly sub(const FpPoly& a, const FpPoly& b) const;
    FpPoly mul(const FpPoly& a, const FpPoly& b) const;
    std::pair<FpPoly, FpPoly> divrem(const FpPoly& a, const FpPoly& b) const;
    FpPoly rem(const FpPoly& a, const FpPoly& b) const { return divrem(a, b).second; }
    FpPoly monic(const FpPoly& a) const;
    FpPoly gcd(FpPoly a, FpPoly b) const;
    // (g, s, t) with s*a + t*b = g monic.
    std::tuple<FpPoly, FpPoly, FpPoly> ext_gcd(const FpPoly& a, const FpPoly& b) const;
    FpPoly powmod(const FpPoly& base, const Integer& e, const FpPoly& mod) const;
    FpPoly deriv(const FpPoly& a) const;
    // Monic irreducible factors of a monic squarefree polynomial.
    std::vector<FpPoly> factor_squarefree(const FpPoly& f) const;
};

bool is_small_prime(std::uint64_t n);

}  // namespace susp::detail
