#include "susp/detail/zpoly.hpp"

#include "susp/error.hpp"

#include <algorithm>
#include <random>
#include <tuple>

namespace susp::detail {

void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly zadd(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    ztrim(r);
    return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    ztrim(r);
    return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    ztrim(r);
    return r;
}

ZPoly zscale(const ZPoly& a, const Integer& c) {
    if (c == 0) return {};
    ZPoly r(a);
    for (auto& x : r) x *= c;
    return r;
}

ZPoly zderiv(const ZPoly& a) {
    if (a.size() <= 1) return {};
    ZPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<unsigned long>(i);
    ztrim(r);
    return r;
}

Integer zcontent(const ZPoly& a) {
    Integer g = 0;
    for (const auto& c : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly zprimitive(const ZPoly& a) {
    if (a.empty()) return a;
    Integer c = zcontent(a);
    if (a.back() < 0) c = -c;
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) mpz_divexact(r[i].get_mpz_t(), a[i].get_mpz_t(), c.get_mpz_t());
    return r;
}

std::optional<ZPoly> zexact_div(const ZPoly& a, const ZPoly& b) {
    if (b.empty()) throw Error(ErrorCode::DivisionByZero, "division by zero polynomial");
    if (a.empty()) return ZPoly{};
    if (a.size() < b.size()) return std::nullopt;
    if (a[0] != 0 && b[0] != 0 && !mpz_divisible_p(a[0].get_mpz_t(), b[0].get_mpz_t())) return std::nullopt;
    ZPoly rem = a;
    ZPoly q(a.size() - b.size() + 1);
    const Integer& lb = b.back();
    for (int k = zdeg(a) - zdeg(b); k >= 0; --k) {
        Integer& top = rem[k + b.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
        Integer c;
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] -= c * b[j];
        q[k] = c;
    }
    ztrim(rem);
    if (!rem.empty()) return std::nullopt;
    ztrim(q);
    return q;
}

namespace {

ZPoly zprem(ZPoly a, const ZPoly& b) {
    const Integer& lb = b.back();
    int delta = zdeg(a) - zdeg(b) + 1;
    while (!a.empty() && zdeg(a) >= zdeg(b)) {
        Integer la = a.back();
        int shift = zdeg(a) - zdeg(b);
        for (auto& c : a) c *= lb;
        for (int k = 0; k <= zdeg(b); ++k) a[k + shift] -= la * b[k];
        ztrim(a);
        --delta;
    }
    if (delta > 0) {
        Integer f;
        mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(delta));
        for (auto& c : a) c *= f;
    }
    return a;
}

Integer ipow(const Integer& b, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

}  // namespace

ZPoly zgcd(const ZPoly& a0, const ZPoly& b0) {
    if (a0.empty()) return zprimitive(b0);
    if (b0.empty()) return zprimitive(a0);
    Integer cont;
    mpz_gcd(cont.get_mpz_t(), zcontent(a0).get_mpz_t(), zcontent(b0).get_mpz_t());
    ZPoly a = zprimitive(a0);
    ZPoly b = zprimitive(b0);
    if (zdeg(a) < zdeg(b)) std::swap(a, b);
    if (zdeg(b) == 0) return ZPoly{Integer(1)};
    Integer g = 1, h = 1;
    while (true) {
        int d = zdeg(a) - zdeg(b);
        ZPoly r = zprem(a, b);
        if (r.empty()) break;
        if (zdeg(r) == 0) return ZPoly{Integer(1)};
        a = std::move(b);
        Integer divisor = g * ipow(h, static_cast<unsigned long>(d));
        for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
        b = std::move(r);
        g = a.back();
        if (d > 0) {
            Integer num = ipow(g, static_cast<unsigned long>(d));
            Integer den = ipow(h, static_cast<unsigned long>(d - 1));
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
    }
    return zprimitive(b);
}

std::vector<std::pair<ZPoly, unsigned>> zsquarefree(const ZPoly& f) {
    std::vector<std::pair<ZPoly, unsigned>> out;
    if (zdeg(f) <= 0) return out;
    ZPoly fp = zderiv(f);
    ZPoly c = zgcd(f, fp);
    ZPoly w = *zexact_div(f, c);
    unsigned i = 1;
    // Musser's algorithm: w collects the factors of multiplicity >= i.
    while (zdeg(c) > 0) {
        ZPoly y = zgcd(w, c);
        ZPoly z = *zexact_div(w, y);
        if (zdeg(z) > 0) out.emplace_back(zprimitive(z), i);
        ++i;
        w = std::move(y);
        c = *zexact_div(c, w);
    }
    if (zdeg(w) > 0) out.emplace_back(zprimitive(w), i);
    return out;
}

bool is_small_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// F_p arithmetic

std::uint64_t Fp::inv(std::uint64_t a) const {
    std::uint64_t r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

void Fp::trim(FpPoly& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly Fp::reduce(const ZPoly& a) const {
    FpPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = mpz_fdiv_ui(a[i].get_mpz_t(), static_cast<unsigned long>(p));
    }
    trim(r);
    return r;
}

FpPoly Fp::sub(const FpPoly& a, const FpPoly& b) const {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
    trim(r);
    return r;
}

FpPoly Fp::mul(const FpPoly& a, const FpPoly& b) const {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
}

std::pair<FpPoly, FpPoly> Fp::divrem(const FpPoly& a, const FpPoly& b) const {
    if (b.empty()) throw Error(ErrorCode::DivisionByZero, "division by zero polynomial mod p");
    if (a.size() < b.size()) return {FpPoly{}, a};
    FpPoly r = a;
    FpPoly q(a.size() - b.size() + 1, 0);
    std::uint64_t lead_inv = inv(b.back());
    for (std::size_t k = q.size(); k-- > 0;) {
        std::uint64_t c = mul(r[k + b.size() - 1], lead_inv);
        q[k] = c;
        if (!c) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = sub(r[k + j], mul(c, b[j]));
    }
    trim(q);
    trim(r);
    return {q, r};
}

FpPoly Fp::monic(const FpPoly& a) const {
    if (a.empty()) return a;
    std::uint64_t li = inv(a.back());
    FpPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul(a[i], li);
    return r;
}

FpPoly Fp::gcd(FpPoly a, FpPoly b) const {
    while (!b.empty()) {
        FpPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

std::tuple<FpPoly, FpPoly, FpPoly> Fp::ext_gcd(const FpPoly& a, const FpPoly& b) const {
    FpPoly r0 = a, r1 = b;
    FpPoly s0{1}, s1{};
    FpPoly t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = divrem(r0, r1);
        FpPoly s2 = sub(s0, mul(q, s1));
        FpPoly t2 = sub(t0, mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    std::uint64_t li = inv(r0.back());
    auto scale = [&](FpPoly v) {
        for (auto& c : v) c = mul(c, li);
        trim(v);
        return v;
    };
    return {scale(r0), scale(s0), scale(t0)};
}

FpPoly Fp::powmod(const FpPoly& base, const Integer& e, const FpPoly& mod) const {
    FpPoly result{1};
    result = rem(result, mod);
    FpPoly b = rem(base, mod);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = rem(mul(result, result), mod);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b), mod);
    }
    return result;
}

FpPoly Fp::deriv(const FpPoly& a) const {
    if (a.size() <= 1) return {};
    FpPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], i % p);
    trim(r);
    return r;
}

namespace {

void equal_degree_split(const Fp& F, const FpPoly& h, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
    if (static_cast<int>(h.size()) - 1 == d) {
        out.push_back(h);
        return;
    }
    Integer e;
    mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(F.p), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    std::uniform_int_distribution<std::uint64_t> coeff(0, F.p - 1);
    while (true) {
        FpPoly a(h.size() - 1);
        for (auto& c : a) c = coeff(rng);
        F.trim(a);
        if (a.size() <= 1) continue;
        FpPoly b = F.powmod(a, e, h);
        b = F.sub(b, FpPoly{1});
        FpPoly g = F.gcd(h, b);
        int dg = static_cast<int>(g.size()) - 1;
        if (dg > 0 && dg < static_cast<int>(h.size()) - 1) {
            equal_degree_split(F, g, d, rng, out);
            equal_degree_split(F, F.divrem(h, g).first, d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<FpPoly> Fp::factor_squarefree(const FpPoly& f0) const {
    std::vector<FpPoly> out;
    FpPoly f = monic(f0);
    if (f.size() <= 1) return out;
    // Fixed seed: factorizations are reproducible run to run.
    std::mt19937_64 rng(0x5eed5eedULL);
    FpPoly x{0, 1};
    FpPoly w = rem(x, f);
    for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
        w = powmod(w, Integer(static_cast<unsigned long>(p)), f);
        FpPoly g = gcd(f, sub(w, x));
        if (g.size() > 1) {
            equal_degree_split(*this, g, d, rng, out);
            f = divrem(f, g).first;
            w = rem(w, f);
        }
    }
    if (f.size() > 1) out.push_back(monic(f));
    return out;
}

// ---------------------------------------------------------------------------
// Hensel lifting over Z / m

namespace {

void zmod(ZPoly& a, const Integer& m) {
    for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    ztrim(a);
}

ZPoly zmul_mod(const ZPoly& a, const ZPoly& b, const Integer& m) {
    ZPoly r = zmul(a, b);
    zmod(r, m);
    return r;
}

// Division by a monic polynomial modulo m.
std::pair<ZPoly, ZPoly> zdivrem_monic(const ZPoly& a, const ZPoly& b, const Integer& m) {
    if (a.size() < b.size()) {
        ZPoly r = a;
        zmod(r, m);
        return {ZPoly{}, r};
    }
    ZPoly r = a;
    zmod(r, m);
    r.resize(a.size());
    ZPoly q(a.size() - b.size() + 1);
    for (std::size_t k = q.size(); k-- > 0;) {
        Integer c = r[k + b.size() - 1];
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        q[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[k + j] -= c * b[j];
            mpz_fdiv_r(r[k + j].get_mpz_t(), r[k + j].get_mpz_t(), m.get_mpz_t());
        }
    }
    ztrim(q);
    zmod(r, m);
    return {q, r};
}

ZPoly from_fp(const FpPoly& a) {
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = Integer(static_cast<unsigned long>(a[i]));
    ztrim(r);
    return r;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
    Integer r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t())) {
        throw Error(ErrorCode::ConsistencyError, "internal: leading coefficient not invertible mod p^k");
    }
    return r;
}

// Lifts f = lc * prod(factors) from mod p to mod p^(2^steps). f is given
// modulo the final modulus; factors are monic mod p. Returns monic lifts.
std::vector<ZPoly> multifactor_lift(const ZPoly& f, const std::vector<FpPoly>& factors, const Fp& F,
                                    int steps, const Integer& modulus) {
    if (factors.size() == 1) {
        ZPoly g = f;
        Integer li = inverse_mod(f.back(), modulus);
        for (auto& c : g) c *= li;
        zmod(g, modulus);
        return {g};
    }
    std::size_t half = factors.size() / 2;
    FpPoly g0{mpz_fdiv_ui(f.back().get_mpz_t(), static_cast<unsigned long>(F.p))};
    FpPoly h0{1};
    for (std::size_t i = 0; i < half; ++i) g0 = F.mul(g0, factors[i]);
    for (std::size_t i = half; i < factors.size(); ++i) h0 = F.mul(h0, factors[i]);
    auto [gcd, s0, t0] = F.ext_gcd(g0, h0);
    (void)gcd;
    ZPoly g = from_fp(g0), h = from_fp(h0), s = from_fp(s0), t = from_fp(t0);
    Integer m = Integer(static_cast<unsigned long>(F.p));
    for (int step = 0; step < steps; ++step) {
        Integer m2 = m * m;
        ZPoly e = zsub(f, zmul(g, h));
        zmod(e, m2);
        auto [q, r] = zdivrem_monic(zmul_mod(s, e, m2), h, m2);
        ZPoly g1 = zadd(zadd(g, zmul(t, e)), zmul(q, g));
        zmod(g1, m2);
        ZPoly h1 = zadd(h, r);
        zmod(h1, m2);
        ZPoly b = zsub(zadd(zmul(s, g1), zmul(t, h1)), ZPoly{Integer(1)});
        zmod(b, m2);
        auto [c, d] = zdivrem_monic(zmul_mod(s, b, m2), h1, m2);
        ZPoly s1 = zsub(s, d);
        zmod(s1, m2);
        ZPoly t1 = zsub(zsub(t, zmul(t, b)), zmul(c, g1));
        zmod(t1, m2);
        g = std::move(g1);
        h = std::move(h1);
        s = std::move(s1);
        t = std::move(t1);
        m = m2;
    }
    std::vector<FpPoly> left(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(half));
    std::vector<FpPoly> right(factors.begin() + static_cast<std::ptrdiff_t>(half), factors.end());
    auto out = multifactor_lift(g, left, F, steps, modulus);
    auto rhs = multifactor_lift(h, right, F, steps, modulus);
    out.insert(out.end(), rhs.begin(), rhs.end());
    return out;
}

ZPoly symmetric(ZPoly a, const Integer& m) {
    Integer half = m / 2;
    for (auto& c : a) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (c > half) c -= m;
    }
    ztrim(a);
    return a;
}

Integer isqrt_ceil(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    if (r * r < n) r += 1;
    return r;
}

// Advances the subset index vector to the next combination of the same size.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<ZPoly> zfactor_squarefree(const ZPoly& f0) {
    ZPoly f = zprimitive(f0);
    if (zdeg(f) <= 0) return {};
    if (zdeg(f) == 1) return {f};
    // Smallest good prime >= 13: keeps the degree and stays squarefree.
    std::uint64_t p = 13;
    Fp F{p};
    FpPoly fbar;
    for (;; ++p) {
        if (!is_small_prime(p)) continue;
        F = Fp{p};
        if (mpz_divisible_ui_p(f.back().get_mpz_t(), static_cast<unsigned long>(p))) continue;
        fbar = F.reduce(f);
        if (F.gcd(fbar, F.deriv(fbar)).size() == 1) break;
        if (p > 100000) throw Error(ErrorCode::ResourceLimit, "no suitable prime for modular factorization");
    }
    std::vector<FpPoly> modular = F.factor_squarefree(fbar);
    if (modular.size() == 1) return {f};

    // Any factor g of f satisfies |g|_inf <= 2^deg(f) * |f|_2; the recombined
    // candidates carry an extra factor lc(f).
    Integer norm2 = 0;
    for (const auto& c : f) norm2 += c * c;
    Integer bound;
    mpz_mul_2exp(bound.get_mpz_t(), isqrt_ceil(norm2).get_mpz_t(), static_cast<mp_bitcnt_t>(zdeg(f)));
    bound *= abs(f.back());
    bound = 2 * bound + 1;
    Integer modulus = Integer(static_cast<unsigned long>(p));
    int steps = 0;
    while (modulus <= bound) {
        modulus *= modulus;
        ++steps;
    }
    ZPoly fmod = f;
    zmod(fmod, modulus);
    std::vector<ZPoly> lifted = multifactor_lift(fmod, modular, F, steps, modulus);

    std::vector<ZPoly> result;
    std::size_t s = 1;
    while (2 * s <= lifted.size()) {
        bool found = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        do {
            ZPoly g{f.back()};
            for (auto i : idx) g = zmul_mod(g, lifted[i], modulus);
            g = zprimitive(symmetric(g, modulus));
            if (zdeg(g) <= 0 || zdeg(g) >= zdeg(f)) continue;
            auto q = zexact_div(f, g);
            if (!q) continue;
            result.push_back(g);
            f = zprimitive(*q);
            for (std::size_t k = idx.size(); k-- > 0;) lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(idx[k]));
            found = true;
            break;
        } while (next_combination(idx, lifted.size()));
        if (!found) ++s;
    }
    if (zdeg(f) > 0) result.push_back(f);
    return result;
}

std::vector<std::pair<ZPoly, unsigned>> zfactor(const ZPoly& f) {
    std::vector<std::pair<ZPoly, unsigned>> out;
    for (const auto& [part, mult] : zsquarefree(zprimitive(f))) {
        for (auto& g : zfactor_squarefree(part)) out.emplace_back(std::move(g), mult);
    }
    return out;
}

}  // namespace susp::detail
