#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace powsec {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

/// Deterministic Miller-Rabin, valid for all 64-bit inputs with this base set.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

}  // namespace detail

/// The prime field F_p arithmetic context. Primality is checked at
/// construction; the default modulus is the Mersenne prime 2^31 - 1.
/// Residues live in [0, p) inside 64-bit words and products go through a
/// 128-bit intermediate, so no modulus below 2^63 can overflow.
class PrimeField {
public:
    static constexpr std::uint64_t kDefaultPrime = 2147483647ull;  // 2^31 - 1

    explicit PrimeField(std::uint64_t p = kDefaultPrime) : p_(p) {
        if (p >= (1ull << 63)) throw std::invalid_argument("PrimeField: modulus must be < 2^63");
        if (!detail::is_prime_u64(p)) throw std::invalid_argument("PrimeField: modulus is not prime");
    }

    std::uint64_t p() const { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return detail::mulmod_u64(a, b, p_); }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const { return detail::powmod_u64(a, e, p_); }

    std::uint64_t inv(std::uint64_t a) const {
        if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
        return pow(a, p_ - 2);
    }

    /// Reduce an arbitrary-precision integer (possibly negative).
    std::uint64_t reduce(const mpz_class& v) const {
        mpz_class m = v % static_cast<unsigned long>(p_);
        if (m < 0) m += static_cast<unsigned long>(p_);
        return m.get_ui();
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint64_t p_;
};

/// Deterministic splitmix64 stream. Every random choice in the library
/// flows from one of these, seeded from the caller's seed, so identical
/// seeds give identical certificates.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform residue in [0, p) by rejection sampling.
    std::uint64_t below(std::uint64_t p) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % p;
        std::uint64_t v;
        do { v = next(); } while (v >= limit);
        return v % p;
    }

    /// Stable derived stream: component `salt` of the stream seeded `seed`.
    static Rng derived(std::uint64_t seed, std::uint64_t salt) {
        Rng mix(seed ^ (0xd1b54a32d192ed03ull * (salt + 1)));
        return Rng(mix.next());
    }

private:
    std::uint64_t state_;
};

/// v residues drawn uniformly from [0, p), a deterministic function of the
/// stream. Realizes "points in general position": a uniform random point is
/// general with probability 1 - O(1/p), and any generality failure is caught
/// downstream as a rank shortfall, never as a wrong certificate.
inline std::vector<std::uint64_t> random_point(Rng& rng, const PrimeField& f, std::size_t v) {
    std::vector<std::uint64_t> out(v);
    for (auto& x : out) x = rng.below(f.p());
    return out;
}

/// Random point with at least one nonzero coordinate (a projective point).
inline std::vector<std::uint64_t> random_projective_point(Rng& rng, const PrimeField& f, std::size_t v) {
    for (;;) {
        auto q = random_point(rng, f, v);
        for (auto x : q)
            if (x != 0) return q;
    }
}

}  // namespace powsec
