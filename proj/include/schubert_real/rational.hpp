#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace schubert_real {

// Exact rational scalar. Canonical form (reduced fraction, positive
// denominator) is maintained by GMP for all arithmetic results.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Canonical "p/q" (or "p" when q = 1) decimal string.
inline std::string rational_str(const Rational& q) { return q.get_str(); }

// Parses a canonical "p/q" string. Rejects zero denominators and garbage;
// non-reduced input is canonicalized.
Rational parse_rational(const std::string& s);

std::vector<std::string> rational_strings(const std::vector<Rational>& v);
std::vector<Rational> parse_rationals(const std::vector<std::string>& v);

// Deterministic 64-bit PRNG (SplitMix64). Used everywhere seeded data is
// drawn so outputs are reproducible bit-for-bit across platforms; the C++
// standard distributions are not portable in that sense.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here, the
    // contract is determinism, not statistical quality.
    long next_in(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

  private:
    std::uint64_t state_;
};

// Derives the k-th child seed of a master seed (stable one-way schedule).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t k) {
    SplitMix64 rng(master ^ (0xa0761d6478bd642fULL + k));
    rng.next();
    return rng.next();
}

}  // namespace schubert_real
