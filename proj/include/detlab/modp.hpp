#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "detlab/poly.hpp"

namespace detlab {

// Arithmetic in Z/p for odd primes below 2^63.
struct PrimeField {
    std::uint64_t p;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p - b; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
    }
    std::uint64_t neg(std::uint64_t a) const { return a ? p - a : 0; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;  // DomainError on 0
    std::uint64_t from_mpz(const mpz_class& z) const;
    // PrimeRetryError when the denominator vanishes mod p.
    std::uint64_t from_mpq(const mpq_class& q) const;
};

bool is_prime_u64(std::uint64_t n);

// Uniform random prime in [2^61, 2^62).
std::uint64_t random_prime(std::mt19937_64& rng);

std::uint64_t evaluate_mod_p(const Polynomial& p, const std::vector<std::uint64_t>& point,
                             std::uint64_t prime);

using ModMatrix = std::vector<std::vector<std::uint64_t>>;
using PolyGrid = std::vector<std::vector<Polynomial>>;
using QMatrix = std::vector<std::vector<mpq_class>>;

std::size_t rank_mod_p(ModMatrix a, const PrimeField& F);
std::size_t rank_exact(QMatrix a);

ModMatrix evaluate_grid_mod_p(const PolyGrid& g, const std::vector<std::uint64_t>& point,
                              std::uint64_t prime);
QMatrix evaluate_grid_exact(const PolyGrid& g, const std::vector<mpq_class>& point);

mpq_class evaluate_exact(const Polynomial& p, const std::vector<mpq_class>& point);

enum class Certification { Exact, Probabilistic };
std::string to_string(Certification c);

struct RankTrial {
    std::uint64_t prime;
    std::size_t rank;
};

// Result of the rank protocol.  `rank` is the accepted value; `trials` lists the
// prime-field evaluations; `exact_lower`/`exact_upper` are filled when an exact
// argument was available.  `certification` is Exact only when both exact bounds meet.
struct RankCertificate {
    std::size_t rank = 0;
    Certification certification = Certification::Probabilistic;
    std::vector<RankTrial> trials;
    std::optional<std::size_t> exact_lower;
    std::optional<std::size_t> exact_upper;
    std::string method;
};

struct RankOptions {
    std::uint64_t seed = 1;
    std::vector<std::uint64_t> primes;  // explicit primes consumed before random ones
    std::size_t max_trials = 8;
    // Exact path: rank at an integer point is an exact lower bound; combined with a
    // proven upper bound it settles the rank.
    bool exact = false;
    std::optional<std::size_t> upper_bound;
    std::string upper_bound_reason;
};

// Two-trial agreement protocol over random 62-bit primes, optionally upgraded to an
// exact certificate.  Each trial evaluates the grid at a fresh random point; the
// maximum observed rank is accepted once two independent trials attain it.
RankCertificate certify_rank(const PolyGrid& g, const RankOptions& opts);

}  // namespace detlab
