#include "detlab/modp.hpp"

#include <algorithm>

namespace detlab {

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    if (a % p == 0) throw DomainError("inverse of zero mod p");
    return pow(a, p - 2);
}

std::uint64_t PrimeField::from_mpz(const mpz_class& z) const {
    mpz_class r;
    mpz_class pp;
    mpz_import(pp.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
    mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), pp.get_mpz_t());
    std::uint64_t out = 0;
    std::size_t count = 0;
    mpz_export(&out, &count, 1, sizeof(out), 0, 0, r.get_mpz_t());
    return out;
}

std::uint64_t PrimeField::from_mpq(const mpq_class& q) const {
    std::uint64_t d = from_mpz(q.get_den());
    if (d == 0) throw PrimeRetryError("denominator divisible by the chosen prime");
    return mul(from_mpz(q.get_num()), inv(d));
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    PrimeField F{n};
    // these bases are deterministic for all 64-bit n
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = F.pow(a, d);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = F.mul(x, x);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t random_prime(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(std::uint64_t{1} << 61,
                                                      (std::uint64_t{1} << 62) - 1);
    for (;;) {
        std::uint64_t c = dist(rng) | 1;
        if (is_prime_u64(c)) return c;
    }
}

std::uint64_t evaluate_mod_p(const Polynomial& p, const std::vector<std::uint64_t>& point,
                             std::uint64_t prime) {
    if (point.size() != p.nvars()) throw DomainError("evaluate_mod_p: point length mismatch");
    PrimeField F{prime};
    std::uint64_t acc = 0;
    for (const auto& t : p.terms()) {
        std::uint64_t v = F.from_mpq(t.coeff);
        for (std::size_t i = 0; i < t.mono.size() && v; ++i)
            if (t.mono[i]) v = F.mul(v, F.pow(point[i], t.mono[i]));
        acc = F.add(acc, v);
    }
    return acc;
}

mpq_class evaluate_exact(const Polynomial& p, const std::vector<mpq_class>& point) {
    if (point.size() != p.nvars()) throw DomainError("evaluate_exact: point length mismatch");
    mpq_class acc = 0;
    mpq_class pw;
    for (const auto& t : p.terms()) {
        mpq_class v = t.coeff;
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            if (!t.mono[i]) continue;
            mpz_pow_ui(pw.get_num_mpz_t(), point[i].get_num_mpz_t(), t.mono[i]);
            mpz_pow_ui(pw.get_den_mpz_t(), point[i].get_den_mpz_t(), t.mono[i]);
            v *= pw;
        }
        acc += v;
    }
    return acc;
}

std::size_t rank_mod_p(ModMatrix a, const PrimeField& F) {
    std::size_t rows = a.size();
    if (!rows) return 0;
    std::size_t cols = a[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        std::uint64_t inv = F.inv(a[rank][c]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (!a[r][c]) continue;
            std::uint64_t f = F.mul(a[r][c], inv);
            for (std::size_t k = c; k < cols; ++k)
                if (a[rank][k]) a[r][k] = F.sub(a[r][k], F.mul(f, a[rank][k]));
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_exact(QMatrix a) {
    std::size_t rows = a.size();
    if (!rows) return 0;
    std::size_t cols = a[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (a[r][c] == 0) continue;
            mpq_class f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < cols; ++k)
                if (a[rank][k] != 0) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

ModMatrix evaluate_grid_mod_p(const PolyGrid& g, const std::vector<std::uint64_t>& point,
                              std::uint64_t prime) {
    ModMatrix out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        out[i].reserve(g[i].size());
        for (const auto& e : g[i]) out[i].push_back(evaluate_mod_p(e, point, prime));
    }
    return out;
}

QMatrix evaluate_grid_exact(const PolyGrid& g, const std::vector<mpq_class>& point) {
    QMatrix out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        out[i].reserve(g[i].size());
        for (const auto& e : g[i]) out[i].push_back(evaluate_exact(e, point));
    }
    return out;
}

std::string to_string(Certification c) {
    return c == Certification::Exact ? "exact" : "probabilistic";
}

namespace {

std::size_t grid_nvars(const PolyGrid& g) {
    for (const auto& row : g)
        for (const auto& e : row)
            if (e.context()) return e.nvars();
    return 0;
}

}  // namespace

RankCertificate certify_rank(const PolyGrid& g, const RankOptions& opts) {
    RankCertificate cert;
    std::mt19937_64 rng(opts.seed);
    const std::size_t n = grid_nvars(g);
    std::size_t next_explicit = 0;
    std::size_t best = 0, hits = 0;

    for (std::size_t trial = 0; trial < opts.max_trials; ++trial) {
        std::uint64_t prime = next_explicit < opts.primes.size() ? opts.primes[next_explicit++]
                                                                 : random_prime(rng);
        std::uniform_int_distribution<std::uint64_t> coord(1, prime - 1);
        std::vector<std::uint64_t> point(n);
        for (auto& x : point) x = coord(rng);
        std::size_t r;
        try {
            r = rank_mod_p(evaluate_grid_mod_p(g, point, prime), PrimeField{prime});
        } catch (const PrimeRetryError&) {
            continue;
        }
        cert.trials.push_back({prime, r});
        if (r > best) {
            best = r;
            hits = 1;
        } else if (r == best) {
            ++hits;
        }
        if (hits >= 2) break;
    }
    cert.rank = best;
    cert.method = "prime-field evaluation, two-trial agreement";
    if (hits < 2) cert.method += " (agreement not reached; maximum reported)";

    if (opts.exact) {
        // integer points from a small box; the rank there bounds the generic rank from below
        std::uniform_int_distribution<int> small(-97, 97);
        for (int attempt = 0; attempt < 3; ++attempt) {
            std::vector<mpq_class> point(n);
            for (auto& x : point) x = small(rng);
            std::size_t r = rank_exact(evaluate_grid_exact(g, point));
            if (!cert.exact_lower || r > *cert.exact_lower) cert.exact_lower = r;
            if (opts.upper_bound && r >= *opts.upper_bound) break;
        }
        if (opts.upper_bound) cert.exact_upper = opts.upper_bound;
        if (cert.exact_lower && cert.exact_upper && *cert.exact_lower == *cert.exact_upper) {
            if (hits >= 2 && cert.rank != *cert.exact_lower)
                throw Error("internal: exact rank disagrees with prime-field rank");
            cert.rank = *cert.exact_lower;
            cert.certification = Certification::Exact;
            cert.method = "exact: rational evaluation lower bound meets " +
                          (opts.upper_bound_reason.empty() ? std::string("upper bound")
                                                           : opts.upper_bound_reason);
        }
    }
    return cert;
}

}  // namespace detlab
