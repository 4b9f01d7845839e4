#include "narop/rank.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "narop/errors.hpp"

namespace narop {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kDefaultSeed = 0x6e61726f70726e67ULL;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

class PrimeSampler {
public:
    explicit PrimeSampler(u64 seed) : rng_(seed) {}

    u64 next_prime() {
        std::uniform_int_distribution<u64> dist(u64(1) << 62, (u64(1) << 63) - 1);
        for (;;) {
            u64 c = dist(rng_) | 1;
            Integer z(static_cast<unsigned long>(c));
            if (mpz_probab_prime_p(z.get_mpz_t(), 40) != 0) return c;
        }
    }

private:
    std::mt19937_64 rng_;
};

// ---- exact fraction-free elimination ----

using Row = std::vector<std::pair<long, Integer>>;

void normalize_row(Row& r) {
    if (r.empty()) return;
    Integer g(0);
    for (const auto& [c, v] : r) {
        g = gcd(g, v);
        if (g == 1) break;
    }
    if (g != 1)
        for (auto& [c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    if (sgn(r.front().second) < 0)
        for (auto& [c, v] : r) v = -v;
}

// r and piv share their leading column; returns (b/g) r - (a/g) piv with
// a = lead(r), b = lead(piv), g = gcd(a, b) — the leading entries cancel.
Row eliminate_row(const Row& r, const Row& piv) {
    const Integer& a = r.front().second;
    const Integer& b = piv.front().second;
    const Integer g = gcd(a, b);
    Integer fr, fp;
    mpz_divexact(fr.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(fp.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    Row out;
    out.reserve(r.size() + piv.size());
    std::size_t i = 1, j = 1;
    while (i < r.size() || j < piv.size()) {
        if (j >= piv.size() || (i < r.size() && r[i].first < piv[j].first)) {
            out.emplace_back(r[i].first, fr * r[i].second);
            ++i;
        } else if (i >= r.size() || piv[j].first < r[i].first) {
            out.emplace_back(piv[j].first, -(fp * piv[j].second));
            ++j;
        } else {
            Integer v = fr * r[i].second - fp * piv[j].second;
            if (sgn(v) != 0) out.emplace_back(r[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

long rank_exact(const SparseIntMatrix& m, const Deadline& deadline) {
    std::unordered_map<long, Row> pivots;
    long rank = 0, steps = 0;
    for (const auto& source : m.rows) {
        Row r = source;
        normalize_row(r);
        while (!r.empty()) {
            if ((++steps & 63) == 0 && deadline.expired())
                throw resource_limit_error("time budget exceeded during exact rank");
            auto it = pivots.find(r.front().first);
            if (it == pivots.end()) {
                pivots.emplace(r.front().first, std::move(r));
                ++rank;
                break;
            }
            r = eliminate_row(r, it->second);
            normalize_row(r);
        }
    }
    return rank;
}

// ---- modular elimination ----

using ModRow = std::vector<std::pair<long, u64>>;

long rank_mod(const SparseIntMatrix& m, u64 p, const Deadline& deadline) {
    std::unordered_map<long, ModRow> pivots; // lead scaled to 1
    long rank = 0, steps = 0;
    for (const auto& source : m.rows) {
        ModRow r;
        r.reserve(source.size());
        for (const auto& [col, v] : source) {
            const u64 rem = mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p));
            if (rem != 0) r.emplace_back(col, rem);
        }
        while (!r.empty()) {
            if ((++steps & 255) == 0 && deadline.expired())
                throw resource_limit_error("time budget exceeded during modular rank");
            auto it = pivots.find(r.front().first);
            if (it == pivots.end()) {
                const u64 scale = powmod(r.front().second, p - 2, p);
                for (auto& [col, v] : r) v = mulmod(v, scale, p);
                pivots.emplace(r.front().first, std::move(r));
                ++rank;
                break;
            }
            const ModRow& piv = it->second;
            const u64 f = r.front().second; // piv lead is 1
            ModRow out;
            out.reserve(r.size() + piv.size());
            std::size_t i = 1, j = 1;
            while (i < r.size() || j < piv.size()) {
                if (j >= piv.size() || (i < r.size() && r[i].first < piv[j].first)) {
                    out.push_back(r[i]);
                    ++i;
                } else if (i >= r.size() || piv[j].first < r[i].first) {
                    out.emplace_back(piv[j].first, p - mulmod(f, piv[j].second, p));
                    ++j;
                } else {
                    const u64 sub = mulmod(f, piv[j].second, p);
                    const u64 v = r[i].second >= sub ? r[i].second - sub : r[i].second + p - sub;
                    if (v != 0) out.emplace_back(r[i].first, v);
                    ++i;
                    ++j;
                }
            }
            r = std::move(out);
        }
    }
    return rank;
}

} // namespace

std::vector<u64> sample_rank_primes(const RankOptions& options) {
    if (options.prime_count < 1) throw std::invalid_argument("prime count must be >= 1");
    PrimeSampler sampler(options.seed ? options.seed : kDefaultSeed);
    std::vector<u64> primes;
    while (static_cast<int>(primes.size()) < options.prime_count) {
        u64 p = sampler.next_prime();
        if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
    }
    return primes;
}

RankResult matrix_rank(const SparseIntMatrix& m, const RankOptions& options,
                       const Deadline& deadline) {
    RankMode mode = options.mode;
    if (mode == RankMode::Auto)
        mode = m.columns <= options.exact_column_threshold ? RankMode::Exact : RankMode::Modular;
    if (mode == RankMode::Exact) return RankResult{rank_exact(m, deadline), false, {}};

    if (options.prime_count < 1) throw std::invalid_argument("prime count must be >= 1");
    PrimeSampler sampler(options.seed ? options.seed : kDefaultSeed);
    for (int attempt = 0; attempt < 3; ++attempt) {
        std::vector<u64> primes;
        while (static_cast<int>(primes.size()) < options.prime_count) {
            u64 p = sampler.next_prime();
            if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
        }
        long rank = -1;
        bool agree = true;
        for (u64 p : primes) {
            const long r = rank_mod(m, p, deadline);
            if (rank < 0) rank = r;
            else if (r != rank) agree = false;
        }
        if (agree) return RankResult{rank, true, std::move(primes)};
    }
    throw std::runtime_error("modular ranks kept disagreeing across retries");
}

} // namespace narop
