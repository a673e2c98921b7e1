/* Copyright (C) 2026 The haarproj authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

#include "haarproj/numtheory.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>

namespace haarproj::numtheory {

namespace {

constexpr std::uint64_t kDefaultSpfLimit = 10'000'000;

std::shared_ptr<const SieveView> build_view(std::uint64_t limit) {
    auto t = std::make_shared<SieveView>();
    t->limit = limit;
    t->spf.assign(limit + 1, 0);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (t->spf[i] == 0) {
            t->spf[i] = static_cast<std::uint32_t>(i);
            t->primes.push_back(static_cast<std::uint32_t>(i));
        }
        for (std::uint32_t p : t->primes) {
            if (p > t->spf[i] || i * p > limit) break;
            t->spf[i * p] = p;
        }
    }
    return t;
}

std::shared_mutex g_table_mutex;
std::shared_ptr<const SieveView> g_table;

// Current table covering at least `limit`, rebuilding if needed. The
// returned snapshot is immutable; later rebuilds swap in a new one.
std::shared_ptr<const SieveView> snapshot_at_least(std::uint64_t limit) {
    {
        std::shared_lock lk(g_table_mutex);
        if (g_table && g_table->limit >= limit) return g_table;
    }
    std::unique_lock lk(g_table_mutex);
    if (!g_table || g_table->limit < limit)
        g_table = build_view(std::max(limit, kDefaultSpfLimit));
    return g_table;
}

// Trial-division fallback for n beyond the table.
void trial_divide_into(std::uint64_t n, std::vector<std::pair<std::uint64_t, int>>& out) {
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
}

// (prime, exponent) pairs of n, primes ascending.
std::vector<std::pair<std::uint64_t, int>> prime_exponents(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> pe;
    if (n <= 1) return pe;
    auto t = snapshot_at_least(2);
    if (n <= t->limit) {
        while (n > 1) {
            std::uint64_t p = t->spf[n];
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            pe.emplace_back(p, e);
        }
        return pe;  // spf walk already yields ascending primes
    }
    trial_divide_into(n, pe);
    return pe;
}

// Index of prime p within the prime sequence, 1-based. p must be prime.
std::size_t prime_index(std::uint64_t p) {
    auto t = snapshot_at_least(2);
    if (p <= t->limit) {
        auto it = std::lower_bound(t->primes.begin(), t->primes.end(), p);
        return static_cast<std::size_t>(it - t->primes.begin()) + 1;
    }
    return static_cast<std::size_t>(prime_pi(p));
}

// Plain sieve for one-off queries beyond the table.
std::vector<std::uint64_t> transient_sieve(std::uint64_t x) {
    std::vector<bool> comp(x + 1, false);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i <= x; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= x; j += i) comp[j] = true;
    }
    return out;
}

}  // namespace

void ensure_spf_table(std::uint64_t limit) {
    snapshot_at_least(std::max<std::uint64_t>(limit, 2));
}

std::uint64_t spf_table_limit() {
    std::shared_lock lk(g_table_mutex);
    return g_table ? g_table->limit : kDefaultSpfLimit;
}

std::shared_ptr<const SieveView> sieve_snapshot(std::uint64_t limit) {
    return snapshot_at_least(std::max<std::uint64_t>(limit, 2));
}

std::vector<std::uint8_t> omega_up_to(std::uint64_t x) {
    std::vector<std::uint8_t> omega(x + 1, 0);
    if (x < 2) return omega;
    auto t = snapshot_at_least(x);
    for (std::uint64_t n = 2; n <= x; ++n)
        omega[n] = static_cast<std::uint8_t>(omega[n / t->spf[n]] + 1);
    return omega;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t x) {
    if (x < 2) return {};
    auto t = snapshot_at_least(2);
    if (x <= t->limit) {
        auto end = std::upper_bound(t->primes.begin(), t->primes.end(), x);
        return std::vector<std::uint64_t>(t->primes.begin(), end);
    }
    auto sieved = transient_sieve(x);
    return sieved;
}

std::uint64_t prime_pi(std::uint64_t x) {
    if (x < 2) return 0;
    auto t = snapshot_at_least(2);
    if (x <= t->limit) {
        auto end = std::upper_bound(t->primes.begin(), t->primes.end(), x);
        return static_cast<std::uint64_t>(end - t->primes.begin());
    }
    return transient_sieve(x).size();
}

std::uint64_t nth_prime(std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("nth_prime: k is 1-based");
    auto t = snapshot_at_least(2);
    if (k <= t->primes.size()) return t->primes[k - 1];
    // Grow until the table holds k primes; p_k < 2 k log k + 2k for k >= 2.
    std::uint64_t guess = std::max<std::uint64_t>(64, 3 * k * (64 - static_cast<std::uint64_t>(__builtin_clzll(k | 1))));
    for (;;) {
        t = snapshot_at_least(guess);
        if (k <= t->primes.size()) return t->primes[k - 1];
        guess *= 2;
    }
}

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization f;
    f.n = n;
    auto pe = prime_exponents(n);
    if (pe.empty()) return f;
    std::size_t dim = prime_index(pe.back().first);
    f.exponents.assign(dim, 0);
    for (const auto& [p, e] : pe) f.exponents[prime_index(p) - 1] = e;
    return f;
}

MultiIndex bohr_lift(std::uint64_t n, std::size_t dim) {
    Factorization f = factorize(n);
    if (f.exponents.size() > dim)
        throw std::invalid_argument("bohr_lift: dim " + std::to_string(dim) +
                                    " too small for n = " + std::to_string(n) +
                                    " (needs " + std::to_string(f.exponents.size()) + ")");
    f.exponents.resize(dim, 0);
    return std::move(f.exponents);
}

int big_omega(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("big_omega: n must be positive");
    int total = 0;
    for (const auto& [p, e] : prime_exponents(n)) total += e;
    return total;
}

std::vector<std::uint64_t> n1_numbers(int m, std::uint64_t x) {
    if (m < 1) throw std::invalid_argument("n1_numbers: m must be >= 1");
    if (x < 2) return {};
    auto omega = omega_up_to(x);
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 2; n <= x; ++n)
        if (omega[n] == m) out.push_back(n);
    return out;
}

}  // namespace haarproj::numtheory
