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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "haarproj/numtheory.hpp"

using namespace haarproj;
using namespace haarproj::numtheory;

namespace {

// Oracles below are deliberately independent of the library's sieve.

bool is_prime_trial(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> primes_trial(std::uint64_t x) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 2; n <= x; ++n)
        if (is_prime_trial(n)) out.push_back(n);
    return out;
}

// Plain Eratosthenes, no smallest-factor bookkeeping.
std::vector<bool> composite_flags(std::uint64_t x) {
    std::vector<bool> comp(x + 1, false);
    for (std::uint64_t i = 2; i * i <= x; ++i)
        if (!comp[i])
            for (std::uint64_t j = i * i; j <= x; j += i) comp[j] = true;
    return comp;
}

int omega_trial(std::uint64_t n) {
    int count = 0;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        while (n % p == 0) { n /= p; ++count; }
    if (n > 1) ++count;
    return count;
}

}  // namespace

TEST_CASE("primes_up_to matches trial division") {
    CHECK(primes_up_to(1).empty());
    CHECK(primes_up_to(0).empty());
    CHECK(primes_up_to(2) == std::vector<std::uint64_t>{2});
    CHECK(primes_up_to(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
    auto got = primes_up_to(1000);
    CHECK(got == primes_trial(1000));
    CHECK(primes_up_to(100).size() == 25);
}

TEST_CASE("prime_pi counts") {
    CHECK(prime_pi(1) == 0);
    CHECK(prime_pi(2) == 1);
    CHECK(prime_pi(10) == 4);
    // Independent plain-sieve oracle at 10^6.
    auto comp = composite_flags(1'000'000);
    std::uint64_t count = 0;
    for (std::uint64_t n = 2; n <= 1'000'000; ++n)
        if (!comp[n]) ++count;
    CHECK(count == 78498);
    CHECK(prime_pi(1'000'000) == count);
    CHECK(prime_pi(1'000'000) == primes_up_to(1'000'000).size());
}

TEST_CASE("nth_prime agrees with the prime list") {
    auto ps = primes_up_to(10'000);
    CHECK(nth_prime(1) == 2);
    CHECK(nth_prime(ps.size()) == ps.back());
    CHECK(nth_prime(100) == ps[99]);
}

TEST_CASE("bohr_lift examples and errors") {
    CHECK(bohr_lift(1, 3) == MultiIndex{0, 0, 0});
    CHECK(bohr_lift(12, 2) == MultiIndex{2, 1});
    // 9750 = 2 * 3 * 5^3 * 13
    CHECK(bohr_lift(9750, 6) == MultiIndex{1, 1, 3, 0, 0, 1});
    CHECK_THROWS_AS(bohr_lift(9750, 5), std::invalid_argument);
    CHECK_THROWS_AS(bohr_lift(7, 3), std::invalid_argument);  // 7 = p_4
    CHECK(bohr_lift(7, 4) == MultiIndex{0, 0, 0, 1});
}

TEST_CASE("bohr_lift round-trips for all n <= 1e5") {
    auto ps = primes_up_to(100'000);
    for (std::uint64_t n = 1; n <= 100'000; ++n) {
        Factorization f = factorize(n);
        REQUIRE(f.exponents.size() <= ps.size());
        __uint128_t prod = 1;
        for (std::size_t j = 0; j < f.exponents.size(); ++j) {
            REQUIRE(f.exponents[j] >= 0);
            for (std::int64_t e = 0; e < f.exponents[j]; ++e) prod *= ps[j];
        }
        REQUIRE(prod == n);
        if (n > 1) REQUIRE(f.exponents.back() > 0);  // no trailing zeros in factorize
    }
}

TEST_CASE("big_omega basics and additivity") {
    CHECK(big_omega(1) == 0);
    CHECK(big_omega(12) == 3);
    CHECK(big_omega(1024) == 10);
    for (std::uint64_t n = 1; n <= 2000; ++n) CHECK(big_omega(n) == omega_trial(n));
    std::mt19937_64 rng(20260819);
    for (int i = 0; i < 200; ++i) {
        std::uint64_t a = rng() % 1000 + 1, b = rng() % 1000 + 1;
        CHECK(big_omega(a * b) == big_omega(a) + big_omega(b));
    }
}

TEST_CASE("n1_numbers small cases") {
    CHECK(n1_numbers(1, 10) == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(n1_numbers(2, 30) ==
          std::vector<std::uint64_t>{4, 6, 9, 10, 14, 15, 21, 22, 25, 26});
    CHECK(n1_numbers(5, 16) == std::vector<std::uint64_t>{});
    CHECK(n1_numbers(4, 16) == std::vector<std::uint64_t>{16});
}

TEST_CASE("n1_numbers(1, x) is the prime list") {
    CHECK(n1_numbers(1, 100'000) == primes_up_to(100'000));
}

TEST_CASE("Omega level sets partition [2, x]") {
    const std::uint64_t x = 10'000;
    std::uint64_t total = 0;
    std::vector<bool> seen(x + 1, false);
    for (int m = 1; m <= 14; ++m) {  // Omega(n) <= log2(10^4) < 14
        for (auto n : n1_numbers(m, x)) {
            CHECK(!seen[n]);
            seen[n] = true;
            ++total;
        }
    }
    CHECK(total == x - 1);
}

TEST_CASE("semiprime count at 10^6 against a double-count oracle") {
    // |{n <= x : Omega(n) = 2}| = sum over primes p <= sqrt(x) of
    // (pi(x/p) - pi(p) + 1), counting n = p*q with p <= q.
    const std::uint64_t x = 1'000'000;
    auto comp = composite_flags(x);
    std::vector<std::uint64_t> pi(x + 1, 0);
    for (std::uint64_t n = 2; n <= x; ++n) pi[n] = pi[n - 1] + (comp[n] ? 0 : 1);
    std::uint64_t oracle = 0;
    for (std::uint64_t p = 2; p * p <= x; ++p)
        if (!comp[p]) oracle += pi[x / p] - pi[p] + 1;
    CHECK(oracle == 210035);
    CHECK(n1_numbers(2, x).size() == oracle);
}

TEST_CASE("factorize above the sieve table falls back to trial division") {
    auto ps = primes_up_to(100);
    // Values past the table bound whose prime factors are all small.
    for (std::uint64_t big : {33'554'432ULL /* 2^25 */, 43'046'721ULL /* 3^16 */,
                              39'375'000ULL /* 2^3 3^2 5^7 7 */}) {
        CHECK(big > spf_table_limit());
        CHECK(big_omega(big) == omega_trial(big));
        Factorization f = factorize(big);
        __uint128_t prod = 1;
        REQUIRE(f.exponents.size() <= ps.size());
        for (std::size_t j = 0; j < f.exponents.size(); ++j)
            for (std::int64_t e = 0; e < f.exponents[j]; ++e) prod *= ps[j];
        CHECK(prod == big);
    }
}
