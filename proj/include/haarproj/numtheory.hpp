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

// Prime sieving and factorization over the fixed prime sequence
// p_1 < p_2 < ... : the coordinates of the lift n = prod_j p_j^{alpha_j}.
// Everything here is exact integer arithmetic.

#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "haarproj/multiindex.hpp"

namespace haarproj::numtheory {

// n = prod_j p_j^{exponents[j]} over the first primes; exponents runs up to
// the index of the largest prime factor of n (empty for n = 1).
struct Factorization {
    std::uint64_t n = 1;
    MultiIndex exponents;
};

// Primes <= x, strictly increasing (empty for x < 2).
std::vector<std::uint64_t> primes_up_to(std::uint64_t x);

// pi(x) = |{p prime : p <= x}|.
std::uint64_t prime_pi(std::uint64_t x);

// The k-th prime, 1-based: nth_prime(1) = 2.
std::uint64_t nth_prime(std::uint64_t k);

Factorization factorize(std::uint64_t n);

// Exponent vector of length dim with prod_j p_j^{alpha_j} = n.
// Throws std::invalid_argument if dim cannot house a prime factor of n.
MultiIndex bohr_lift(std::uint64_t n, std::size_t dim);

// Omega(n): prime divisors counted with multiplicity; Omega(1) = 0.
int big_omega(std::uint64_t n);

// All n in [1, x] with Omega(n) = m, ascending (m >= 1, so n = 1 never
// qualifies). Possibly empty.
std::vector<std::uint64_t> n1_numbers(int m, std::uint64_t x);

// Smallest-prime-factor table management. The table is built lazily on
// first use (default bound 10^7) and is read-only afterwards; queries
// beyond the bound fall back to trial division (factorization) or a
// transient sieve (primes_up_to / prime_pi). ensure_spf_table() may be
// called up front to raise the bound; calling it after first use with a
// larger bound rebuilds the table.
void ensure_spf_table(std::uint64_t limit);
std::uint64_t spf_table_limit();

// Read-only snapshot of the sieve, valid for n <= limit: spf[n] is the
// least prime factor of n, primes the ascending prime list. The snapshot
// stays valid (and immutable) even if the global table is rebuilt larger
// by another thread, so the raw arrays are safe for hot loops.
struct SieveView {
    std::uint64_t limit = 0;
    std::vector<std::uint32_t> spf;
    std::vector<std::uint32_t> primes;
};
std::shared_ptr<const SieveView> sieve_snapshot(std::uint64_t limit);

// Omega(n) for every n <= x, as a dense table (entries 0 and 1 are 0).
std::vector<std::uint8_t> omega_up_to(std::uint64_t x);

}  // namespace haarproj::numtheory
