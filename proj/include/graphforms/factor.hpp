#pragma once

#include <gmpxx.h>

#include <vector>

namespace graphforms {

struct Factorization {
  std::vector<mpz_class> primes;  // ascending, with multiplicity
  mpz_class unfactored = 1;       // composite cofactor left when the budget ran out
  bool complete() const { return unfactored == 1; }
  std::vector<mpz_class> distinct_primes() const;
  int prime_count_with_multiplicity() const { return static_cast<int>(primes.size()); }
};

bool is_probable_prime(const mpz_class& n);

// Trial division, Miller-Rabin and Brent's variant of Pollard rho.
// |n| is factored; rho_budget bounds the total number of rho iterations.
Factorization prime_factorization(const mpz_class& n, long long rho_budget = 1'000'000);

int legendre_symbol(const mpz_class& a, const mpz_class& p);  // Jacobi/Kronecker for odd p
int valuation(const mpz_class& n, const mpz_class& p);       // throws on n == 0

}  // namespace graphforms
