#include "graphforms/factor.hpp"

#include <algorithm>

#include "graphforms/graph.hpp"

namespace graphforms {

namespace {

const unsigned kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool miller_rabin(const mpz_class& n) {
  if (n < 2) return false;
  for (unsigned p : kWitnesses) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  mpz_class d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  mpz_class x, nm1 = n - 1;
  for (unsigned a : kWitnesses) {
    mpz_class base = a;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == nm1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// One nontrivial factor of composite n, or 0 if the budget runs out.
mpz_class brent_rho(const mpz_class& n, long long& budget) {
  for (unsigned long c = 1; budget > 0; ++c) {
    mpz_class y = 2, x, g = 1, q = 1, ys;
    long long r = 1;
    const long long m = 128;
    auto f = [&](const mpz_class& v) -> mpz_class { return (v * v + c) % n; };
    do {
      x = y;
      for (long long i = 0; i < r; ++i) y = f(y);
      long long k = 0;
      do {
        ys = y;
        for (long long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = q * abs(x - y) % n;
        }
        budget -= std::min(m, r - k);
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1 && budget > 0);
      r *= 2;
    } while (g == 1 && budget > 0);
    if (g == n) {
      do {
        ys = f(ys);
        mpz_class t = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
        --budget;
      } while (g == 1 && budget > 0);
    }
    if (g != 1 && g != n) return g;
  }
  return 0;
}

}  // namespace

std::vector<mpz_class> Factorization::distinct_primes() const {
  std::vector<mpz_class> out = primes;
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_probable_prime(const mpz_class& n) { return miller_rabin(n); }

Factorization prime_factorization(const mpz_class& value, long long rho_budget) {
  Factorization out;
  mpz_class n = abs(value);
  if (n == 0) throw Error("cannot factor zero");
  for (unsigned long p = 2; p < 10000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      out.primes.push_back(p);
      n /= p;
    }
  }
  std::vector<mpz_class> work;
  if (n > 1) work.push_back(n);
  while (!work.empty()) {
    mpz_class m = work.back();
    work.pop_back();
    if (miller_rabin(m)) {
      out.primes.push_back(m);
      continue;
    }
    mpz_class f = brent_rho(m, rho_budget);
    if (f == 0) {
      out.unfactored *= m;
      continue;
    }
    work.push_back(f);
    work.push_back(m / f);
  }
  std::sort(out.primes.begin(), out.primes.end());
  return out;
}

int legendre_symbol(const mpz_class& a, const mpz_class& p) {
  return mpz_kronecker(a.get_mpz_t(), p.get_mpz_t());
}

int valuation(const mpz_class& n, const mpz_class& p) {
  if (n == 0) throw Error("valuation of zero");
  mpz_class m = abs(n);
  int v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

}  // namespace graphforms
