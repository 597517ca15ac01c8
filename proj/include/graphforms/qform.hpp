#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "graphforms/int_matrix.hpp"

namespace graphforms {

// Induced form on Z^n / (saturated kernel of F).
struct SaturationQuotient {
  IntMatrix gram;        // (n-r) x (n-r)
  IntMatrix kernel;      // n x r, columns span the saturated kernel
  IntMatrix complement;  // n x (n-r), columns map to the quotient basis
  int corank = 0;
  bool standard_complement = false;  // complement made of unit vectors
};
SaturationQuotient saturation_quotient(const IntMatrix& f);

struct JordanBlock {
  int exponent = 0;
  IntMatrix unit;  // unimodular mod p; the constituent is p^exponent * unit
};
// Blocks of increasing exponent. Degenerate input is rejected.
std::vector<JordanBlock> jordan_decomposition(const IntMatrix& f, const mpz_class& p);

struct PadicConstituent {
  int scale = 0;   // exponent of p
  int rank = 0;
  int det = 1;     // odd p: Legendre symbol; p = 2: det mod 8, or +-1 once canonical
  int type = 0;    // p = 2 only: 0 even, 1 odd
  int oddity = 0;  // p = 2 only
  bool operator==(const PadicConstituent& o) const = default;
};

struct PadicSymbol {
  mpz_class p;
  std::vector<PadicConstituent> constituents;

  // "[0, 6, 7, 0, 0], [1, 4, 1, 0, 0]" or "[0, 15, 1], [1, 1, -1]".
  std::string to_list_string() const;
  // "1^{10-} 3^{6+}"; for p = 2 scale^{sign rank}_{II|oddity}.
  std::string to_compact_string() const;
  // Sign walking and oddity fusion for p = 2; identity for odd p.
  PadicSymbol canonical() const;
  bool equivalent(const PadicSymbol& o) const { return p == o.p && canonical().constituents == o.canonical().constituents; }
};

// Jordan symbol of a nondegenerate symmetric integer matrix, computed by the
// usual kernel-splitting recursion. For p = 2 the uncanonicalised output
// depends on the chosen basis.
PadicSymbol padic_symbol(const IntMatrix& f, const mpz_class& p);
std::vector<PadicSymbol> genus_symbol_list(const IntMatrix& f);  // all p | 2 det

struct LocalEquivalence {
  bool equivalent = false;
  std::string reason;       // empty when equivalent
  mpz_class witness_prime;  // prime at which the symbols differ, or 0
};
LocalEquivalence local_equivalence(const IntMatrix& f1, const IntMatrix& f2);
bool is_locally_equivalent(const IntMatrix& f1, const IntMatrix& f2);

}  // namespace graphforms
