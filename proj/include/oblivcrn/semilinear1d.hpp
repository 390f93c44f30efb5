#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oblivcrn/rational.hpp"

namespace obliv {

// Piecewise description of a total function N -> N.  Each piece holds an
// affine value alpha*x + beta on a domain that is a conjunction of an
// optional lower threshold (x >= lo), an optional upper threshold (x < hi)
// and an optional single congruence (x = residue mod modulus).  Construction
// validates that the domains partition N and that values are nonnegative
// integers.

struct Sl1dPiece {
  long long lo = 0;
  std::optional<long long> hi;                         // x < hi
  std::optional<std::pair<long long, long long>> mod;  // (modulus, residue)
  Rational alpha, beta;

  bool contains(long long x) const {
    if (x < lo) return false;
    if (hi && x >= *hi) return false;
    if (mod && x % mod->first != mod->second) return false;
    return true;
  }
};

struct Semilinear1D {
  std::vector<Sl1dPiece> pieces;

  // Throws std::invalid_argument when the pieces do not partition N, take a
  // fractional or negative value, or an unbounded piece decreases.
  static Semilinear1D make(std::vector<Sl1dPiece> pieces);
};

long long sl1d_eval(const Semilinear1D& f, long long x);

// Canonical data of an eventually-periodic nondecreasing function: initial
// values prefix = f(0..n) and per-class increments deltas(r) = f(x+1) - f(x)
// for x >= n with x = r (mod p).
struct Eventual1DForm {
  long long n = 0;
  long long p = 1;
  std::vector<long long> prefix;  // size n + 1
  std::vector<long long> deltas;  // size p

  friend bool operator==(const Eventual1DForm& a, const Eventual1DForm& b) {
    return a.n == b.n && a.p == b.p && a.prefix == b.prefix && a.deltas == b.deltas;
  }
};

// n = 1 + the largest threshold constant (0 when there are none), p = lcm of
// the moduli (1 when there are none); the increments are verified constant
// per class over [n, n+2p).  Throws std::domain_error with a witness when f
// is not nondecreasing on [0, n+2p].
Eventual1DForm extract_eventual_1d(const Semilinear1D& f);

// Rebuild a piecewise function from eventual-form data (one point piece per
// prefix entry below n, one congruence-class piece per residue above).
Semilinear1D sl1d_from_eventual(const Eventual1DForm& form);

// First (x, z), x <= z <= bound, with f(x) + f(z) > f(x+z); empty when f is
// superadditive on that range.
std::optional<std::pair<long long, long long>> superadditive_check(const Semilinear1D& f,
                                                                   long long bound);

}  // namespace obliv
