#include "oblivcrn/semilinear1d.hpp"

#include <numeric>
#include <stdexcept>

namespace obliv {

namespace {

long long check_horizon(const Semilinear1D& f) {
  long long max_const = 0, lcm = 1;
  for (const auto& p : f.pieces) {
    if (p.lo > 0) max_const = std::max(max_const, p.lo);
    if (p.hi) max_const = std::max(max_const, *p.hi);
    if (p.mod) lcm = std::lcm(lcm, p.mod->first);
  }
  return max_const + 2 * lcm + 1;
}

Rational value_at(const Sl1dPiece& p, long long x) {
  return p.alpha * Rational(x) + p.beta;
}

}  // namespace

Semilinear1D Semilinear1D::make(std::vector<Sl1dPiece> pieces) {
  auto fail = [](const std::string& msg) {
    throw std::invalid_argument("semilinear1d: " + msg);
  };
  for (const auto& p : pieces) {
    if (p.lo < 0) fail("negative lower threshold");
    if (p.hi && *p.hi <= p.lo) fail("empty threshold interval");
    if (p.mod) {
      if (p.mod->first < 1) fail("modulus must be >= 1");
      if (p.mod->second < 0 || p.mod->second >= p.mod->first) fail("residue out of range");
    }
    if (!p.hi && p.alpha < Rational(0)) fail("unbounded piece with negative slope");
  }
  Semilinear1D f{std::move(pieces)};
  long long horizon = check_horizon(f);
  for (long long x = 0; x < horizon; ++x) {
    const Sl1dPiece* owner = nullptr;
    for (const auto& p : f.pieces) {
      if (!p.contains(x)) continue;
      if (owner) fail("overlapping pieces at x=" + std::to_string(x));
      owner = &p;
    }
    if (!owner) fail("no piece covers x=" + std::to_string(x));
    Rational v = value_at(*owner, x);
    if (!v.is_integer()) fail("fractional value " + v.str() + " at x=" + std::to_string(x));
    if (v < Rational(0)) fail("negative value at x=" + std::to_string(x));
  }
  return f;
}

long long sl1d_eval(const Semilinear1D& f, long long x) {
  if (x < 0) throw std::invalid_argument("semilinear1d: negative argument");
  const Sl1dPiece* owner = nullptr;
  for (const auto& p : f.pieces) {
    if (!p.contains(x)) continue;
    if (owner) throw std::domain_error("semilinear1d: overlapping pieces at x=" + std::to_string(x));
    owner = &p;
  }
  if (!owner) throw std::domain_error("semilinear1d: no piece covers x=" + std::to_string(x));
  return value_at(*owner, x).as_integer();
}

Eventual1DForm extract_eventual_1d(const Semilinear1D& f) {
  long long max_const = -1, p = 1;
  for (const auto& piece : f.pieces) {
    if (piece.lo > 0) max_const = std::max(max_const, piece.lo);
    if (piece.hi) max_const = std::max(max_const, *piece.hi);
    if (piece.mod) p = std::lcm(p, piece.mod->first);
  }
  long long n = max_const < 0 ? 0 : 1 + max_const;

  for (long long x = 0; x < n + 2 * p; ++x)
    if (sl1d_eval(f, x + 1) < sl1d_eval(f, x))
      throw std::domain_error("extract_eventual_1d: not nondecreasing at x=" + std::to_string(x));

  Eventual1DForm form;
  form.n = n;
  form.p = p;
  for (long long x = 0; x <= n; ++x) form.prefix.push_back(sl1d_eval(f, x));
  form.deltas.assign(p, 0);
  for (long long r = 0; r < p; ++r) {
    long long x = n + (((r - n) % p) + p) % p;
    form.deltas[r] = sl1d_eval(f, x + 1) - sl1d_eval(f, x);
  }
  for (long long x = n; x < n + 2 * p; ++x)
    if (sl1d_eval(f, x + 1) - sl1d_eval(f, x) != form.deltas[x % p])
      throw std::domain_error("extract_eventual_1d: increments not periodic at x=" +
                              std::to_string(x));
  return form;
}

Semilinear1D sl1d_from_eventual(const Eventual1DForm& form) {
  if (form.n < 0 || form.p < 1) throw std::invalid_argument("eventual form: bad n or p");
  if (static_cast<long long>(form.prefix.size()) != form.n + 1)
    throw std::invalid_argument("eventual form: prefix must have n+1 entries");
  if (static_cast<long long>(form.deltas.size()) != form.p)
    throw std::invalid_argument("eventual form: deltas must have p entries");

  std::vector<Sl1dPiece> pieces;
  for (long long x = 0; x < form.n; ++x) {
    Sl1dPiece piece;
    piece.lo = x;
    piece.hi = x + 1;
    piece.beta = Rational(form.prefix[x]);
    pieces.push_back(piece);
  }
  long long total = 0;
  for (long long d : form.deltas) total += d;
  Rational slope(total, form.p);
  // Value on class r for x >= n, anchored at the first member of the class.
  for (long long r = 0; r < form.p; ++r) {
    long long x0 = form.n + (((r - form.n) % form.p) + form.p) % form.p;
    long long fx0 = form.prefix[form.n];
    for (long long x = form.n; x < x0; ++x) fx0 += form.deltas[x % form.p];
    Sl1dPiece piece;
    piece.lo = form.n;
    if (form.p > 1) piece.mod = {form.p, r};
    piece.alpha = slope;
    piece.beta = Rational(fx0) - slope * Rational(x0);
    pieces.push_back(piece);
    if (form.p == 1) break;
  }
  return Semilinear1D::make(std::move(pieces));
}

std::optional<std::pair<long long, long long>> superadditive_check(const Semilinear1D& f,
                                                                  long long bound) {
  for (long long x = 0; x <= bound; ++x)
    for (long long z = x; z <= bound; ++z)
      if (sl1d_eval(f, x) + sl1d_eval(f, z) > sl1d_eval(f, x + z)) return std::make_pair(x, z);
  return std::nullopt;
}

}  // namespace obliv
