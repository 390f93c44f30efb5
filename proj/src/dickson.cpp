#include "oblivcrn/dickson.hpp"

#include <stdexcept>

namespace obliv {
namespace {

// Enumerate vectors in [0,bound]^dim in lexicographic order.
bool next_vector(std::vector<long long>& x, long long bound) {
  for (int i = static_cast<int>(x.size()) - 1; i >= 0; --i) {
    if (x[i] < bound) {
      ++x[i];
      return true;
    }
    x[i] = 0;
  }
  return false;
}

bool is_zero(const std::vector<long long>& x) {
  for (long long v : x)
    if (v != 0) return false;
  return true;
}

// True when u and v span the same line (every 2x2 minor vanishes).  A family
// probed along its own direction only exhibits curvature of one ray section,
// and ray sections of eventually-periodic functions flatten out without ever
// extending to the infinite family the contradiction needs, so such patterns
// are rejected as evidence.  In dimension 1 every pair is parallel.
bool parallel(const std::vector<long long>& u, const std::vector<long long>& v) {
  for (std::size_t i = 0; i + 1 < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (u[i] * v[j] != u[j] * v[i]) return false;
  return true;
}

}  // namespace

std::optional<DicksonWitness> dickson_search(const PointFn& f, int dim,
                                             long long bound,
                                             int min_family) {
  if (dim < 1) throw std::invalid_argument("dickson_search: dim must be >= 1");
  if (bound < 1)
    throw std::invalid_argument("dickson_search: bound must be >= 1");
  if (min_family < 2)
    throw std::invalid_argument("dickson_search: family must have >= 2 members");

  const long long box = 2 * bound;
  // Every evaluation lands in [0,box]^dim; tabulate once.
  const long long side = box + 1;
  long long cells = 1;
  for (int c = 0; c < dim; ++c) cells *= side;
  std::vector<long long> table(cells);
  {
    std::vector<long long> x(dim, 0);
    long long at = 0;
    do {
      table[at++] = f(x);
    } while (next_vector(x, box));
  }
  auto value = [&](const std::vector<long long>& x) {
    long long at = 0;
    for (int c = 0; c < dim; ++c) at = at * side + x[c];
    return table[at];
  };

  std::vector<long long> base(dim, 0);
  do {
    std::vector<long long> dir(dim, 0);
    do {
      if (is_zero(dir)) continue;
      std::vector<long long> vdir(dim, 0);
      do {
        if (is_zero(vdir)) continue;
        if (parallel(dir, vdir)) continue;
        // Largest K with base + (K-1)*dir + K*vdir inside [0,box]^dim.
        int K = 0;
        while (true) {
          bool inside = true;
          for (int c = 0; c < dim; ++c) {
            const long long top = base[c] + (long long)K * dir[c] +
                                  (long long)(K + 1) * vdir[c];
            inside = inside && top <= box;
          }
          if (!inside) break;
          ++K;
        }
        if (K < min_family) continue;

        auto member = [&](int i) {  // a_i, 1-based
          std::vector<long long> x(base);
          for (int c = 0; c < dim; ++c) x[c] += (long long)(i - 1) * dir[c];
          return x;
        };
        auto increment = [&](int i, int j) {  // f(a_i + j*vdir) - f(a_i)
          std::vector<long long> x = member(i);
          std::vector<long long> shifted(x);
          for (int c = 0; c < dim; ++c) shifted[c] += (long long)j * vdir[c];
          return value(shifted) - value(x);
        };

        bool all = true;
        for (int i = 1; all && i < K; ++i)
          for (int j = i + 1; all && j <= K; ++j)
            all = increment(i, j) > increment(j, j);
        if (!all) continue;

        DicksonWitness w;
        w.base = base;
        w.direction = dir;
        w.delta_direction = vdir;
        w.family_size = K;
        w.a1 = member(1);
        w.a2 = member(2);
        w.delta.assign(dim, 0);
        for (int c = 0; c < dim; ++c) w.delta[c] = 2 * vdir[c];
        w.lhs = increment(1, 2);
        w.rhs = increment(2, 2);
        return w;
      } while (next_vector(vdir, bound));
    } while (next_vector(dir, bound));
  } while (next_vector(base, bound));
  return std::nullopt;
}

std::string witness_text(const DicksonWitness& w) {
  auto vec = [](const std::vector<long long>& x) {
    std::string out = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(x[i]);
    }
    return out + ")";
  };
  return "witness family: base " + vec(w.base) + ", direction " +
         vec(w.direction) + ", probe direction " + vec(w.delta_direction) +
         ", " + std::to_string(w.family_size) +
         " members; at a1=" + vec(w.a1) + ", a2=" + vec(w.a2) +
         ", delta=" + vec(w.delta) + ": f(a1+delta)-f(a1) = " +
         std::to_string(w.lhs) + " > " + std::to_string(w.rhs) +
         " = f(a2+delta)-f(a2)";
}

}  // namespace obliv
