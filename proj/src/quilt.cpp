#include "oblivcrn/quilt.hpp"

#include <algorithm>
#include <stdexcept>

namespace obliv {

namespace {

long long pow_ll(long long base, int exp) {
  long long out = 1;
  for (int i = 0; i < exp; ++i) {
    out *= base;
    if (out > 4'000'000) throw std::invalid_argument("quilt: offsets table too large");
  }
  return out;
}

std::string tuple_str(std::span<const long long> t) {
  std::string out = "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(t[i]);
  }
  return out + ")";
}

}  // namespace

QuiltAffine QuiltAffine::make(std::vector<Rational> gradient, long long period,
                              std::vector<Rational> offsets) {
  if (period < 1) throw std::invalid_argument("quilt: period must be >= 1");
  QuiltAffine g;
  g.dim = static_cast<int>(gradient.size());
  g.gradient = std::move(gradient);
  g.period = period;
  long long want = pow_ll(period, g.dim);
  if (static_cast<long long>(offsets.size()) != want)
    throw std::invalid_argument("quilt: offsets table must have period^dim entries");
  g.offsets = std::move(offsets);
  return g;
}

long long QuiltAffine::class_index(std::span<const long long> cls) const {
  if (static_cast<int>(cls.size()) != dim)
    throw std::invalid_argument("quilt: class tuple has wrong dimension");
  long long idx = 0, weight = 1;
  for (int i = 0; i < dim; ++i) {
    long long c = cls[i] % period;
    if (c < 0) c += period;
    idx += c * weight;
    weight *= period;
  }
  return idx;
}

const Rational& QuiltAffine::offset_at(std::span<const long long> cls) const {
  return offsets[class_index(cls)];
}

Rational quilt_eval_exact(const QuiltAffine& g, std::span<const long long> x) {
  if (static_cast<int>(x.size()) != g.dim)
    throw std::invalid_argument("quilt: input has wrong dimension");
  for (long long v : x)
    if (v < 0) throw std::invalid_argument("quilt: negative coordinate");
  Rational acc = g.offset_at(x);
  for (int i = 0; i < g.dim; ++i) acc += g.gradient[i] * Rational(x[i]);
  return acc;
}

long long quilt_eval(const QuiltAffine& g, std::span<const long long> x) {
  return quilt_eval_exact(g, x).as_integer();
}

long long quilt_delta(const QuiltAffine& g, std::span<const long long> cls, int axis) {
  if (axis < 1 || axis > g.dim) throw std::invalid_argument("quilt: bad axis");
  std::vector<long long> next(cls.begin(), cls.end());
  next[axis - 1] += 1;
  Rational d = g.gradient[axis - 1] + g.offset_at(next) - g.offset_at(cls);
  return d.as_integer();
}

std::vector<std::vector<long long>> quilt_classes(const QuiltAffine& g) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur(g.dim, 0);
  long long total = g.table_size();
  for (long long n = 0; n < total; ++n) {
    out.push_back(cur);
    for (int i = 0; i < g.dim; ++i) {
      if (++cur[i] < g.period) break;
      cur[i] = 0;
    }
  }
  return out;
}

QuiltReport quilt_validate(const QuiltAffine& g) {
  for (int i = 0; i < g.dim; ++i)
    if (g.gradient[i] < Rational(0))
      return {false, "gradient component " + std::to_string(i + 1) + " is negative"};
  for (const auto& cls : quilt_classes(g)) {
    Rational v = g.offset_at(cls);
    for (int i = 0; i < g.dim; ++i) v += g.gradient[i] * Rational(cls[i]);
    if (!v.is_integer())
      return {false, "value " + v.str() + " at " + tuple_str(cls) + " is not an integer"};
    for (int axis = 1; axis <= g.dim; ++axis) {
      std::vector<long long> next = cls;
      next[axis - 1] += 1;
      Rational d = g.gradient[axis - 1] + g.offset_at(next) - g.offset_at(cls);
      if (!d.is_integer())
        return {false, "finite difference " + d.str() + " at class " + tuple_str(cls) +
                           " axis " + std::to_string(axis) + " is not an integer"};
      if (d < Rational(0))
        return {false, "finite difference " + d.str() + " at class " + tuple_str(cls) +
                           " axis " + std::to_string(axis) + " is negative"};
    }
  }
  return {};
}

QuiltAffine quilt_shift(const QuiltAffine& g, std::span<const long long> shift) {
  if (static_cast<int>(shift.size()) != g.dim)
    throw std::invalid_argument("quilt: shift has wrong dimension");
  Rational base(0);
  for (int i = 0; i < g.dim; ++i) base += g.gradient[i] * Rational(shift[i]);
  QuiltAffine h = g;
  std::vector<long long> shifted(g.dim);
  for (const auto& cls : quilt_classes(g)) {
    for (int i = 0; i < g.dim; ++i) shifted[i] = cls[i] + shift[i];
    h.offsets[g.class_index(cls)] = base + g.offset_at(shifted);
  }
  return h;
}

QuiltAffine quilt_substitute(const QuiltAffine& g, int axis, long long value) {
  if (axis < 1 || axis > g.dim) throw std::invalid_argument("quilt: bad axis");
  if (value < 0) throw std::invalid_argument("quilt: negative substitution");
  std::vector<Rational> gradient;
  for (int i = 0; i < g.dim; ++i)
    if (i != axis - 1) gradient.push_back(g.gradient[i]);
  Rational add = g.gradient[axis - 1] * Rational(value);

  QuiltAffine h = QuiltAffine::make(std::move(gradient), g.period,
                                    std::vector<Rational>(pow_ll(g.period, g.dim - 1)));
  std::vector<long long> full(g.dim);
  for (const auto& cls : quilt_classes(h)) {
    for (int i = 0, j = 0; i < g.dim; ++i)
      full[i] = (i == axis - 1) ? value : cls[j++];
    h.offsets[h.class_index(cls)] = add + g.offset_at(full);
  }
  return h;
}

std::vector<int> quilt_dependent_axes(const QuiltAffine& g) {
  std::vector<int> out;
  for (int axis = 1; axis <= g.dim; ++axis) {
    bool depends = g.gradient[axis - 1] != Rational(0);
    if (!depends) {
      for (const auto& cls : quilt_classes(g)) {
        std::vector<long long> next = cls;
        next[axis - 1] += 1;
        if (g.offset_at(next) != g.offset_at(cls)) { depends = true; break; }
      }
    }
    if (depends) out.push_back(axis);
  }
  return out;
}

QuiltAffine quilt_project(const QuiltAffine& g, const std::vector<int>& axes) {
  for (int dep : quilt_dependent_axes(g))
    if (std::find(axes.begin(), axes.end(), dep) == axes.end())
      throw std::invalid_argument("quilt: projecting away a dependent axis");
  std::vector<Rational> gradient;
  for (int axis : axes) gradient.push_back(g.gradient[axis - 1]);
  QuiltAffine h = QuiltAffine::make(
      std::move(gradient), g.period,
      std::vector<Rational>(pow_ll(g.period, static_cast<int>(axes.size()))));
  std::vector<long long> full(g.dim, 0);
  for (const auto& cls : quilt_classes(h)) {
    std::fill(full.begin(), full.end(), 0);
    for (size_t j = 0; j < axes.size(); ++j) full[axes[j] - 1] = cls[j];
    h.offsets[h.class_index(cls)] = g.offset_at(full);
  }
  return h;
}

}  // namespace obliv
