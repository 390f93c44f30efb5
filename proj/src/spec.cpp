#include "oblivcrn/spec.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace obliv {

namespace {

std::string point_str(std::span<const long long> x) {
  std::string out = "(";
  for (size_t i = 0; i < x.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(x[i]);
  }
  return out + ")";
}

// Iterate the free sub-box [0,window]^free with fixed coordinates pinned.
// Calls fn(x) for every point; fn returns false to stop early.
template <typename Fn>
void for_each_point(const ObliviousSpec& s, long long window, Fn&& fn) {
  std::vector<int> free = s.free_axes();
  std::vector<long long> x(s.dim(), 0);
  for (auto [axis, value] : s.fixed()) x[axis - 1] = value;
  while (true) {
    if (!fn(x)) return;
    size_t k = 0;
    for (; k < free.size(); ++k) {
      int i = free[k] - 1;
      if (++x[i] <= window) break;
      x[i] = 0;
    }
    if (k == free.size()) return;
  }
}

}  // namespace

ObliviousSpec ObliviousSpec::make(int dim, std::vector<long long> floor,
                                  std::vector<QuiltAffine> pieces,
                                  std::vector<Restriction> restrictions,
                                  std::vector<std::pair<int, long long>> fixed) {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("spec: " + msg); };
  if (dim < 0) fail("negative dimension");
  if (static_cast<int>(floor.size()) != dim) fail("floor must have one entry per axis");
  for (long long v : floor)
    if (v < 0) fail("negative floor entry");
  if (pieces.empty()) fail("at least one piece required");
  for (const auto& g : pieces)
    if (g.dim != dim) fail("piece dimension mismatch");

  std::sort(fixed.begin(), fixed.end());
  std::set<int> fixed_axes;
  for (auto [axis, value] : fixed) {
    if (axis < 1 || axis > dim) fail("fixed axis out of range");
    if (value < 0) fail("negative fixed value");
    if (!fixed_axes.insert(axis).second) fail("axis fixed twice");
    if (floor[axis - 1] != 0) fail("fixed axis must have floor 0");
  }

  // Restriction table must cover exactly the free axes' floor ranges.
  std::sort(restrictions.begin(), restrictions.end(),
            [](const Restriction& a, const Restriction& b) {
              return std::tie(a.axis, a.value) < std::tie(b.axis, b.value);
            });
  std::set<std::pair<int, long long>> want;
  for (int axis = 1; axis <= dim; ++axis) {
    if (fixed_axes.count(axis)) continue;
    for (long long j = 0; j < floor[axis - 1]; ++j) want.insert({axis, j});
  }
  std::set<std::pair<int, long long>> got;
  for (const auto& r : restrictions) {
    if (!r.spec) fail("missing restriction spec");
    if (!got.insert({r.axis, r.value}).second) fail("duplicate restriction");
    if (r.spec->dim() != dim) fail("restriction dimension mismatch");
    std::vector<std::pair<int, long long>> child_fixed = fixed;
    child_fixed.emplace_back(r.axis, r.value);
    std::sort(child_fixed.begin(), child_fixed.end());
    if (r.spec->fixed() != child_fixed)
      fail("restriction at axis " + std::to_string(r.axis) + " value " +
           std::to_string(r.value) + " has inconsistent pinned coordinates");
  }
  if (got != want) fail("restriction table must cover axis floors exactly");

  ObliviousSpec s;
  s.dim_ = dim;
  s.floor_ = std::move(floor);
  s.pieces_ = std::move(pieces);
  s.restrictions_ = std::move(restrictions);
  s.fixed_ = std::move(fixed);
  return s;
}

bool ObliviousSpec::is_fixed(int axis) const {
  for (auto [a, v] : fixed_) {
    (void)v;
    if (a == axis) return true;
  }
  return false;
}

std::vector<int> ObliviousSpec::free_axes() const {
  std::vector<int> out;
  for (int axis = 1; axis <= dim_; ++axis)
    if (!is_fixed(axis)) out.push_back(axis);
  return out;
}

const ObliviousSpec& ObliviousSpec::restriction(int axis, long long value) const {
  for (const auto& r : restrictions_)
    if (r.axis == axis && r.value == value) return *r.spec;
  throw std::invalid_argument("spec: no restriction for axis " + std::to_string(axis) +
                              " value " + std::to_string(value));
}

long long spec_eval(const ObliviousSpec& s, std::span<const long long> x) {
  if (static_cast<int>(x.size()) != s.dim())
    throw std::invalid_argument("spec_eval: input has wrong dimension");
  for (long long v : x)
    if (v < 0) throw std::invalid_argument("spec_eval: negative coordinate");
  for (auto [axis, value] : s.fixed())
    if (x[axis - 1] != value)
      throw std::invalid_argument("spec_eval: input violates pinned coordinate on axis " +
                                  std::to_string(axis));
  for (int axis : s.free_axes()) {
    if (x[axis - 1] < s.floor()[axis - 1])
      return spec_eval(s.restriction(axis, x[axis - 1]), x);
  }
  bool first = true;
  long long best = 0;
  for (const auto& g : s.pieces()) {
    long long v = quilt_eval(g, x);
    if (first || v < best) best = v;
    first = false;
  }
  if (best < 0)
    throw std::domain_error("spec_eval: negative value " + std::to_string(best) + " at " +
                            point_str(x));
  return best;
}

namespace {

void collect_window_data(const ObliviousSpec& s, long long& max_floor, long long& lcm) {
  for (long long v : s.floor()) max_floor = std::max(max_floor, v);
  for (const auto& g : s.pieces()) lcm = std::lcm(lcm, g.period);
  for (const auto& r : s.restrictions()) collect_window_data(*r.spec, max_floor, lcm);
}

}  // namespace

long long default_validation_window(const ObliviousSpec& s) {
  long long max_floor = 0, lcm = 1;
  collect_window_data(s, max_floor, lcm);
  return max_floor + 2 * lcm;
}

SpecReport spec_validate(const ObliviousSpec& s, long long window) {
  if (window <= 0) window = default_validation_window(s);

  // (c) every piece is a valid quilt.
  for (size_t k = 0; k < s.pieces().size(); ++k) {
    QuiltReport qr = quilt_validate(s.pieces()[k]);
    if (!qr.ok)
      return {false, "piece " + std::to_string(k + 1) + ": " + qr.detail};
  }

  SpecReport report;
  auto eval = [&](std::span<const long long> x) { return spec_eval(s, x); };
  try {
    for_each_point(s, window, [&](const std::vector<long long>& x) {
      long long v = eval(x);
      // (e) nonnegative values: spec_eval throws on negative minima.
      (void)v;

      // (a) nondecreasing along every free axis.
      std::vector<long long> y(x);
      for (int axis : s.free_axes()) {
        if (x[axis - 1] + 1 > window) continue;
        y[axis - 1] = x[axis - 1] + 1;
        if (spec_eval(s, y) < v) {
          report = {false, "decreasing along axis " + std::to_string(axis) + " at " +
                               point_str(x)};
          return false;
        }
        y[axis - 1] = x[axis - 1];
      }

      // (b) all admissible recursion orders agree.
      std::vector<int> below;
      for (int axis : s.free_axes())
        if (x[axis - 1] < s.floor()[axis - 1]) below.push_back(axis);
      if (below.size() >= 2) {
        for (int axis : below) {
          long long via = spec_eval(s.restriction(axis, x[axis - 1]), x);
          if (via != v) {
            report = {false, "recursion order disagreement at " + point_str(x) +
                                 " via axis " + std::to_string(axis)};
            return false;
          }
        }
      }

      // (d) pieces dominate the function everywhere.  Above the floor this
      // is immediate (the value is the piece minimum); below it the value
      // comes from a restriction, and a piece dipping under it would break
      // the eventual-min structure at the boundary.
      for (size_t k = 0; k < s.pieces().size(); ++k) {
        if (quilt_eval(s.pieces()[k], x) < v) {
          report = {false, "piece " + std::to_string(k + 1) + " undercuts the function at " +
                               point_str(x)};
          return false;
        }
      }
      return true;
    });
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
  if (!report.ok) return report;

  // Recurse into the restriction table.
  for (const auto& r : s.restrictions()) {
    SpecReport child = spec_validate(*r.spec, window);
    if (!child.ok)
      return {false, "restriction axis " + std::to_string(r.axis) + " value " +
                         std::to_string(r.value) + ": " + child.detail};
  }
  return report;
}

std::vector<std::vector<Rational>> scaling_limit(const ObliviousSpec& s) {
  std::vector<std::vector<Rational>> out;
  for (const auto& g : s.pieces()) out.push_back(g.gradient);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<QuiltAffine> effective_pieces(const ObliviousSpec& s) {
  std::vector<QuiltAffine> out;
  for (const auto& g : s.pieces()) {
    QuiltAffine h = g;
    // Substitute in descending axis order so indices stay stable.
    for (auto it = s.fixed().rbegin(); it != s.fixed().rend(); ++it)
      h = quilt_substitute(h, it->first, it->second);
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<long long> effective_floor(const ObliviousSpec& s) {
  std::vector<long long> out;
  for (int axis : s.free_axes()) out.push_back(s.floor()[axis - 1]);
  return out;
}

}  // namespace obliv
