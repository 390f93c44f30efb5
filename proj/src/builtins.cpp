#include "oblivcrn/builtins.hpp"

#include <algorithm>
#include <stdexcept>

namespace obliv {

const std::map<std::string, Builtin>& builtin_functions() {
  static const std::map<std::string, Builtin> table = {
      {"max", {2, [](const std::vector<long long>& x) {
                 return std::max(x[0], x[1]);
               }}},
      {"min", {2, [](const std::vector<long long>& x) {
                 return std::min(x[0], x[1]);
               }}},
      // x1+x2, reduced by one exactly on the diagonal: nondecreasing but
      // not an eventual min of quilt-affine pieces.
      {"depressed-strip", {2, [](const std::vector<long long>& x) {
                             return x[0] + x[1] + (x[0] == x[1] ? 0 : 1);
                           }}},
      // min(x1+1, x2+1, ceil((x1+x2)/2)): rises from both edges.
      {"roof", {2, [](const std::vector<long long>& x) {
                  const long long mid = (x[0] + x[1] + 1) / 2;
                  return std::min({x[0] + 1, x[1] + 1, mid});
                }}},
      {"2x", {1, [](const std::vector<long long>& x) { return 2 * x[0]; }}},
      {"floor3x2", {1, [](const std::vector<long long>& x) {
                      return 3 * x[0] / 2;
                    }}},
      {"min1x", {1, [](const std::vector<long long>& x) {
                   return std::min<long long>(1, x[0]);
                 }}},
  };
  return table;
}

const Builtin& builtin_function(const std::string& name) {
  const auto& table = builtin_functions();
  auto it = table.find(name);
  if (it == table.end()) {
    std::string known;
    for (const auto& [key, value] : table) {
      if (!known.empty()) known += ", ";
      known += key;
    }
    throw std::invalid_argument("unknown builtin \"" + name +
                                "\" (known: " + known + ")");
  }
  return it->second;
}

}  // namespace obliv
