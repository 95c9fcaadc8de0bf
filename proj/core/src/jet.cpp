#include "moufang/jet.hpp"

namespace moufang {

void validate(const DerivativeRequest& request, std::size_t argument_dim) {
  if (request.order != 1 && request.order != 2)
    throw UsageError("derivative order must be 1 or 2, got " + std::to_string(request.order));
  for (std::size_t i : request.indices)
    if (i >= argument_dim)
      throw UsageError("derivative index " + std::to_string(i) + " outside [0, " + std::to_string(argument_dim) +
                       ")");
}

namespace detail {

std::vector<double> concat(std::span<const double> g, std::span<const double> h) {
  std::vector<double> p(g.begin(), g.end());
  p.insert(p.end(), h.begin(), h.end());
  return p;
}

}  // namespace detail
}  // namespace moufang
