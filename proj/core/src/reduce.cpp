#include "slheat/reduce.hpp"

namespace slheat {

double pairwise_sum(std::span<const double> values) {
  return pairwise_sum_mapped(values, [](double v) { return v; });
}

}  // namespace slheat
