#include "epstein/summation.hpp"

namespace epstein {

Complex kahan_sum(std::span<const Complex> terms) {
  ComplexKahanAccumulator acc;
  for (const auto& t : terms) acc.add(t);
  return acc.value();
}

double kahan_sum(std::span<const double> terms) {
  KahanAccumulator acc;
  for (double t : terms) acc.add(t);
  return acc.value();
}

}  // namespace epstein
