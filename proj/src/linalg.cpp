#include "qheis/linalg.hpp"

#include <iterator>
#include <map>

namespace qheis {

std::size_t rank(const std::vector<NormalElement> &vectors) {
  // Rows keyed by their distinct leading monomials; any combination of
  // them leads with one of those keys.
  std::map<Mono, NormalElement, MonoOrder> pivots;
  for (const NormalElement &v : vectors) {
    NormalElement x = v;
    while (!x.is_zero()) {
      const auto &[lead, c] = *std::prev(x.terms().end());
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        Mono key = lead;
        pivots.emplace(key, std::move(x));
        break;
      }
      const NormalElement &row = it->second;
      x -= row * (c / row.coeff(lead.m, lead.n));
    }
  }
  return pivots.size();
}

} // namespace qheis
