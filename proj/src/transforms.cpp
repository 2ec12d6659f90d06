#include "dold/transforms.hpp"

#include <algorithm>
#include <stdexcept>

namespace dold {

std::vector<uint64_t> divisors(uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisors: n must be positive");
  std::vector<uint64_t> small;
  std::vector<uint64_t> large;
  for (uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<Integer> mobius_transform(const IntegerSequencePrefix& A) {
  uint64_t N = A.size();
  std::vector<Integer> out;
  out.reserve(N);
  for (uint64_t n = 1; n <= N; ++n) {
    Integer sum = 0;
    for (uint64_t d : divisors(n)) {
      int mu = mobius(n / d);
      if (mu == 1) {
        sum += A.at(d);
      } else if (mu == -1) {
        sum -= A.at(d);
      }
    }
    out.push_back(std::move(sum));
  }
  return out;
}

OrbitCountPrefix orbit_counts(const IntegerSequencePrefix& A) {
  std::vector<Integer> transform = mobius_transform(A);
  OrbitCountPrefix out;
  out.values.reserve(transform.size());
  for (uint64_t n = 1; n <= transform.size(); ++n) {
    out.values.emplace_back(std::move(transform[n - 1]),
                            Integer(static_cast<unsigned long>(n)));
  }
  return out;
}

IntegerSequencePrefix fix_counts_from_orbits(std::span<const Integer> orbits) {
  if (orbits.empty()) {
    throw std::invalid_argument("fix_counts_from_orbits: empty orbit prefix");
  }
  for (const Integer& o : orbits) {
    if (o < 0) {
      throw std::invalid_argument(
          "fix_counts_from_orbits: negative orbit count");
    }
  }
  uint64_t N = orbits.size();
  std::vector<Integer> values;
  values.reserve(N);
  for (uint64_t n = 1; n <= N; ++n) {
    Integer sum = 0;
    for (uint64_t d : divisors(n)) {
      sum += Integer(static_cast<unsigned long>(d)) * orbits[d - 1];
    }
    values.push_back(std::move(sum));
  }
  return IntegerSequencePrefix(std::move(values), "fix counts from orbits",
                               {SequenceFamily::external, 0});
}

}  // namespace dold
