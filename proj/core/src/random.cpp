#include "psct/random.hpp"

#include <algorithm>
#include <cmath>

#include "psct/errors.hpp"

namespace psct {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw DomainError("Rng::below(0)");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

KForm random_form(int n, int degree, Rng& rng, double fraction) {
  std::vector<Mask> pool = subsets(n, degree);
  KForm f(n, degree);
  if (pool.empty()) return f;
  auto count = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(pool.size())));
  count = std::clamp<std::size_t>(count, 1, pool.size());
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t j = i + rng.below(pool.size() - i);
    std::swap(pool[i], pool[j]);
    long c = rng.between(1, 3) * (rng.below(2) == 0 ? 1 : -1);
    f.add_term(pool[i], c);
  }
  return f;
}

Matrix random_signed_permutation(int n, Rng& rng) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = 0; i + 1 < n; ++i) std::swap(perm[i], perm[i + rng.below(n - i)]);
  Matrix p(n, n);
  for (int i = 0; i < n; ++i) p(perm[i], i) = rng.below(2) == 0 ? 1 : -1;
  return p;
}

Matrix random_rotation(int n, Rng& rng) {
  Matrix a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Scalar v = Scalar::fraction(rng.between(-3, 3), rng.between(1, 3));
      a(i, j) = v;
      a(j, i) = -v;
    }
  }
  Matrix id = Matrix::identity(n);
  auto inv = inverse(id + a);
  if (!inv) throw InconsistencyError("I + A is singular for skew A");
  return (id - a) * *inv;
}

}  // namespace psct
