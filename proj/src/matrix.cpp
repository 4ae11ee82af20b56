#include "npenta/matrix.hpp"

#include <random>

#include "npenta/oracle.hpp"

namespace npenta {

NearlyPentaMatrix<Rational> gen_random(Index n, std::uint64_t seed, bool ensure_nonsingular) {
  NearlyPentaMatrix<Rational> m(n);
  std::mt19937_64 engine(seed);
  std::uniform_int_distribution<int> entry(-9, 9);
  const auto fill = [&](Band<Rational>& band) {
    for (Index i = band.first(); i <= band.last(); ++i) band(i) = Rational(entry(engine));
  };
  while (true) {
    fill(m.d_band());
    fill(m.a_band());
    fill(m.a_tilde_band());
    fill(m.b_band());
    fill(m.b_tilde_band());
    m.s() = Rational(entry(engine));
    m.t() = Rational(entry(engine));
    if (!ensure_nonsingular || !dense_det(to_dense(m)).is_zero()) return m;
  }
}

}  // namespace npenta
