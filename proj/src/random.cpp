#include "skolemff/random.hpp"

#include "skolemff/factor.hpp"

namespace skolemff {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Constant random_constant(const Field& f, Rng& rng, long bound) {
  if (f.char_zero()) {
    std::vector<Rational> q;
    for (std::size_t j = 0; j < f.dimension(); ++j) q.emplace_back(uniform(rng, -bound, bound));
    return Constant::from_coordinates(f, std::move(q));
  }
  const std::uint64_t p = f.characteristic();
  std::vector<std::uint64_t> m;
  for (std::size_t j = 0; j < f.dimension(); ++j) m.push_back(std::uniform_int_distribution<std::uint64_t>(0, p - 1)(rng));
  return Constant::from_coordinates(f, std::move(m));
}

Constant random_nonzero_constant(const Field& f, Rng& rng, long bound) {
  for (;;) {
    Constant c = random_constant(f, rng, bound);
    if (!c.is_zero()) return c;
  }
}

Polynomial random_poly(const Field& f, long degree, Rng& rng, long bound) {
  std::vector<Constant> c;
  for (long i = 0; i < degree; ++i) c.push_back(random_constant(f, rng, bound));
  c.push_back(random_nonzero_constant(f, rng, bound));
  return Polynomial(f, std::move(c));
}

Polynomial random_monic(const Field& f, long degree, Rng& rng, long bound) {
  return random_poly(f, degree, rng, bound).monic();
}

RationalFunction random_ratfunc(const Field& f, long max_degree, Rng& rng, long bound) {
  Polynomial num = random_poly(f, uniform(rng, 0, max_degree), rng, bound);
  Polynomial den = random_monic(f, uniform(rng, 0, max_degree), rng, bound);
  return RationalFunction(num, den);
}

RationalFunction random_nonconstant(const Field& f, long max_degree, Rng& rng, long bound) {
  for (;;) {
    RationalFunction r = random_ratfunc(f, std::max(1L, max_degree), rng, bound);
    if (!r.is_constant()) return r;
  }
}

Polynomial random_irreducible(const Field& f, long degree, Rng& rng) {
  for (;;) {
    Polynomial p = random_monic(f, degree, rng);
    if (is_irreducible(p)) return p;
  }
}

PlaceSet random_place_set(const Field& f, long finite, Rng& rng, bool with_infinity) {
  PlaceSet s;
  if (with_infinity) s.insert(Place::infinity());
  while (static_cast<long>(s.size()) < finite + (with_infinity ? 1 : 0))
    s.insert(Place::finite(random_irreducible(f, uniform(rng, 1, 2), rng), true));
  return s;
}

}  // namespace skolemff
