#include "taured/series.hpp"

#include "taured/error.hpp"

namespace taured {

SeriesKind parse_series_kind(const std::string& s) {
  if (s == "A" || s == "a") return SeriesKind::A;
  if (s == "D" || s == "d") return SeriesKind::D;
  throw Error(ErrorKind::BadIndex, "unknown series kind '" + s + "' (expected A or D)");
}

char series_letter(SeriesKind k) { return k == SeriesKind::A ? 'A' : 'D'; }

AlgebraPtr series_algebra(SeriesKind kind, int n, Field field) {
  const int least = kind == SeriesKind::A ? 1 : 3;
  if (n < least)
    throw Error(ErrorKind::BadIndex, std::string(1, series_letter(kind)) + "_" + std::to_string(n) +
                                         " is undefined (need n >= " + std::to_string(least) + ")");
  Quiver q;
  for (int i = 1; i <= n; ++i) q.add_vertex(std::to_string(i));
  const int spine_end = kind == SeriesKind::A ? 2 : 4;
  for (int k = n; k >= spine_end; --k) q.add_arrow("a" + std::to_string(k), std::to_string(k), std::to_string(k - 1));
  if (kind == SeriesKind::D) {
    q.add_arrow("b1", "3", "1");
    q.add_arrow("b2", "3", "2");
  }
  std::vector<Relation> rels;
  for (std::size_t x = 0; x < q.num_arrows(); ++x)
    for (std::size_t y = 0; y < q.num_arrows(); ++y)
      if (q.arrow(x).target == q.arrow(y).source)
        rels.push_back(Relation{{{field.one(), make_path(q, {x, y})}}});
  return build_algebra(q, rels, kDefaultMaxLength, field);
}

QuadInt QuadInt::pow(unsigned e) const {
  QuadInt result(1, 0), base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

std::string QuadInt::to_string() const { return a_.get_str() + " + " + b_.get_str() + "*sqrt(5)"; }

mpz_class closed_form(SeriesKind kind, int n) {
  const QuadInt plus(1, 1), minus(1, -1);
  QuadInt value;
  if (kind == SeriesKind::A) {
    if (n < 1) throw Error(ErrorKind::BadIndex, "closed form for A needs n >= 1");
    const unsigned e = static_cast<unsigned>(n + 1);
    value = (plus.pow(e) - minus.pow(e)).over_sqrt5() * mpq_class(mpz_class(1), mpz_class(mpz_class(1) << e));
  } else {
    if (n < 3) throw Error(ErrorKind::BadIndex, "closed form for D needs n >= 3");
    const unsigned e = static_cast<unsigned>(n - 1);
    const QuadInt c1(-1, 2), c2(1, 2);
    value = (c1 * plus.pow(e) + c2 * minus.pow(e)).over_sqrt5() * mpq_class(mpz_class(1), mpz_class(mpz_class(1) << e));
  }
  if (value.b() != 0 || value.a().get_den() != 1)
    throw Error(ErrorKind::NonIntegerResult, "closed form evaluated to " + value.to_string());
  return value.a().get_num();
}

}  // namespace taured
