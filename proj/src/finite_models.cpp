#include "twistcy/finite_models.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "twistcy/errors.hpp"

namespace twistcy::finite {

namespace {

bool parity(Point x) { return std::popcount(x) & 1; }

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

std::string bits(Point x, int n) {
  std::string s;
  for (int i = 0; i < n; ++i) s += ((x >> i) & 1u) ? '1' : '0';
  return s;
}

std::size_t binomial(int n, int k) {
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

FnTable from_mask(int n, std::uint32_t mask) {
  FnTable f = FnTable::zero(n);
  for (Point x = 0; x < (Point{1} << n); ++x)
    if ((mask >> x) & 1u) f.values.set(x);
  return f;
}

}  // namespace

std::vector<Point> Z2Space::points() const {
  std::vector<Point> pts;
  for (Point i = 0; i < size(); ++i) pts.push_back(i ^ basepoint);
  return pts;
}

// ---------------------------------------------------------------- FnTable

FnTable FnTable::zero(int n) { return {n, gf2::BitVector(std::size_t{1} << n)}; }

FnTable FnTable::constant(int n, bool c) {
  FnTable f = zero(n);
  if (c)
    for (Point x = 0; x < (Point{1} << n); ++x) f.values.set(x);
  return f;
}

FnTable FnTable::delta(int n, const std::vector<Point>& set) {
  FnTable f = zero(n);
  for (Point p : set) f.values.flip(p);
  return f;
}

FnTable FnTable::line(int n, Point p, Point v) {
  if (v == 0) return zero(n);
  return delta(n, {p, p ^ v});
}

FnTable FnTable::monomial(int n, Point subset, Point shift) {
  FnTable f = zero(n);
  for (Point x = 0; x < (Point{1} << n); ++x)
    if (((x ^ shift) & subset) == subset) f.values.set(x);
  return f;
}

FnTable& FnTable::operator+=(const FnTable& o) {
  values ^= o.values;
  return *this;
}

gf2::BitVector algebraic_normal_form(const FnTable& f) {
  gf2::BitVector a = f.values;
  const Point size = Point{1} << f.n;
  for (int i = 0; i < f.n; ++i) {
    for (Point x = 0; x < size; ++x) {
      if ((x >> i) & 1u) a.set(x, a.get(x) != a.get(x ^ (Point{1} << i)));
    }
  }
  return a;
}

int degree(const FnTable& f) {
  int d = -1;
  for (auto s : algebraic_normal_form(f).ones()) d = std::max(d, std::popcount(static_cast<Point>(s)));
  return d;
}

std::optional<AffineParts> affine_decompose(const FnTable& f) {
  const auto anf = algebraic_normal_form(f);
  AffineParts parts;
  for (auto s : anf.ones()) {
    const auto m = static_cast<Point>(s);
    if (std::popcount(m) > 1) return std::nullopt;
    if (m == 0) {
      parts.constant = true;
    } else {
      parts.linear |= m;
    }
  }
  return parts;
}

VerificationReport delta_w_characterization(int n) {
  if (n < 1 || n > 4) throw InputError("n must be in 1..4");
  VerificationReport rep;
  rep.title = "Affine functions are delta_W or 1 + delta_W on Z2^" + std::to_string(n);
  const Point size = Point{1} << n;
  const std::uint32_t full = size == 32 ? ~0u : (std::uint32_t{1} << size) - 1;

  std::set<std::uint32_t> supports{0, full};
  for (Point l = 1; l < size; ++l) {
    for (int a = 0; a < 2; ++a) {
      std::uint32_t w = 0;
      for (Point x = 0; x < size; ++x)
        if (parity(l & x) == (a == 1)) w |= std::uint32_t{1} << x;
      supports.insert(w);
    }
  }

  auto& charac = rep.add("affine iff the support is empty, everything, or an affine hyperplane");
  auto& recon = rep.add("linear part and constant reproduce f pointwise");
  Check* four = n <= 3 ? &rep.add("affine iff f(x)+f(y)+f(z)+f(x+y+z) = 0 for all x, y, z") : nullptr;
  const std::uint64_t count = std::uint64_t{1} << size;
  for (std::uint64_t m = 0; m < count; ++m) {
    const auto f = from_mask(n, static_cast<std::uint32_t>(m));
    const auto parts = affine_decompose(f);
    const bool listed = supports.count(static_cast<std::uint32_t>(m)) > 0;
    charac.record(parts.has_value() == listed, "support mask " + std::to_string(m));
    if (parts) {
      bool ok = true;
      for (Point x = 0; x < size; ++x) ok = ok && (f(x) == (parity(parts->linear & x) != parts->constant));
      recon.record(ok, "support mask " + std::to_string(m));
    }
    if (four) {
      bool additive = true;
      for (Point x = 0; x < size && additive; ++x)
        for (Point y = 0; y < size && additive; ++y)
          for (Point z = 0; z < size && additive; ++z)
            additive = (f(x) ^ f(y) ^ f(z) ^ f(x ^ y ^ z)) == 0;
      four->record(additive == parts.has_value(), "support mask " + std::to_string(m));
    }
  }
  rep.facts["affine_functions"] = std::to_string(supports.size());
  return rep;
}

// ---------------------------------------------------------------- L^2

AffineQuotient::AffineQuotient(int n) : n_(n), affine_(std::size_t{1} << n) {
  affine_.insert(FnTable::constant(n, true).values);
  for (int i = 0; i < n; ++i) affine_.insert(FnTable::monomial(n, Point{1} << i).values);
}

std::size_t AffineQuotient::dimension() const { return affine_.ambient_dimension() - affine_.dimension(); }

VerificationReport check_l2_structure() {
  VerificationReport rep;
  rep.title = "Quadratic-function quotient Maps/Aff";
  constexpr int n = 3;
  constexpr Point size = 8;
  const AffineQuotient q(n);
  rep.facts["dim_maps"] = std::to_string(size);
  rep.facts["dim_aff"] = std::to_string(size - q.dimension());
  rep.facts["dim_l2"] = std::to_string(q.dimension());
  rep.add("dim Maps/Aff = 4 for n = 3").record(q.dimension() == 4, "dim " + std::to_string(q.dimension()));

  auto& kernel = rep.add("kernel of Maps -> Maps/Aff is exactly the affine functions");
  for (std::uint32_t m = 0; m < (1u << size); ++m) {
    const auto f = from_mask(n, m);
    kernel.record(q.class_of(f).none() == affine_decompose(f).has_value(), "support mask " + std::to_string(m));
  }

  std::vector<gf2::BitVector> cls(size);
  for (Point v = 0; v < size; ++v) cls[v] = q.class_of(FnTable::line(n, 0, v));

  rep.add("line through nothing gives the zero class")
      .record(cls[0].none(), "v = 0 class is nonzero");

  auto& well = rep.add("class of a line depends only on its direction");
  for (Point v = 0; v < size; ++v)
    for (Point p = 0; p < size; ++p)
      well.record(q.class_of(FnTable::line(n, p, v)) == cls[v], "v=" + bits(v, n) + " p=" + bits(p, n));

  auto& linear = rep.add("v -> [delta_Z_v] is additive");
  for (Point v = 0; v < size; ++v) {
    for (Point w = 0; w < size; ++w) {
      auto sum = cls[v];
      sum ^= cls[w];
      linear.record(cls[v ^ w] == sum, "v=" + bits(v, n) + " w=" + bits(w, n));
    }
  }

  auto& inj = rep.add("v -> [delta_Z_v] is injective");
  gf2::Subspace image(size);
  for (Point v = 1; v < size; ++v) {
    inj.record(cls[v].any(), "v=" + bits(v, n));
    image.insert(cls[v]);
  }
  inj.record(image.dimension() == n, "image dimension " + std::to_string(image.dimension()));

  auto& coker = rep.add("cokernel is Z2 generated by the class of any point");
  for (Point p = 0; p < size; ++p) {
    auto with_point = image;
    const bool fresh = with_point.insert(q.class_of(FnTable::delta(n, {p})));
    coker.record(fresh && with_point.dimension() == q.dimension(), "q=" + bits(p, n));
  }

  auto& par = rep.add("two lines have equal classes iff they are parallel");
  std::vector<std::pair<Point, Point>> lines;
  for (Point p = 0; p < size; ++p)
    for (Point v = 1; v < size; ++v)
      if (p < (p ^ v)) lines.emplace_back(p, v);
  for (const auto& [p1, v1] : lines) {
    for (const auto& [p2, v2] : lines) {
      const bool equal = q.class_of(FnTable::line(n, p1, v1)) == q.class_of(FnTable::line(n, p2, v2));
      par.record(equal == (v1 == v2),
                 "{" + bits(p1, n) + "," + bits(p1 ^ v1, n) + "} vs {" + bits(p2, n) + "," + bits(p2 ^ v2, n) + "}");
    }
  }
  rep.facts["lines"] = std::to_string(lines.size());

  const AffineQuotient q2(2);
  auto& plane = rep.add("n = 2: Maps/Aff = Z2 generated by any point");
  plane.record(q2.dimension() == 1, "dim " + std::to_string(q2.dimension()));
  const auto first = q2.class_of(FnTable::delta(2, {0}));
  for (Point p = 0; p < 4; ++p) {
    const auto c = q2.class_of(FnTable::delta(2, {p}));
    plane.record(c.any() && c == first, "q=" + bits(p, 2));
  }
  for (std::uint32_t m = 0; m < 16; ++m) {
    const auto f = from_mask(2, m);
    plane.record(q2.class_of(f).none() == affine_decompose(f).has_value(), "support mask " + std::to_string(m));
  }
  return rep;
}

// ---------------------------------------------------------------- filtration

namespace {

gf2::Subspace degree_space(int n, int p, Point shift) {
  gf2::Subspace k(std::size_t{1} << n);
  for (Point s = 0; s < (Point{1} << n); ++s)
    if (std::popcount(s) <= p) k.insert(FnTable::monomial(n, s, shift).values);
  return k;
}

}  // namespace

std::vector<std::size_t> filtration_dimensions(int n, Point basepoint) {
  if (n < 1 || n > 4) throw InputError("n must be in 1..4");
  std::vector<std::size_t> dims;
  for (int p = 0; p <= n; ++p) dims.push_back(degree_space(n, p, basepoint).dimension());
  return dims;
}

VerificationReport filtration_check(int n) {
  if (n < 2 || n > 4) throw InputError("filtration check needs n in {2, 3, 4}");
  VerificationReport rep;
  rep.title = "Degree filtration on Maps(Z2^" + std::to_string(n) + ", Z2)";
  const auto dims = filtration_dimensions(n);

  std::vector<std::size_t> quotients;
  auto& cumulative = rep.add("dim K^p = sum of C(n, i) for i <= p");
  auto& quotient = rep.add("dim K^p / K^(p-1) = C(n, p)");
  std::size_t expected = 0;
  for (int p = 0; p <= n; ++p) {
    expected += binomial(n, p);
    const auto pi = static_cast<std::size_t>(p);
    cumulative.record(dims[pi] == expected, "p=" + std::to_string(p) + " dim " + std::to_string(dims[pi]));
    quotients.push_back(dims[pi] - (p ? dims[pi - 1] : 0));
    quotient.record(quotients.back() == binomial(n, p), "p=" + std::to_string(p));
  }
  rep.add("K^n is every map").record(dims.back() == (std::size_t{1} << n), "dim " + std::to_string(dims.back()));

  auto& nested = rep.add("K^(p-1) is contained in K^p");
  for (int p = 1; p <= n; ++p) {
    const auto upper = degree_space(n, p, 0);
    for (Point s = 0; s < (Point{1} << n); ++s)
      if (std::popcount(s) < p) nested.record(upper.contains(FnTable::monomial(n, s).values), "p=" + std::to_string(p));
  }

  auto& base = rep.add("filtration is independent of the basepoint");
  for (int p = 0; p <= n; ++p) {
    const auto at_origin = degree_space(n, p, 0);
    for (Point c = 1; c < (Point{1} << n); ++c) {
      base.record(degree_space(n, p, c).same_span(at_origin), "p=" + std::to_string(p) + " basepoint " + bits(c, n));
    }
  }
  rep.facts["cumulative_dims"] = join(dims);
  rep.facts["quotient_dims"] = join(quotients);
  return rep;
}

// ---------------------------------------------------------------- identity

const char* to_string(LineCase c) {
  switch (c) {
    case LineCase::Dependent: return "dependent directions";
    case LineCase::Concurrent: return "coplanar concurrent lines";
    case LineCase::ThreePoint: return "coplanar lines meeting in three points";
    case LineCase::Skew: return "one line off the plane";
  }
  return "?";
}

LineCase classify_lines(Point e1, Point e2, Point f1, Point f2) {
  if (e1 == 0 || e2 == 0 || e1 == e2) return LineCase::Dependent;
  auto in_plane = [&](Point x) { return x == 0 || x == e1 || x == e2 || x == (e1 ^ e2); };
  if (!in_plane(f1) || !in_plane(f2)) return LineCase::Skew;
  const std::array<std::array<Point, 2>, 3> lines{{{0, e1 ^ e2}, {f1, f1 ^ e1}, {f2, f2 ^ e2}}};
  for (Point x : lines[0]) {
    auto on = [x](const std::array<Point, 2>& l) { return l[0] == x || l[1] == x; };
    if (on(lines[1]) && on(lines[2])) return LineCase::Concurrent;
  }
  return LineCase::ThreePoint;
}

FnTable beta_alpha(Point e1, Point e2, Point f1, Point f2) {
  return FnTable::delta(3, {0, e1 ^ e2, f1, f1 ^ e1, f2, f2 ^ e2});
}

std::uint32_t wedge(Point u, Point w) {
  static constexpr std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  std::uint32_t out = 0;
  for (std::size_t b = 0; b < pairs.size(); ++b) {
    const auto [i, j] = pairs[b];
    const bool c = (((u >> i) & (w >> j)) ^ ((u >> j) & (w >> i))) & 1u;
    if (c) out |= 1u << b;
  }
  return out;
}

std::uint32_t contract_volume(Point l) {
  std::uint32_t out = 0;
  if (l & 1u) out |= 4u;  // x1 -> x2^x3
  if (l & 2u) out |= 2u;  // x2 -> x1^x3
  if (l & 4u) out |= 1u;  // x3 -> x1^x2
  return out;
}

std::uint32_t beta_two_form(Point e1, Point e2, Point f1, Point f2) {
  return wedge(e1, e2) ^ wedge(e1, f1) ^ wedge(e2, f2);
}

VerificationReport beta_identity_check() {
  VerificationReport rep;
  rep.title = "Trilinear identity: Lin(alpha) contracted with the volume form";
  auto& affine = rep.add("alpha is affine");
  auto& identity = rep.add("contraction of the volume form equals e1^e2 + e1^f1 + e2^f2");
  std::map<LineCase, std::size_t> tally;
  std::map<LineCase, std::size_t> passed;
  for (Point e1 = 0; e1 < 8; ++e1)
    for (Point e2 = 0; e2 < 8; ++e2)
      for (Point f1 = 0; f1 < 8; ++f1)
        for (Point f2 = 0; f2 < 8; ++f2) {
          const std::string w = "(" + bits(e1, 3) + "," + bits(e2, 3) + "," + bits(f1, 3) + "," + bits(f2, 3) + ")";
          const auto parts = affine_decompose(beta_alpha(e1, e2, f1, f2));
          affine.record(parts.has_value(), w);
          const bool ok = parts && contract_volume(parts->linear) == beta_two_form(e1, e2, f1, f2);
          identity.record(ok, w);
          const auto c = classify_lines(e1, e2, f1, f2);
          ++tally[c];
          if (ok) ++passed[c];
        }
  for (auto c : {LineCase::Dependent, LineCase::Concurrent, LineCase::ThreePoint, LineCase::Skew}) {
    auto& check = rep.add(std::string("case: ") + to_string(c));
    check.cases = tally[c];
    check.failures = tally[c] - passed[c];
    rep.facts[std::string("tuples: ") + to_string(c)] = std::to_string(tally[c]);
  }
  return rep;
}

// ---------------------------------------------------------------- GL(3)

Point Linear3::apply(Point x) const {
  Point y = 0;
  for (std::size_t i = 0; i < 3; ++i)
    if ((x >> i) & 1u) y ^= columns[i];
  return y;
}

bool Linear3::invertible() const {
  std::set<Point> image;
  for (Point x = 0; x < 8; ++x) image.insert(apply(x));
  return image.size() == 8;
}

Linear3 Linear3::inverse() const {
  if (!invertible()) throw InputError("matrix is singular");
  Linear3 inv;
  for (Point x = 0; x < 8; ++x) {
    const Point y = apply(x);
    for (std::size_t i = 0; i < 3; ++i)
      if (y == (Point{1} << i)) inv.columns[i] = x;
  }
  return inv;
}

std::uint32_t Linear3::apply_two_form(std::uint32_t w) const {
  static constexpr std::array<std::pair<std::size_t, std::size_t>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  std::uint32_t out = 0;
  for (std::size_t b = 0; b < 3; ++b)
    if ((w >> b) & 1u) out ^= wedge(columns[pairs[b].first], columns[pairs[b].second]);
  return out;
}

VerificationReport beta_equivariance_check(std::uint64_t seed, int samples) {
  VerificationReport rep;
  rep.title = "GL(3, Z2) equivariance of the trilinear identity";
  rep.facts["seed"] = std::to_string(seed);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Point> coord(0, 7);
  auto& alpha = rep.add("alpha of the transformed tuple is alpha composed with the inverse");
  auto& form = rep.add("two-form of the transformed tuple is the pushed-forward two-form");
  auto& lin = rep.add("contraction of the new linear part is the pushed-forward contraction");
  for (int s = 0; s < samples; ++s) {
    Linear3 a;
    do {
      a.columns = {coord(rng), coord(rng), coord(rng)};
    } while (!a.invertible());
    const auto inv = a.inverse();
    const std::string m = "A=(" + bits(a.columns[0], 3) + "," + bits(a.columns[1], 3) + "," + bits(a.columns[2], 3) + ")";
    for (Point e1 = 0; e1 < 8; ++e1)
      for (Point e2 = 0; e2 < 8; ++e2)
        for (Point f1 = 0; f1 < 8; ++f1)
          for (Point f2 = 0; f2 < 8; ++f2) {
            const auto before = beta_alpha(e1, e2, f1, f2);
            const auto after = beta_alpha(a.apply(e1), a.apply(e2), a.apply(f1), a.apply(f2));
            bool pull = true;
            for (Point x = 0; x < 8; ++x) pull = pull && after(x) == before(inv.apply(x));
            alpha.record(pull, m);
            form.record(beta_two_form(a.apply(e1), a.apply(e2), a.apply(f1), a.apply(f2)) ==
                            a.apply_two_form(beta_two_form(e1, e2, f1, f2)),
                        m);
            const auto l0 = affine_decompose(before);
            const auto l1 = affine_decompose(after);
            lin.record(l0 && l1 && contract_volume(l1->linear) == a.apply_two_form(contract_volume(l0->linear)), m);
          }
  }
  return rep;
}

}  // namespace twistcy::finite
