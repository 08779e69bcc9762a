#include "sefib/conic.hpp"

#include <numeric>
#include <set>
#include <unordered_set>

#include "parallel.hpp"
#include "sefib/error.hpp"

namespace sefib {

namespace {

BigInt isqrt_exact_or(const BigInt& v, bool& ok) {
  ok = false;
  if (v < 0) return 0;
  auto root = integer_nth_root(v, 2);
  if (!root) return 0;
  ok = true;
  return *root;
}

std::array<BigInt, 3> clear_denominators(const Rational& A, const Rational& B, const Rational& C) {
  const BigInt den = lcm(lcm(A.den(), B.den()), C.den());
  return {A.num() * (den / A.den()), B.num() * (den / B.den()), C.num() * (den / C.den())};
}

// Removes s-th power factors of gcd(a, b) found by trial division, plus a perfect s-th power cofactor.
BigInt removable_scale(BigInt g, int s) {
  const auto ss = static_cast<unsigned long>(s);
  BigInt lambda = 1;
  for (unsigned long p = 2; p < 1000; ++p) {
    const BigInt ps = pow(BigInt(p), ss);
    while (mpz_divisible_p(g.get_mpz_t(), ps.get_mpz_t())) {
      g /= ps;
      lambda *= p;
    }
  }
  if (auto root = integer_nth_root(g, ss)) lambda *= *root;
  return lambda;
}

// Scales (a, b) -> (l^s a, l^s b), y -> l y so a, b become integers of small content; y >= 0 for even s.
CurveWithPoints normalize_scaling(CurveWithPoints cwp) {
  const int s = cwp.curve.s;
  const auto ss = static_cast<unsigned long>(s);
  Rational lambda(lcm(cwp.curve.a.den(), cwp.curve.b.den()));
  const Rational a = cwp.curve.a * lambda.pow(ss);
  const Rational b = cwp.curve.b * lambda.pow(ss);
  const BigInt g = gcd(a.num(), b.num());
  lambda /= Rational(removable_scale(BigInt(abs(g)), s));
  cwp.curve.a *= lambda.pow(ss);
  cwp.curve.b *= lambda.pow(ss);
  for (auto& p : cwp.points) {
    p.y *= lambda;
    if (s % 2 == 0 && p.y.sign() < 0) p.y = -p.y;
  }
  return cwp;
}

// Within one height: lexicographic on |Y_k|, then on signs with + before -.
bool point_order_less(const ProjPoint& x, const ProjPoint& y) {
  for (std::size_t k = 0; k < 3; ++k) {
    const Rational ax = x[k].abs();
    const Rational ay = y[k].abs();
    if (ax != ay) return ax < ay;
  }
  for (std::size_t k = 0; k < 3; ++k) {
    const bool nx = x[k].sign() < 0;
    const bool ny = y[k].sign() < 0;
    if (nx != ny) return !nx;
  }
  return false;
}

}  // namespace

Rational ConicModel::evaluate(const ProjPoint& p) const {
  return A * p[0].pow(2) + B * p[1].pow(2) + C * p[2].pow(2);
}

ConicModel make_conic(Rational A, Rational B, Rational C, ProjPoint base) {
  if (A.is_zero() || B.is_zero() || C.is_zero()) throw MathError("conic coefficients must be nonzero");
  if (base.size() != 3) throw UsageError("conic base point must have three coordinates");
  ConicModel model{std::move(A), std::move(B), std::move(C), std::move(base)};
  if (!model.evaluate(model.base).is_zero()) throw MathError("base point is not on the conic");
  return model;
}

std::optional<ProjPoint> find_conic_point(const Rational& A, const Rational& B, const Rational& C, long height) {
  if (A.is_zero() || B.is_zero() || C.is_zero()) throw MathError("conic coefficients must be nonzero");
  const auto [a, b, c] = clear_denominators(A, B, C);
  const std::array<BigInt, 3> coef{a, b, c};

  // Solves coef[u] Y_u^2 + coef[v] Y_v^2 + coef[w] Y_w^2 = 0 for |Y_w| given Y_u, Y_v.
  auto solve_third = [&](std::size_t w, const BigInt& known) -> std::optional<BigInt> {
    BigInt q = -known;
    if (!mpz_divisible_p(q.get_mpz_t(), coef[w].get_mpz_t())) return std::nullopt;
    q /= coef[w];
    bool ok = false;
    BigInt root = isqrt_exact_or(q, ok);
    if (!ok) return std::nullopt;
    return root;
  };

  for (long h = 1; h <= height; ++h) {
    std::set<ProjPoint> found;
    auto consider = [&](const BigInt& y0, const BigInt& y1, const BigInt& y2) {
      const BigInt g = gcd(gcd(y0, y1), y2);
      if (g != 1) return;
      for (int s2 : {1, -1}) found.insert(ProjPoint({Rational(y0), Rational(y1), Rational(BigInt(s2 * y2))}));
    };
    const BigInt H(h);
    const BigInt H2 = H * H;
    // Exactly one coordinate pinned to height h; the others range over [-h, h] (pinned on the
    // first two) or (-h, h) (pinned on the last), so every height-h point is visited.
    for (long t = -h; t <= h; ++t) {
      const BigInt T(t);
      const BigInt T2 = T * T;
      if (auto y2 = solve_third(2, a * H2 + b * T2); y2 && *y2 <= H) consider(H, T, *y2);
      if (t > -h && t < h) {
        if (auto y2 = solve_third(2, a * T2 + b * H2); y2 && *y2 <= H) consider(T, H, *y2);
        if (auto y1 = solve_third(1, a * T2 + c * H2); y1 && *y1 < H) {
          consider(T, *y1, H);
          consider(T, BigInt(-*y1), H);
        }
      }
    }
    std::optional<ProjPoint> best;
    for (const auto& p : found) {
      if (coef[0] * p[0].num() * p[0].num() + coef[1] * p[1].num() * p[1].num() +
              coef[2] * p[2].num() * p[2].num() != 0) {
        continue;
      }
      if (!best || point_order_less(p, *best)) best = p;
    }
    if (best) return best;
  }
  return std::nullopt;
}

std::optional<ProjPoint> find_base_point(const FiberSystem& system, long height) {
  if (system.config.s != 2 || system.n() != 2) throw UsageError("find_base_point requires s = 2 and n = 2");
  const auto& eq = system.equations.front();
  return find_conic_point(eq.A, eq.B, eq.C, height);
}

ParamPoint parametrize(const ConicModel& model, std::pair<long, long> t) {
  if (t.first == 0 && t.second == 0) throw UsageError("direction must be nonzero");
  const ProjPoint& p = model.base;
  const std::size_t k = p.first_nonzero();
  std::vector<Rational> d(3, Rational(0));
  std::size_t slot = 0;
  for (std::size_t j = 0; j < 3; ++j) {
    if (j == k) continue;
    d[j] = Rational(slot++ == 0 ? t.first : t.second);
  }
  const std::array<const Rational*, 3> coef{&model.A, &model.B, &model.C};
  Rational fd = 0;
  Rational bilinear = 0;
  for (std::size_t j = 0; j < 3; ++j) {
    fd += *coef[j] * d[j] * d[j];
    bilinear += *coef[j] * p[j] * d[j];
  }
  if (bilinear.is_zero()) return {p, true};
  // F(P + lambda D) = 2 lambda B(P, D) + lambda^2 F(D): second root lambda = -2 B(P, D) / F(D).
  std::vector<Rational> q(3);
  for (std::size_t j = 0; j < 3; ++j) q[j] = fd * p[j] - Rational(2) * bilinear * d[j];
  return {ProjPoint(q), false};
}

std::vector<std::pair<long, long>> direction_sequence(std::size_t count) {
  std::vector<std::pair<long, long>> out;
  for (long h = 1; out.size() < count; ++h) {
    for (long p = 0; p <= h && out.size() < count; ++p) {
      for (long q = -h; q <= h && out.size() < count; ++q) {
        if (std::max(std::labs(p), std::labs(q)) != h) continue;
        if (p == 0 && q <= 0) continue;
        if (std::gcd(p, q) != 1) continue;
        out.emplace_back(p, q);
      }
    }
  }
  return out;
}

std::vector<CurveWithPoints> enumerate_curves(const Config& config, std::size_t count,
                                              const EnumerateOptions& options) {
  if (config.s != 2 || config.n() != 2) throw UsageError("enumerate_curves requires s = 2 and n = 2");
  std::vector<CurveWithPoints> out;
  if (count == 0) return out;

  const FiberSystem system = build_fiber(config);
  const auto base = find_base_point(system, options.search_height);
  if (!base) {
    throw MathError("no rational point on the fiber conic within height " + std::to_string(options.search_height));
  }
  const auto& eq = system.equations.front();
  const ConicModel model = make_conic(eq.A, eq.B, eq.C, *base);

  // Dedupe on the projective class [a : b]; curves with equal b/a through the same three
  // x-coordinates come from the same conic point up to sign.
  std::unordered_set<Rational> seen;
  auto accept = [&](const LiftResult& lift) {
    if (!lift.ok() || out.size() >= count) return;
    CurveWithPoints cwp = normalize_scaling(*lift.curve);
    if (!seen.insert(cwp.curve.b / cwp.curve.a).second) return;
    out.push_back(std::move(cwp));
  };
  accept(from_fiber_point(config, model.base));

  const std::size_t batch = std::max<std::size_t>(64, 16 * std::max(1U, options.workers));
  std::size_t tried = 0;
  while (out.size() < count && tried < options.max_directions) {
    const auto all = direction_sequence(tried + batch);
    std::vector<std::optional<LiftResult>> slot(batch);
    detail::for_each_block(batch, 8, options.workers, [&](std::size_t, std::size_t lo, std::size_t hi) {
      for (std::size_t k = lo; k < hi; ++k) {
        const ParamPoint pp = parametrize(model, all[tried + k]);
        if (pp.tangent) continue;
        slot[k] = from_fiber_point(config, pp.point);
      }
    });
    for (const auto& r : slot) {
      if (r) accept(*r);
    }
    tried += batch;
  }
  return out;
}

}  // namespace sefib
