#include "sefib/search.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include "parallel.hpp"
#include "sefib/error.hpp"

namespace sefib {

namespace {

// Candidate (u, v, w) enumerated as w-major, then u, then v over [-H, H]; zeros filtered later.
struct CandidateSpace {
  long height;
  std::uint64_t side;  // 2H + 1

  explicit CandidateSpace(long h) : height(h), side(static_cast<std::uint64_t>(2 * h + 1)) {}

  [[nodiscard]] std::uint64_t size() const { return static_cast<std::uint64_t>(height) * side * side; }

  void decode(std::uint64_t idx, long& u, long& v, long& w) const {
    v = static_cast<long>(idx % side) - height;
    idx /= side;
    u = static_cast<long>(idx % side) - height;
    w = static_cast<long>(idx / side) + 1;
  }
};

bool admissible(long u, long v, long w) {
  return u != 0 && v != 0 && std::gcd(std::gcd(u, v), w) == 1;
}

// alpha = p/q: alpha (a alpha^r + b) = p (u p^r + v q^r) / (w q^{r+1}).
struct ConditionKernel {
  BigInt p_pow_r1;  // p^{r+1}
  BigInt p_q_r;     // p q^r
  BigInt q_r1;      // q^{r+1}
  Rational alpha;

  ConditionKernel(const Rational& a, int r)
      : p_pow_r1(pow(a.num(), static_cast<unsigned long>(r) + 1)),
        p_q_r(a.num() * pow(a.den(), static_cast<unsigned long>(r))),
        q_r1(pow(a.den(), static_cast<unsigned long>(r) + 1)),
        alpha(a) {}

  [[nodiscard]] std::optional<Rational> witness(long u, long v, long w, int s) const {
    const BigInt num = BigInt(u) * p_pow_r1 + BigInt(v) * p_q_r;
    const Rational value(num, BigInt(w) * q_r1);
    return is_sth_power(value, static_cast<unsigned long>(s));
  }
};

std::vector<ConditionKernel> kernels_for(const Config& config) {
  std::vector<ConditionKernel> ks;
  ks.reserve(config.alphas.size());
  for (const auto& a : config.alphas) ks.emplace_back(a, config.r);
  return ks;
}

void require_search_input(const Config& config, long height) {
  if (height < 1) throw UsageError("search height must be >= 1");
  (void)make_config(config.r, config.s, config.alphas);
}

}  // namespace

SearchReport search_ab(const Config& config, long height, const SearchOptions& options) {
  require_search_input(config, height);
  const auto start = std::chrono::steady_clock::now();
  const CandidateSpace space(height);
  const auto kernels = kernels_for(config);
  const int s = config.s;

  constexpr std::size_t kBlock = 4096;
  const std::size_t total = space.size();
  const std::size_t blocks = (total + kBlock - 1) / kBlock;
  std::vector<std::vector<CurveWithPoints>> found(blocks);
  std::vector<std::uint64_t> admissible_count(blocks, 0);
  std::atomic<bool> interrupted{false};

  detail::for_each_block(total, kBlock, options.workers, [&](std::size_t b, std::size_t lo, std::size_t hi) {
    if (options.stop.stop_requested()) {
      interrupted = true;
      return;
    }
    for (std::size_t idx = lo; idx < hi; ++idx) {
      long u = 0, v = 0, w = 0;
      space.decode(idx, u, v, w);
      if (!admissible(u, v, w)) continue;
      ++admissible_count[b];
      std::vector<AffinePoint> pts;
      pts.reserve(kernels.size());
      bool all = true;
      for (const auto& k : kernels) {
        auto y = k.witness(u, v, w, s);
        if (!y) {
          all = false;
          break;
        }
        pts.push_back({k.alpha, *y});
      }
      if (!all) continue;
      // Re-verify through the family module before reporting.
      FamilyCurve curve{config.r, s, Rational(BigInt(u), BigInt(w)), Rational(BigInt(v), BigInt(w))};
      found[b].push_back(make_curve_with_points(std::move(curve), std::move(pts)));
    }
  });

  SearchReport report{config, height, {}, 0, {}, !interrupted.load()};
  for (std::size_t b = 0; b < blocks; ++b) {
    report.search_space_size += admissible_count[b];
    for (auto& h : found[b]) report.hits.push_back(std::move(h));
  }
  std::stable_sort(report.hits.begin(), report.hits.end(), [](const CurveWithPoints& x, const CurveWithPoints& y) {
    const BigInt ax = abs(x.curve.a.num());
    const BigInt ay = abs(y.curve.a.num());
    if (ax != ay) return ax < ay;
    if (x.curve.a != y.curve.a) return x.curve.a < y.curve.a;
    return x.curve.b < y.curve.b;
  });
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

SquareClassTable count_square_classes(const Config& config, long height, unsigned workers) {
  require_search_input(config, height);
  const CandidateSpace space(height);
  const auto kernels = kernels_for(config);
  const std::size_t m = kernels.size();

  constexpr std::size_t kBlock = 4096;
  const std::size_t total = space.size();
  const std::size_t blocks = (total + kBlock - 1) / kBlock;
  struct Partial {
    std::uint64_t admissible = 0;
    std::vector<std::uint64_t> single;
    std::vector<std::uint64_t> prefix;
  };
  std::vector<Partial> partial(blocks, Partial{0, std::vector<std::uint64_t>(m, 0), std::vector<std::uint64_t>(m, 0)});

  detail::for_each_block(total, kBlock, workers, [&](std::size_t b, std::size_t lo, std::size_t hi) {
    auto& part = partial[b];
    for (std::size_t idx = lo; idx < hi; ++idx) {
      long u = 0, v = 0, w = 0;
      space.decode(idx, u, v, w);
      if (!admissible(u, v, w)) continue;
      ++part.admissible;
      bool prefix_ok = true;
      for (std::size_t i = 0; i < m; ++i) {
        const bool pass = kernels[i].witness(u, v, w, config.s).has_value();
        if (pass) ++part.single[i];
        prefix_ok = prefix_ok && pass;
        if (prefix_ok) ++part.prefix[i];
      }
    }
  });

  SquareClassTable table;
  table.per_condition.assign(m, 0);
  table.cumulative.assign(m, 0);
  for (const auto& part : partial) {
    table.search_space_size += part.admissible;
    for (std::size_t i = 0; i < m; ++i) {
      table.per_condition[i] += part.single[i];
      table.cumulative[i] += part.prefix[i];
    }
  }
  return table;
}

}  // namespace sefib
