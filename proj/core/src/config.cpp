#include "sefib/config.hpp"

#include <sstream>

#include "sefib/error.hpp"
#include "sefib/family.hpp"

namespace sefib {

const char* to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::too_few: return "too_few";
    case Violation::Kind::zero_entry: return "zero_entry";
    case Violation::Kind::duplicate: return "duplicate";
    case Violation::Kind::power_collision: return "power_collision";
  }
  return "unknown";
}

std::string Violation::describe(int r) const {
  std::ostringstream os;
  switch (kind) {
    case Kind::too_few: os << "need at least two alphas"; break;
    case Kind::zero_entry: os << "alpha[" << i << "] is zero"; break;
    case Kind::duplicate: os << "alpha[" << i << "] == alpha[" << j << "]"; break;
    case Kind::power_collision:
      os << "alpha[" << i << "]^" << r << " == alpha[" << j << "]^" << r;
      break;
  }
  return os.str();
}

ConfigVerdict validate(int r, int s, const std::vector<Rational>& alphas) {
  require_family_params(r, s);
  if (alphas.empty()) throw UsageError("configuration has no alphas");

  ConfigVerdict verdict;
  verdict.r = r;
  if (alphas.size() < 2) verdict.violations.push_back({Violation::Kind::too_few, 0, 0});
  std::vector<Rational> powers;
  powers.reserve(alphas.size());
  for (const auto& a : alphas) powers.push_back(a.pow(static_cast<unsigned long>(r)));

  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (alphas[i].is_zero()) verdict.violations.push_back({Violation::Kind::zero_entry, i, i});
  }
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    for (std::size_t j = i + 1; j < alphas.size(); ++j) {
      if (alphas[i] == alphas[j]) {
        verdict.violations.push_back({Violation::Kind::duplicate, i, j});
      } else if (powers[i] == powers[j]) {
        verdict.violations.push_back({Violation::Kind::power_collision, i, j});
      }
    }
  }
  if (verdict.violations.empty()) verdict.config = Config{r, s, alphas};
  return verdict;
}

Config make_config(int r, int s, std::vector<Rational> alphas) {
  auto verdict = validate(r, s, alphas);
  if (!verdict.valid()) {
    std::string msg = "invalid configuration:";
    for (const auto& v : verdict.violations) msg += " " + v.describe(r) + ";";
    throw MathError(msg);
  }
  return std::move(*verdict.config);
}

const char* to_string(Regime regime) {
  switch (regime) {
    case Regime::genus_zero: return "GENUS_ZERO";
    case Regime::genus_one: return "GENUS_ONE";
    case Regime::genus_ge_two: return "GENUS_GE_TWO";
  }
  return "unknown";
}

Classification classify(int s, int n) {
  if (s < 2) throw UsageError("classify requires s >= 2");
  if (n < 2) throw UsageError("classify requires n >= 2");
  const int n0 = s == 2 ? 4 : 3;
  if (s == 2 && n == 2) return {Regime::genus_zero, n0};
  if ((s == 2 && n == 3) || (s == 3 && n == 2)) return {Regime::genus_one, n0};
  return {Regime::genus_ge_two, n0};
}

}  // namespace sefib
