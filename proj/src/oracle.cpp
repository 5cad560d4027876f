#include "seaweed/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace seaweed {

SkewForm kirillov_matrix(const LieData& lie, const Functional& f) {
  const int m = lie.dimension;
  if (static_cast<int>(f.coefficients.size()) != m) throw std::invalid_argument("functional length mismatch");
  SkewForm form;
  for (const auto& row : lie.brackets)
    for (const auto& vec : row)
      for (const auto& [k, c] : vec) mpz_lcm(form.scale.get_mpz_t(), form.scale.get_mpz_t(), c.get_den_mpz_t());
  form.matrix.assign(m, std::vector<mpz_class>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      mpz_class s = 0;
      for (const auto& [k, c] : lie.brackets[i][j]) s += f.coefficients[k] * c.get_num() * (form.scale / c.get_den());
      form.matrix[i][j] = s;
      form.matrix[j][i] = -s;
    }
  }
  return form;
}

FunctionalSampler::FunctionalSampler(std::uint64_t seed, std::int64_t range)
    : gen_(seed), span_(static_cast<std::uint64_t>(2 * range + 1)), range_(range) {
  if (range < 0) throw std::invalid_argument("negative sampling range");
}

Functional FunctionalSampler::draw(int dimension) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span_;
  Functional f;
  f.coefficients.reserve(dimension);
  for (int k = 0; k < dimension; ++k) {
    std::uint64_t x;
    do x = gen_();
    while (x >= limit);
    f.coefficients.emplace_back(static_cast<long>(static_cast<std::int64_t>(x % span_) - range_));
  }
  return f;
}

int index_oracle(const LieData& lie, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  const int m = lie.dimension;
  FunctionalSampler sampler(seed);
  int best = m;
  for (int t = 0; t < trials && best > m % 2; ++t) {
    const auto form = kirillov_matrix(lie, sampler.draw(m));
    best = std::min(best, m - rank_exact(form.matrix));
  }
  return best;
}

OracleError::OracleError(std::string code, const std::string& what)
    : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

namespace {

RatMatrix form_values(const LieData& lie, const Functional& f) {
  const int m = lie.dimension;
  RatMatrix k(m, RatVector(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (const auto& [l, c] : lie.brackets[i][j]) k[i][j] += c * f.coefficients[l];
  return k;
}

}  // namespace

RatVector principal_element(const LieData& lie, const Functional& f) {
  const int m = lie.dimension;
  if (static_cast<int>(f.coefficients.size()) != m) throw std::invalid_argument("functional length mismatch");
  const RatMatrix k = form_values(lie, f);
  RatMatrix kt(m, RatVector(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) kt[j][i] = k[i][j];
  RatVector rhs(f.coefficients.begin(), f.coefficients.end());
  auto c = solve_unique(kt, rhs);
  if (!c) throw OracleError("NOT_FROBENIUS_FUNCTIONAL", "the Kirillov form of f is degenerate");
  for (int j = 0; j < m; ++j) {
    mpq_class s = 0;
    for (int i = 0; i < m; ++i) s += (*c)[i] * k[i][j];
    if (s != rhs[j]) throw std::logic_error("principal element residual is nonzero");
  }
  return *c;
}

RatMatrix ad_matrix(const LieData& lie, const RatVector& c) {
  const int m = lie.dimension;
  RatMatrix a(m, RatVector(m));
  for (int i = 0; i < m; ++i) {
    if (c[i] == 0) continue;
    for (int j = 0; j < m; ++j)
      for (const auto& [k, v] : lie.brackets[i][j]) a[k][j] += c[i] * v;
  }
  return a;
}

namespace {

RatMatrix shifted(const RatMatrix& a, int k) {
  RatMatrix b = a;
  for (std::size_t i = 0; i < b.size(); ++i) b[i][i] -= k;
  return b;
}

// 0, 1, -1, 2, -2, ... restricted to [lo, hi].
std::vector<int> search_order(int lo, int hi) {
  std::vector<int> order;
  if (lo <= 0 && 0 <= hi) order.push_back(0);
  const int reach = std::max(std::abs(lo), std::abs(hi));
  for (int d = 1; d <= reach; ++d) {
    if (d >= lo && d <= hi) order.push_back(d);
    if (-d >= lo && -d <= hi) order.push_back(-d);
  }
  return order;
}

int algebraic_multiplicity(const RatMatrix& a, int k, int geometric) {
  const RatMatrix b = shifted(a, k);
  RatMatrix p = b;
  int prev = geometric;
  for (;;) {
    p = multiply(p, b);
    const int nu = nullity_exact(p);
    if (nu == prev) return prev;
    prev = nu;
  }
}

}  // namespace

SpectrumReport ad_spectrum(const LieData& lie, const SpectrumOptions& options) {
  const int m = lie.dimension;
  if (index_oracle(lie, options.trials, options.seed) != 0) {
    throw OracleError("NOT_FROBENIUS", "the algebra has positive index");
  }

  SpectrumReport report;
  report.dimension = m;
  FunctionalSampler sampler(options.seed, options.functional_range);
  bool found = false;
  for (int d = 0; d < options.max_draws && !found; ++d) {
    report.functional = sampler.draw(m);
    if (m - rank_exact(kirillov_matrix(lie, report.functional).matrix) == 0) found = true;
  }
  if (!found) {
    throw OracleError("NOT_FROBENIUS_FUNCTIONAL", "no nondegenerate one-form found among small draws");
  }
  report.principal = principal_element(lie, report.functional);
  const RatMatrix a = ad_matrix(lie, report.principal);

  const auto [lo, hi] = options.window.value_or(std::pair<int, int>{-m, m + 1});
  const auto order = search_order(lo, hi);
  std::map<int, int> geometric;
  int total = 0;
  for (int k : order) {
    if (total == m) break;
    const int g = nullity_exact(shifted(a, k));
    if (g > 0) {
      geometric[k] = g;
      total += g;
    }
  }
  report.semisimple = total == m;
  if (report.semisimple) {
    report.eigenvalues = geometric;
  } else {
    total = 0;
    for (int k : order) {
      if (total == m) break;
      auto it = geometric.find(k);
      if (it == geometric.end()) continue;
      const int alg = algebraic_multiplicity(a, k, it->second);
      report.eigenvalues[k] = alg;
      total += alg;
    }
  }

  report.defect = m - total;
  report.integral = report.defect == 0;
  report.status = report.integral ? "OK" : "NON_INTEGRAL_SPECTRUM";
  report.unbroken = report.eigenvalues.empty() ||
                    report.eigenvalues.rbegin()->first - report.eigenvalues.begin()->first + 1 ==
                        static_cast<int>(report.eigenvalues.size());
  report.symmetric_about_half = true;
  for (const auto& [k, mult] : report.eigenvalues) {
    auto it = report.eigenvalues.find(1 - k);
    if (it == report.eigenvalues.end() || it->second != mult) report.symmetric_about_half = false;
  }
  return report;
}

}  // namespace seaweed
