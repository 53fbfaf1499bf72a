// SPDX-License-Identifier: Apache-2.0
#include "wallis/transform.hpp"

#include "wallis/wallis_table.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>
#include <utility>

namespace wallis {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kInf = std::numeric_limits<double>::infinity();

// Slope band accepted as power-law decay: covers the k^(-3/2) tails of the
// transformed inverse-trig series as well as k^(-2) and steeper.
constexpr double kSlopeMin = 1.02;
constexpr double kSlopeMax = 9.0;

struct KahanSum {
  double s = 0.0, c = 0.0;
  void add(double x) {
    const double y = x - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
};

double nearest_rank_percentile(std::vector<double> v, double pct) {
  std::sort(v.begin(), v.end());
  std::size_t rank = static_cast<std::size_t>(std::ceil(pct * static_cast<double>(v.size())));
  if (rank == 0) rank = 1;
  return v[std::min(v.size(), rank) - 1];
}

double ls_slope(std::span<const double> x, std::span<const double> y) {
  const auto n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double num = 0, den = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    num += (x[i] - mx) * (y[i] - my);
    den += (x[i] - mx) * (x[i] - mx);
  }
  return num / den;
}

// Trailing-ratio estimate with a drift allowance for ratios still creeping
// toward their limit. mags are log2 magnitudes of consecutive nonzero terms.
double drift_corrected_ratio(const std::deque<double>& mags) {
  std::vector<double> ratios;
  const std::size_t start = mags.size() - 9;
  for (std::size_t i = start; i + 1 < mags.size(); ++i)
    ratios.push_back(std::exp2(mags[i + 1] - mags[i]));
  const double r90 = nearest_rank_percentile(ratios, 0.9);
  const double drift = std::max(0.0, ratios.back() - ratios.front());
  return std::max(r90, ratios.back()) + drift;
}

// Internal view of a term stream: the exact terms plus, optionally, the
// multiplicative step t_k/t_{k-1} as a double, used to walk magnitudes
// cheaply past the exact prefix of a power-law sum.
struct TermSource {
  TermStream exact;
  std::function<double(std::size_t)> step;
};

// ---------------------------------------------------------------------------
// geometric: sum until |t_N| r/(1-r) <= tol with r taken from the trailing
// ratios (90th percentile of the last 8, drift-corrected), requiring r < 0.9.
// ---------------------------------------------------------------------------
SumResult sum_geometric(const TermSource& src, double tol, const EngineOptions& opts) {
  BigRational sum(0);
  std::deque<double> mags;
  double last_bound = kInf;
  for (std::size_t k = 0; k < opts.max_terms; ++k) {
    const BigRational t = src.exact(k);
    sum += t;
    if (t.is_zero()) continue;
    mags.push_back(log2_abs(t));
    if (mags.size() > 9) mags.pop_front();
    if (mags.size() < 9) continue;
    const double r = drift_corrected_ratio(mags);
    if (r >= 0.9) continue;
    last_bound = std::exp2(mags.back()) * r / (1.0 - r);
    if (last_bound <= tol) return {std::move(sum), last_bound, k + 1};
  }
  throw SumBudgetError("geometric summation: term budget exhausted",
                       {std::move(sum), last_bound, opts.max_terms});
}

// ---------------------------------------------------------------------------
// alternating_accelerated: the Cohen-Rodriguez Villegas-Zagier Chebyshev
// scheme, run in exact rational arithmetic at increasing orders until two
// orders agree within tol/4. The claimed value is then validated against the
// bracket formed by two consecutive raw partial sums.
// ---------------------------------------------------------------------------
BigRational cvz_estimate(const std::vector<BigRational>& mags, std::size_t n) {
  BigInt dprev = 1, d = 3;  // d_j = 6 d_{j-1} - d_{j-2}
  for (std::size_t j = 2; j <= n; ++j) {
    BigInt next = 6 * d - dprev;
    dprev = std::move(d);
    d = std::move(next);
  }
  BigRational b(-1);
  BigRational c(-d);
  BigRational s(0);
  for (std::size_t k = 0; k < n; ++k) {
    c = b - c;
    s += c * mags[k];
    const BigInt kk(k), nn(n);
    b *= BigRational(2 * (kk + nn) * (kk - nn), BigInt(2 * k + 1) * (k + 1));
  }
  return s / BigRational(d);
}

SumResult sum_alternating(const TermSource& src, double tol, const EngineOptions& opts) {
  std::vector<BigRational> terms;  // signed
  std::vector<BigRational> mags;   // |terms|
  int sign0 = 0;

  auto fetch = [&](std::size_t upto) {
    while (terms.size() < upto) {
      const std::size_t k = terms.size();
      BigRational t = src.exact(k);
      const int s = t.sign();
      if (s == 0)
        throw UnclassifiableSeriesError("alternating summation: zero term in stream");
      if (k == 0)
        sign0 = s;
      else if (s != (k % 2 == 0 ? sign0 : -sign0))
        throw UnclassifiableSeriesError("alternating summation: sign pattern broke");
      BigRational a = s < 0 ? -t : t;
      if (k > 0 && a > mags.back())
        throw UnclassifiableSeriesError("alternating summation: magnitudes not decreasing");
      terms.push_back(std::move(t));
      mags.push_back(std::move(a));
    }
  };

  static constexpr std::size_t kOrders[] = {12, 18, 26, 38, 54, 78, 110};
  if (opts.max_terms < kOrders[0])
    throw SumBudgetError("alternating summation: budget below minimum order",
                         {BigRational(0), kInf, 0});

  BigRational prev_est, claimed;
  bool have_prev = false, accepted = false;
  double acc_err = kInf;
  std::size_t n_used = 0;
  for (std::size_t n : kOrders) {
    if (n > opts.max_terms) break;
    fetch(n);
    BigRational est = sign0 < 0 ? -cvz_estimate(mags, n) : cvz_estimate(mags, n);
    if (have_prev) {
      const double diff = std::abs(to_double(est - prev_est));
      if (diff <= tol / 4.0) {
        claimed = est;
        acc_err = 4.0 * diff + 32.0 * kEps * (std::abs(to_double(est)) + 1.0);
        n_used = n;
        accepted = true;
        break;
      }
    }
    prev_est = std::move(est);
    have_prev = true;
  }
  if (!accepted)
    throw SumBudgetError("alternating acceleration did not settle within the order schedule",
                         {std::move(prev_est), kInf, kOrders[std::size(kOrders) - 1]});

  // Raw bracket: for alternating terms with decreasing magnitudes the limit
  // lies between consecutive partial sums.
  const std::size_t n_raw =
      std::min({std::max<std::size_t>(2 * n_used, 64), opts.max_terms - 1, std::size_t{400}});
  fetch(n_raw + 2);
  BigRational partial(0);
  for (std::size_t k = 0; k <= n_raw; ++k) partial += terms[k];
  const BigRational other = partial + terms[n_raw + 1];
  const double lo = std::min(to_double(partial), to_double(other));
  const double hi = std::max(to_double(partial), to_double(other));
  const double cd = to_double(claimed);
  if (cd < lo - acc_err - 1e-15 || cd > hi + acc_err + 1e-15) {
    const double raw_bound = std::abs(to_double(terms[n_raw + 1]));
    if (raw_bound <= tol) return {std::move(partial), raw_bound, n_raw + 1};
    throw SumBudgetError("alternating acceleration failed raw-bracket validation",
                         {std::move(partial), raw_bound, n_raw + 1});
  }
  return {std::move(claimed), acc_err, std::max(n_used, n_raw + 2)};
}

// ---------------------------------------------------------------------------
// powerlaw_monotone: exact prefix, then a float walk of magnitudes to N with
// a fitted c k^-p + d k^-p-1 tail appended. The exponent is measured from
// two windows and Richardson-corrected; the bound combines the fit residual,
// float-walk noise, and agreement between consecutive stages (N and 2N).
// ---------------------------------------------------------------------------

// Sum_{k > N} k^-s by Euler-Maclaurin, with a slack for the dropped terms.
struct TailZeta {
  double value;
  double slack;
};

TailZeta hurwitz_tail(double s, double n) {
  const double a = n + 1.0;
  const double as = std::pow(a, -s);
  const double value = a * as / (s - 1.0) + as / 2.0 + s * as / a / 12.0;
  const double slack = s * (s + 1.0) * (s + 2.0) * as / (a * a * a) / 720.0 * 2.0;
  return {value, slack};
}

struct SlopeAnchor {
  double n = 0.0;
  double slope = 0.0;  // measured decay exponent (positive)
};

struct FitResult {
  double tail = 0.0;
  double model_unc = 0.0;
  double p_used = 0.0;
};

// Window of the last 16 (k, magnitude) pairs.
class MagnitudeWindow {
 public:
  void push(std::size_t k, double m) {
    ks_.push_back(static_cast<double>(k));
    ms_.push_back(m);
    if (ks_.size() > 16) {
      ks_.pop_front();
      ms_.pop_front();
    }
  }
  bool full() const { return ks_.size() == 16; }
  double measured_exponent() const {
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < ks_.size(); ++i) {
      lx.push_back(std::log(ks_[i]));
      ly.push_back(std::log(ms_[i]));
    }
    return -ls_slope(lx, ly);
  }
  // Least squares of m k^p against 1 + 1/k, centered.
  FitResult fit(double p, double n) const {
    std::vector<double> x, y;
    for (std::size_t i = 0; i < ks_.size(); ++i) {
      x.push_back(1.0 / ks_[i]);
      y.push_back(ms_[i] * std::pow(ks_[i], p));
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      mx += x[i];
      my += y[i];
    }
    mx /= static_cast<double>(x.size());
    my /= static_cast<double>(x.size());
    double num = 0, den = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      num += (x[i] - mx) * (y[i] - my);
      den += (x[i] - mx) * (x[i] - mx);
    }
    const double d = num / den;
    const double c = my - d * mx;
    double g = 0.0;  // residual scaled back to a k^-p-2 coefficient
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double resid = std::abs(y[i] - c - d * x[i]);
      g = std::max(g, resid * ks_[i] * ks_[i]);
    }
    const TailZeta z0 = hurwitz_tail(p, n);
    const TailZeta z1 = hurwitz_tail(p + 1.0, n);
    const TailZeta z2 = hurwitz_tail(p + 2.0, n);
    FitResult r;
    r.tail = c * z0.value + d * z1.value;
    r.model_unc = 2.0 * g * z2.value +
                  (std::abs(c) + std::abs(d) + g) * (z0.slack + z1.slack + z2.slack);
    r.p_used = p;
    return r;
  }

 private:
  std::deque<double> ks_;
  std::deque<double> ms_;
};

SumResult sum_powerlaw(const TermSource& src, double tol, const EngineOptions& opts) {
  const std::size_t budget = opts.max_terms;
  if (budget < 64) {
    BigRational partial(0);
    for (std::size_t k = 0; k < budget; ++k) partial += src.exact(k);
    throw SumBudgetError("power-law summation: budget too small",
                         {std::move(partial), kInf, budget});
  }

  const std::size_t prefix = std::min(opts.exact_prefix, budget / 2);
  BigRational exact_sum(0);
  int sign = 0;
  double m = 0.0;
  for (std::size_t k = 0; k < prefix; ++k) {
    const BigRational t = src.exact(k);
    const int s = t.sign();
    if (s != 0) {
      if (sign == 0) sign = s;
      if (s != sign)
        throw UnclassifiableSeriesError("power-law summation: sign changed in stream");
    }
    exact_sum += t;
    if (k + 1 == prefix) {
      if (s == 0)
        throw UnclassifiableSeriesError("power-law summation: zero term at prefix end");
      m = std::abs(to_double(t));
    }
  }

  const std::size_t n_last = budget - 1;
  std::size_t n_target = std::min(n_last, std::max<std::size_t>(1024, 2 * prefix));
  if (n_target >= n_last) n_target = std::max(prefix + 16, n_last / 2);
  if (n_target <= prefix + 16) n_target = std::min(prefix + 16, n_last);

  const std::size_t first_mid = std::max(prefix + 16, n_target / 2);

  KahanSum walk;
  double noise = 0.0;
  MagnitudeWindow window;
  SlopeAnchor anchor;
  bool have_anchor = false;
  double prev_stage_value = 0.0;
  bool have_stage = false;

  const double exact_part = to_double(exact_sum);
  std::size_t k = prefix;
  while (true) {
    for (; k <= n_target; ++k) {
      if (src.step) {
        const double st = src.step(k);
        if (!(st > 0.0) || st > 1.005)
          throw UnclassifiableSeriesError("power-law summation: step left (0, 1]");
        m *= st;
      } else {
        const BigRational t = src.exact(k);
        if (t.sign() != sign)
          throw UnclassifiableSeriesError("power-law summation: sign changed in stream");
        m = std::abs(to_double(t));
      }
      walk.add(m);
      noise += m * (static_cast<double>(k - prefix) + 4.0) * kEps;
      window.push(k, m);
      if (!have_anchor && k == first_mid && window.full()) {
        anchor = {static_cast<double>(k), window.measured_exponent()};
        have_anchor = true;
      }
    }

    if (!window.full())
      throw SumBudgetError("power-law summation: too few terms for a tail fit",
                           {exact_sum, kInf, k});

    const double nd = static_cast<double>(n_target);
    const double p_here = window.measured_exponent();
    double p_use = p_here;
    if (have_anchor && anchor.n < nd)
      p_use = p_here + (p_here - anchor.slope) * (anchor.n / (nd - anchor.n));
    if (!(p_use >= kSlopeMin && p_use <= kSlopeMax))
      throw SumBudgetError("power-law summation: decay exponent outside the power-law band",
                           {exact_sum, kInf, k});

    const FitResult fit = window.fit(p_use, nd);
    const double stage_value = exact_part + sign * (walk.s + fit.tail);
    double unc = fit.model_unc + noise + 16.0 * kEps * (std::abs(stage_value) + 1.0);
    if (have_stage) unc += 3.0 * std::abs(stage_value - prev_stage_value);

    const bool corroborated = have_stage;
    anchor = {nd, p_here};
    have_anchor = true;
    prev_stage_value = stage_value;
    have_stage = true;

    if (corroborated && unc <= tol) {
      BigRational partial = exact_sum + rational_from_double(sign * walk.s) +
                            rational_from_double(sign * fit.tail);
      return {std::move(partial), unc, n_target + 1};
    }
    if (n_target >= n_last) {
      BigRational partial = exact_sum + rational_from_double(sign * walk.s) +
                            rational_from_double(sign * fit.tail);
      throw SumBudgetError("power-law summation: term budget exhausted",
                           {std::move(partial), unc, n_target + 1});
    }
    n_target = std::min(n_last, 2 * n_target);
  }
}

// Fallback when no hypothesis holds: sum to the budget and fail loudly,
// carrying the uncertified partial.
SumResult sum_direct(const TermSource& src, const EngineOptions& opts) {
  BigRational partial(0);
  for (std::size_t k = 0; k < opts.max_terms; ++k) partial += src.exact(k);
  throw SumBudgetError("direct summation: no certified bound within the term budget",
                       {std::move(partial), kInf, opts.max_terms});
}

SumResult dispatch(const TermSource& src, SummationStrategy strategy, double tol,
                   const EngineOptions& opts) {
  switch (strategy) {
    case SummationStrategy::geometric:
      return sum_geometric(src, tol, opts);
    case SummationStrategy::alternating_accelerated:
      return sum_alternating(src, tol, opts);
    case SummationStrategy::powerlaw_monotone:
      return sum_powerlaw(src, tol, opts);
  }
  throw std::logic_error("unreachable");
}

}  // namespace

// ---------------------------------------------------------------------------
// public surface
// ---------------------------------------------------------------------------

std::string_view strategy_name(SummationStrategy s) {
  switch (s) {
    case SummationStrategy::geometric:
      return "geometric";
    case SummationStrategy::alternating_accelerated:
      return "alternating_accelerated";
    case SummationStrategy::powerlaw_monotone:
      return "powerlaw_monotone";
  }
  return "?";
}

SumBudgetError::SumBudgetError(std::string what, SumResult best_in)
    : std::runtime_error(std::move(what)), best(std::move(best_in)) {}

NonConvergenceError::NonConvergenceError(std::string what, PiLinearValue best_in)
    : std::runtime_error(std::move(what)), best(std::move(best_in)) {}

double PiLinearValue::rendered() const {
  return to_double(odd_part) + to_double(even_part) * kHalfPi;
}

CoefficientStream stream_of(const SeriesSpec& spec) {
  const SeriesSpec* p = &spec;  // catalog entries are static
  CoefficientStream s;
  s.coeff = [p](std::size_t k) { return p->coefficient(k); };
  s.parity = spec.parity();
  if (spec.coefficient_step()) s.coeff_step = spec.coefficient_step();
  return s;
}

CoefficientStream stream_from_coefficients(std::vector<BigRational> coeffs) {
  CoefficientStream s;
  s.degree = coeffs.empty() ? 0 : coeffs.size() - 1;
  s.coeff = [c = std::move(coeffs)](std::size_t k) {
    return k < c.size() ? c[k] : BigRational(0);
  };
  return s;
}

CoefficientStream monomial_stream(std::size_t power, BigRational scale) {
  CoefficientStream s;
  s.degree = power;
  s.coeff = [power, scale = std::move(scale)](std::size_t k) {
    return k == power ? scale : BigRational(0);
  };
  return s;
}

SummationStrategy classify_tail(std::span<const double> terms) {
  std::vector<double> t;
  for (double v : terms)
    if (v != 0.0) t.push_back(v);
  if (t.size() < 16)
    throw std::invalid_argument("classify_tail: needs at least 16 nonzero terms");

  std::deque<double> mags;
  for (std::size_t i = t.size() - 9; i < t.size(); ++i) mags.push_back(std::log2(std::abs(t[i])));
  if (drift_corrected_ratio(mags) < 0.9) return SummationStrategy::geometric;

  bool alternating = true, one_signed = true;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    if (t[i] * t[i + 1] >= 0.0) alternating = false;
    if (t[i] * t[i + 1] <= 0.0) one_signed = false;
  }

  std::vector<double> lx, ly;
  for (std::size_t i = t.size() / 2; i < t.size(); ++i) {
    lx.push_back(std::log(static_cast<double>(i + 1)));
    ly.push_back(std::log(std::abs(t[i])));
  }
  const double p = -ls_slope(lx, ly);
  const bool powerlike = p >= kSlopeMin && p <= kSlopeMax;

  if (alternating && powerlike) return SummationStrategy::alternating_accelerated;
  if (one_signed && powerlike) return SummationStrategy::powerlaw_monotone;
  throw UnclassifiableSeriesError("classify_tail: no strategy hypothesis matched");
}

SumResult sum_series(const TermStream& terms, SummationStrategy strategy, double tol,
                     const EngineOptions& opts) {
  if (!(tol > 0.0)) throw std::invalid_argument("sum_series: requires tol > 0");
  return dispatch(TermSource{terms, nullptr}, strategy, tol, opts);
}

namespace {

TermSource make_route_source(const CoefficientStream& s, bool even_route) {
  TermSource src;
  auto coeff = s.coeff;
  src.exact = [coeff, even_route](std::size_t k) {
    return even_route ? coeff(2 * k) * wallis_even_ratio(k)
                      : coeff(2 * k + 1) * wallis_odd_ratio(k);
  };
  if (s.coeff_step) {
    auto cs = s.coeff_step;
    src.step = [cs, even_route](std::size_t k) {
      const double kd = static_cast<double>(k);
      const double w = even_route ? (2.0 * kd - 1.0) / (2.0 * kd) : (2.0 * kd) / (2.0 * kd + 1.0);
      return to_double(cs(even_route ? 2 * k : 2 * k + 1)) * w;
    };
  }
  return src;
}

// Indices of the other parity must be zero; probe a bounded prefix when the
// stream does not declare its parity.
void check_inactive_parity(const CoefficientStream& s, bool even_route) {
  if (s.parity) {
    const Parity want = even_route ? Parity::even : Parity::odd;
    if (*s.parity != want && *s.parity != Parity::mixed)
      throw std::invalid_argument("integrate: stream parity does not match the route");
    if (*s.parity == want) return;
  }
  const std::size_t start = even_route ? 1 : 0;
  std::size_t limit = 64;
  if (s.degree) limit = std::min(limit, *s.degree / 2 + 1);
  for (std::size_t k = 0; k < limit; ++k) {
    if (!s.coeff(2 * k + start).is_zero())
      throw std::invalid_argument(even_route
                                      ? "integrate_even: stream has nonzero odd entries"
                                      : "integrate_odd: stream has nonzero even entries");
  }
}

PiLinearValue exact_route_value(const CoefficientStream& s, bool even_route) {
  PiLinearValue v;
  v.strategy_used = "exact";
  if (!s.degree) return v;
  BigRational sum(0);
  std::size_t count = 0;
  for (std::size_t k = 0; 2 * k + (even_route ? 0 : 1) <= *s.degree; ++k) {
    sum += even_route ? s.coeff(2 * k) * wallis_even_ratio(k)
                      : s.coeff(2 * k + 1) * wallis_odd_ratio(k);
    ++count;
  }
  (even_route ? v.even_part : v.odd_part) = std::move(sum);
  v.terms_used = count;
  return v;
}

PiLinearValue integrate_route(const CoefficientStream& stream, bool even_route, double tol,
                              const EngineOptions& opts_in) {
  if (!(tol > 0.0)) throw std::invalid_argument("integrate: requires tol > 0");
  EngineOptions opts = opts_in;
  opts.classify_terms = std::max<std::size_t>(opts.classify_terms, 16);
  check_inactive_parity(stream, even_route);

  if (stream.degree) return exact_route_value(stream, even_route);

  const TermSource src = make_route_source(stream, even_route);
  const double scale = even_route ? kHalfPi : 1.0;
  const double series_tol = tol * 0.995 / scale;

  // Observation window for strategy choice. A stream of only zeros within
  // the probe cap is treated as the zero function.
  std::vector<double> observed;
  std::size_t probed = 0;
  const std::size_t probe_cap = 4 * opts.classify_terms;
  while (observed.size() < opts.classify_terms && probed < probe_cap) {
    const BigRational t = src.exact(probed++);
    if (!t.is_zero()) observed.push_back(to_double(t));
  }
  if (observed.empty()) {
    PiLinearValue v;
    v.strategy_used = "exact";
    v.terms_used = probed;
    return v;
  }

  auto assemble = [&](const SumResult& r, std::string_view strat) {
    PiLinearValue v;
    (even_route ? v.even_part : v.odd_part) = r.partial;
    const double rendered = std::abs(to_double(r.partial)) * scale;
    v.tail_bound = r.tail_bound * scale + 4.0 * kEps * (rendered + 1.0);
    v.terms_used = r.terms_used;
    v.strategy_used = std::string(strat);
    return v;
  };

  SummationStrategy strategy;
  try {
    strategy = classify_tail(observed);
  } catch (const std::exception&) {
    try {
      sum_direct(src, opts);
      throw std::logic_error("unreachable");
    } catch (const SumBudgetError& e) {
      throw NonConvergenceError(e.what(), assemble(e.best, "direct"));
    }
  }

  try {
    return assemble(dispatch(src, strategy, series_tol, opts), strategy_name(strategy));
  } catch (const SumBudgetError& e) {
    throw NonConvergenceError(e.what(), assemble(e.best, strategy_name(strategy)));
  } catch (const UnclassifiableSeriesError& e) {
    // A strategy hypothesis failed mid-run; fall back to direct summation.
    try {
      sum_direct(src, opts);
      throw std::logic_error("unreachable");
    } catch (const SumBudgetError& e2) {
      throw NonConvergenceError(std::string(e.what()) + "; " + e2.what(),
                                assemble(e2.best, "direct"));
    }
  }
}

CoefficientStream parity_masked(const CoefficientStream& s, bool keep_even) {
  CoefficientStream sub;
  auto coeff = s.coeff;
  sub.coeff = [coeff, keep_even](std::size_t k) {
    return (k % 2 == 0) == keep_even ? coeff(k) : BigRational(0);
  };
  sub.degree = s.degree;
  sub.parity = keep_even ? Parity::even : Parity::odd;
  sub.coeff_step = s.coeff_step;
  return sub;
}

// A route is skipped when the declared parity rules it out, or when a probe
// of the first indices of that parity finds only zeros.
bool route_is_zero(const CoefficientStream& s, bool even_route, std::size_t probe_cap) {
  if (s.parity && *s.parity != Parity::mixed)
    return (*s.parity == Parity::even) != even_route;
  if (s.degree) return false;  // handled exactly elsewhere
  for (std::size_t k = 0; k < probe_cap; ++k)
    if (!s.coeff(2 * k + (even_route ? 0 : 1)).is_zero()) return false;
  return true;
}

}  // namespace

PiLinearValue integrate_even(const CoefficientStream& stream, double tol,
                             const EngineOptions& opts) {
  return integrate_route(stream, true, tol, opts);
}

PiLinearValue integrate_odd(const CoefficientStream& stream, double tol,
                            const EngineOptions& opts) {
  return integrate_route(stream, false, tol, opts);
}

PiLinearValue integrate_mixed(const CoefficientStream& stream, double tol,
                              const EngineOptions& opts) {
  if (!(tol > 0.0)) throw std::invalid_argument("integrate_mixed: requires tol > 0");
  if (stream.degree) {
    PiLinearValue even = exact_route_value(stream, true);
    PiLinearValue odd = exact_route_value(stream, false);
    PiLinearValue v;
    v.even_part = std::move(even.even_part);
    v.odd_part = std::move(odd.odd_part);
    v.terms_used = even.terms_used + odd.terms_used;
    v.strategy_used = "exact";
    return v;
  }

  const std::size_t probe_cap = 4 * std::max<std::size_t>(opts.classify_terms, 16);
  PiLinearValue even, odd;
  if (route_is_zero(stream, true, probe_cap)) {
    even.strategy_used = "exact";
  } else {
    even = integrate_even(parity_masked(stream, true), tol / 2.0, opts);
  }
  if (route_is_zero(stream, false, probe_cap)) {
    odd.strategy_used = "exact";
  } else {
    odd = integrate_odd(parity_masked(stream, false), tol / 2.0, opts);
  }

  PiLinearValue v;
  v.even_part = std::move(even.even_part);
  v.odd_part = std::move(odd.odd_part);
  v.tail_bound = even.tail_bound + odd.tail_bound;
  v.terms_used = even.terms_used + odd.terms_used;
  v.strategy_used = "even=" + even.strategy_used + ",odd=" + odd.strategy_used;
  return v;
}

}  // namespace wallis
