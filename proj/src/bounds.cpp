#include "coherent/bounds.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

namespace coherent {

namespace {

void check_upper_tail_domain(const Rational& delta) {
  if (delta <= make_rational(1, 2) || delta > 1)
    throw ValidationError("delta = " + to_string(delta) + " outside (1/2, 1]");
}

void check_probability(const Rational& p) {
  if (p < 0 || p > 1) throw ValidationError("probability " + to_string(p) + " outside [0,1]");
}

Rational two_pow_neg(unsigned k) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, k);
  return Rational(mpz_class(1), den);
}

}  // namespace

Rational dubins_bound(int n, const Rational& p) {
  if (n < 1) throw ValidationError("n must be positive");
  check_probability(p);
  if (n == 1) return p;
  return p * (n - p) / (1 + p * (n - 2));
}

double power_bound(double alpha) {
  if (!(alpha >= 0 && alpha <= 2))
    throw ValidationError("2^-alpha is established only for alpha in [0, 2]");
  return std::exp2(-alpha);
}

Rational power_bound_exact(unsigned k) {
  if (k > 2) throw ValidationError("2^-k is established only for k <= 2");
  return two_pow_neg(k);
}

TailEnvelope::TailEnvelope(std::string name, std::vector<EnvelopePiece> pieces)
    : name_(std::move(name)), pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw ValidationError("envelope needs at least one piece");
  if (pieces_.front().lo != 0 || pieces_.back().hi != 1)
    throw ValidationError("envelope pieces must cover [0, 1]");
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (pieces_[i].hi <= pieces_[i].lo) throw ValidationError("empty envelope piece");
    if (i > 0 && pieces_[i].lo != pieces_[i - 1].hi)
      throw ValidationError("envelope pieces must be contiguous");
  }
}

bool TailEnvelope::is_polynomial() const {
  for (const auto& p : pieces_)
    if (!p.is_polynomial()) return false;
  return true;
}

const EnvelopePiece& TailEnvelope::piece_at(double delta) const {
  if (!(delta >= 0 && delta <= 1)) throw ValidationError("delta outside [0, 1]");
  for (const auto& p : pieces_)
    if (delta <= to_double(p.hi)) return p;
  return pieces_.back();
}

double TailEnvelope::eval(double delta) const {
  const auto& p = piece_at(delta);
  if (!p.is_polynomial()) return p.numeric(delta);
  double v = 0;
  for (auto it = p.poly.rbegin(); it != p.poly.rend(); ++it) v = v * delta + to_double(*it);
  return v;
}

Rational TailEnvelope::eval_exact(const Rational& delta) const {
  if (delta < 0 || delta > 1) throw ValidationError("delta outside [0, 1]");
  const EnvelopePiece* piece = &pieces_.back();
  for (const auto& p : pieces_)
    if (delta <= p.hi) {
      piece = &p;
      break;
    }
  if (!piece->is_polynomial())
    throw ValidationError("envelope '" + name_ + "' has no exact value at " + to_string(delta));
  Rational v = 0;
  for (auto it = piece->poly.rbegin(); it != piece->poly.rend(); ++it) v = v * delta + *it;
  return v;
}

TailEnvelope eps_envelope() {
  return TailEnvelope("eps", {{Rational(0), make_rational(1, 2), {Rational(1)}, {}},
                              {make_rational(1, 2), Rational(1), {Rational(2), Rational(-2)}, {}}});
}

TailEnvelope conjecture_envelope() {
  return TailEnvelope("conjecture",
                      {{Rational(0), make_rational(1, 2), {Rational(1)}, {}},
                       {make_rational(1, 2), Rational(1), {Rational(0), Rational(2), Rational(-2)}, {}}});
}

TailEnvelope burdzy_pal_envelope() {
  return TailEnvelope("burdzy-pal",
                      {{Rational(0), make_rational(1, 2), {Rational(1)}, {}},
                       {make_rational(1, 2), Rational(1), {},
                        [](double u) { return 2.0 * (1.0 - u) / (2.0 - u); }}});
}

TailEnvelope constant_envelope(const Rational& value) {
  return TailEnvelope("constant", {{Rational(0), Rational(1), {value}, {}}});
}

LayerCakeResult layer_cake(const TailEnvelope& env, unsigned k) {
  if (k == 0) throw ValidationError("layer-cake exponent must be positive");
  LayerCakeResult result;
  Rational exact = 0;
  bool all_exact = true;
  for (const auto& piece : env.pieces()) {
    if (piece.is_polynomial()) {
      // ∫ k u^(k-1) c_m u^m du = c_m k u^(k+m) / (k+m)
      for (std::size_t m = 0; m < piece.poly.size(); ++m) {
        const unsigned e = k + static_cast<unsigned>(m);
        exact += piece.poly[m] * k * (pow(piece.hi, e) - pow(piece.lo, e)) / e;
      }
    } else {
      all_exact = false;
      double err = 0;
      const auto integrand = [&](double u) { return k * std::pow(u, k - 1.0) * piece.numeric(u); };
      result.value += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
          integrand, to_double(piece.lo), to_double(piece.hi), 15, 1e-14, &err);
      result.error_estimate += err;
    }
  }
  result.value += to_double(exact);
  if (all_exact) result.exact = exact;
  return result;
}

Rational eps_moment_bound(unsigned k) {
  if (k == 0) throw ValidationError("exponent must be positive");
  return (2 - two_pow_neg(k)) / (1 + k);
}

Rational new_bound(unsigned k) {
  if (k == 0) throw ValidationError("exponent must be positive");
  const Rational kk(k);
  const Rational denom = (kk + 1) * (kk + 2);
  return 2 * kk / denom + two_pow_neg(k) - two_pow_neg(k + 1) * kk * (kk + 3) / denom;
}

Rational burdzy_pal_tail(const Rational& delta) {
  check_upper_tail_domain(delta);
  return 2 * (1 - delta) / (2 - delta);
}

Rational independent_tail_curve(const Rational& delta) {
  check_upper_tail_domain(delta);
  return 2 * delta * (1 - delta);
}

Rational multivariate_bound(int n, const Rational& p) {
  if (n < 2) throw ValidationError("multivariate bound needs n >= 2");
  check_probability(p);
  return make_rational(n * n, 4) * p * (1 - p);
}

Rational equality_config(int n, const Rational& p) {
  if (n < 2 || n % 2 != 0) throw ValidationError("equality configuration needs an even n >= 2");
  check_probability(p);
  // Value of X_i on A and on A^c.
  std::vector<std::pair<Rational, Rational>> xs;
  for (int i = 0; i < n; ++i)
    xs.push_back(i % 2 == 0 ? std::pair<Rational, Rational>{1, 0} : std::pair<Rational, Rational>{p, p});
  Rational ordered = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Rational on_a = xs[i].first - xs[j].first;
      const Rational off_a = xs[i].second - xs[j].second;
      ordered += p * on_a * on_a + (1 - p) * off_a * off_a;
    }
  }
  return ordered / 2;
}

SpherePoints equality_sphere_points(int n, const Rational& p) {
  if (n < 2 || n % 2 != 0) throw ValidationError("equality configuration needs an even n >= 2");
  check_probability(p);
  const double r = std::sqrt(to_double(p * (1 - p))) / 2;
  SpherePoints pts;
  pts.center = {0.0};
  pts.radius = r;
  for (int i = 0; i < n; ++i) pts.points.push_back({i % 2 == 0 ? r : -r});
  return pts;
}

ChordSums chord_sum_check(const SpherePoints& pts) {
  const std::size_t d = pts.center.size();
  if (!(pts.radius > 0)) throw ValidationError("sphere radius must be positive");
  const double tol = 1e-12 * std::max(1.0, pts.radius);
  for (std::size_t i = 0; i < pts.points.size(); ++i) {
    const auto& x = pts.points[i];
    if (x.size() != d) throw ValidationError("point " + std::to_string(i) + " has the wrong dimension");
    double s = 0;
    for (std::size_t c = 0; c < d; ++c) s += (x[c] - pts.center[c]) * (x[c] - pts.center[c]);
    if (std::abs(std::sqrt(s) - pts.radius) > tol)
      throw ValidationError("point " + std::to_string(i) + " is off the sphere");
  }

  const std::size_t m = pts.points.size();
  ChordSums out{0, 0};
  std::vector<double> centroid(d, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t c = 0; c < d; ++c) centroid[c] += pts.points[i][c] / static_cast<double>(m);
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t c = 0; c < d; ++c) {
        const double diff = pts.points[i][c] - pts.points[j][c];
        out.lhs += diff * diff;
      }
  }
  double dist2 = 0;
  for (std::size_t c = 0; c < d; ++c) dist2 += (centroid[c] - pts.center[c]) * (centroid[c] - pts.center[c]);
  const double mm = static_cast<double>(m);
  out.rhs = mm * mm * (pts.radius * pts.radius - dist2);
  return out;
}

std::vector<BoundRow> bounds_table(unsigned k_max, const std::vector<Rational>& delta_grid) {
  std::vector<BoundRow> rows;
  auto exact_row = [&](std::string name, std::string param, Rational v) {
    const double f = to_double(v);
    rows.push_back({std::move(name), std::move(param), std::move(v), f});
  };

  exact_row("dubins", "n=2;p=1/2", dubins_bound(2, make_rational(1, 2)));
  exact_row("multivariate", "n=2;p=1/2", multivariate_bound(2, make_rational(1, 2)));
  for (unsigned k = 1; k <= k_max; ++k) {
    const std::string param = "k=" + std::to_string(k);
    if (k <= 2) exact_row("power_bound", param, power_bound_exact(k));
    exact_row("eps_layer_cake", param, eps_moment_bound(k));
    exact_row("new_bound", param, new_bound(k));
    const auto bp = layer_cake(burdzy_pal_envelope(), k);
    rows.push_back({"burdzy_pal_layer_cake", param, std::nullopt, bp.value});
  }
  for (const auto& delta : delta_grid) {
    const std::string param = "delta=" + to_string(delta);
    exact_row("eps_envelope", param, eps_envelope().eval_exact(delta));
    if (delta > make_rational(1, 2) && delta <= 1) {
      exact_row("burdzy_pal_tail", param, burdzy_pal_tail(delta));
      exact_row("independent_tail", param, independent_tail_curve(delta));
    }
  }
  return rows;
}

}  // namespace coherent
