#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coherent/rational.hpp"

namespace coherent {

/// E max X_i over coherent (X_1..X_n) with E X_1 = p: p(n - p) / (1 + p(n - 2)).
Rational dubins_bound(int n, const Rational& p);

/// 2^-alpha, the supremum of E|X - Y|^alpha for alpha in [0, 2].
/// Throws ValidationError outside [0, 2]; the formula fails beyond 3.
double power_bound(double alpha);

/// Exact 2^-k for integer k in {0, 1, 2}.
Rational power_bound_exact(unsigned k);

// One piece of a tail envelope on [lo, hi].  Either a polynomial in u
// (coefficients in ascending degree) or an opaque numeric function.
struct EnvelopePiece {
  Rational lo;
  Rational hi;
  std::vector<Rational> poly;
  std::function<double(double)> numeric;

  bool is_polynomial() const { return !numeric; }
};

// Upper envelope of delta -> sup P(|X - Y| >= delta) over [0, 1], as
// consecutive pieces.  A point shared by two pieces belongs to the left one
// except at 0.
class TailEnvelope {
 public:
  TailEnvelope(std::string name, std::vector<EnvelopePiece> pieces);

  const std::string& name() const { return name_; }
  const std::vector<EnvelopePiece>& pieces() const { return pieces_; }
  bool is_polynomial() const;

  double eval(double delta) const;
  /// Throws ValidationError when delta falls on a numeric piece.
  Rational eval_exact(const Rational& delta) const;

 private:
  const EnvelopePiece& piece_at(double delta) const;

  std::string name_;
  std::vector<EnvelopePiece> pieces_;
};

/// min(2(1 - u), 1): the proven envelope for all coherent pairs.
TailEnvelope eps_envelope();
/// 1 on [0, 1/2], 2u(1 - u) on (1/2, 1]: the independent-pair curve.
TailEnvelope conjecture_envelope();
/// 1 on [0, 1/2], 2(1 - u)/(2 - u) on (1/2, 1]; rational, integrated numerically.
TailEnvelope burdzy_pal_envelope();
TailEnvelope constant_envelope(const Rational& value);

struct LayerCakeResult {
  std::optional<Rational> exact;  // set when every piece is polynomial
  double value = 0;
  double error_estimate = 0;      // quadrature error estimate; 0 when exact
};

/// ∫_0^1 k u^(k-1) env(u) du.
LayerCakeResult layer_cake(const TailEnvelope& env, unsigned k);

/// (2 - 2^-k) / (1 + k).
Rational eps_moment_bound(unsigned k);

/// 2k/((k+1)(k+2)) + 2^-k - 2^-(k+1) k(k+3)/((k+1)(k+2)).
/// Proven as a bound on E|X - Y|^k for independent coherent pairs when k >= 3;
/// the closed form itself is evaluated for any k >= 1.
Rational new_bound(unsigned k);

/// 2(1 - delta)/(2 - delta) for delta in (1/2, 1].
Rational burdzy_pal_tail(const Rational& delta);

/// 2 delta (1 - delta) for delta in (1/2, 1].
Rational independent_tail_curve(const Rational& delta);

/// n^2/4 * p(1 - p).
Rational multivariate_bound(int n, const Rational& p);

/// ½ Σ_{i != j} E|X_i - X_j|^2 for X_i alternating between 1_A and P(A) = p,
/// evaluated on the two-atom space {A, A^c}.  n must be even.
Rational equality_config(int n, const Rational& p);

struct SpherePoints {
  std::vector<std::vector<double>> points;
  std::vector<double> center;
  double radius = 1;
};

/// The alternating configuration above embedded isometrically on a line:
/// 1_A and P(A) sit at +/- sqrt(p(1-p))/2 around the midpoint.
SpherePoints equality_sphere_points(int n, const Rational& p);

struct ChordSums {
  double lhs;  // Σ over unordered pairs of squared chord lengths
  double rhs;  // m^2 (radius^2 - |centroid - center|^2)
};

/// Throws ValidationError if a point is off the sphere by more than 1e-12
/// (relative to max(1, radius)) or dimensions disagree.
ChordSums chord_sum_check(const SpherePoints& pts);

struct BoundRow {
  std::string name;
  std::string parameter;
  std::optional<Rational> exact;
  double value;
};

/// Every closed form at k = 1..k_max and on the given delta grid.
std::vector<BoundRow> bounds_table(unsigned k_max, const std::vector<Rational>& delta_grid);

}  // namespace coherent
