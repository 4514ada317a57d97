#pragma once

#include <utility>
#include <vector>

#include "coherent/partitions.hpp"
#include "coherent/rational.hpp"

namespace coherent {

struct StepPiece {
  Rational width;
  Rational height;
  friend bool operator==(const StepPiece&, const StepPiece&) = default;
};

// Weakly decreasing step function f : [0,1] -> [0,1] given as consecutive
// pieces (width, height) from left to right.  The region under it,
// {(u, v) : v < f(u)}, is the generalized Ferrer diagram.
//
// Invariants after construction: widths > 0 and sum to exactly 1, heights in
// [0,1] and weakly decreasing, and no two adjacent pieces share a height.
class StepFn {
 public:
  /// Validates and merges adjacent equal heights.  Throws ValidationError.
  explicit StepFn(std::vector<StepPiece> pieces);

  const std::vector<StepPiece>& pieces() const { return pieces_; }

  friend bool operator==(const StepFn&, const StepFn&) = default;

 private:
  std::vector<StepPiece> pieces_;
};

struct Atom {
  Rational value;
  Rational prob;
  friend bool operator==(const Atom&, const Atom&) = default;
};

// Finitely supported law; atoms have distinct values and positive
// probabilities summing to 1.  Atoms are kept in decreasing value order.
struct DiscreteLaw {
  std::vector<Atom> atoms;

  Rational mean() const;
  Rational total_mass() const;
};

/// Height of the piece containing u; pieces are left-closed, the last one is closed at 1.
Rational x_eval(const StepFn& f, const Rational& u);

/// Total width of the pieces strictly higher than v.
Rational y_eval(const StepFn& f, const Rational& v);

struct Marginals {
  DiscreteLaw x;
  DiscreteLaw y;
};

/// Laws of X_f = x_f(U) and Y_f = y_f(V) for independent uniforms U, V.
Marginals marginals(const StepFn& f);

/// E|X_f - Y_f|^k over the product of the marginals; k = 0 gives 1.
Rational moment(const StepFn& f, unsigned k);

/// P(|X_f - Y_f| > delta), or P(... >= delta) when strict is false.
Rational tail(const StepFn& f, const Rational& delta, bool strict);

/// Rescales the Ferrer diagram of b (sorted descending) into the unit square.
StepFn from_partition(const Partition& b);

/// Two-piece diagram [(a, 1), (1 - a, 0)]: X = 1_A with P(A) = a, Y = a.
StepFn indicator_diagram(const Rational& a);

/// Two-level diagram [(1 - d, 1), (d, 1 - d)] whose |X - Y| equals d with
/// probability 2d(1 - d) and 0 otherwise.  Requires 0 < d < 1.
StepFn two_level_diagram(const Rational& d);

/// Checks, from areas of the region alone, that every column strip averages
/// to x_f and every horizontal strip between consecutive levels averages to
/// y_f, and that E X_f = E Y_f = area.  True for every valid StepFn.
bool verify_coherence(const StepFn& f);

}  // namespace coherent
