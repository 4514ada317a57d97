#include "coherent/diagrams.hpp"

#include <algorithm>

namespace coherent {

StepFn::StepFn(std::vector<StepPiece> pieces) {
  if (pieces.empty()) throw ValidationError("step function needs at least one piece");
  Rational total = 0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& p = pieces[i];
    if (p.width <= 0)
      throw ValidationError("piece " + std::to_string(i) + " has non-positive width " +
                            to_string(p.width));
    if (p.height < 0 || p.height > 1)
      throw ValidationError("piece " + std::to_string(i) + " height " + to_string(p.height) +
                            " outside [0,1]");
    if (i > 0 && p.height > pieces[i - 1].height)
      throw ValidationError("heights must be weakly decreasing (piece " + std::to_string(i) + ")");
    total += p.width;
  }
  if (total != 1) throw ValidationError("widths sum to " + to_string(total) + ", expected 1");

  for (auto& p : pieces) {
    if (!pieces_.empty() && pieces_.back().height == p.height)
      pieces_.back().width += p.width;
    else
      pieces_.push_back(std::move(p));
  }
}

Rational DiscreteLaw::mean() const {
  Rational m = 0;
  for (const auto& a : atoms) m += a.value * a.prob;
  return m;
}

Rational DiscreteLaw::total_mass() const {
  Rational m = 0;
  for (const auto& a : atoms) m += a.prob;
  return m;
}

Rational x_eval(const StepFn& f, const Rational& u) {
  if (u < 0 || u > 1) throw ValidationError("u = " + to_string(u) + " outside [0,1]");
  Rational right = 0;
  const auto& pieces = f.pieces();
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
    right += pieces[i].width;
    if (u < right) return pieces[i].height;
  }
  return pieces.back().height;
}

Rational y_eval(const StepFn& f, const Rational& v) {
  if (v < 0 || v > 1) throw ValidationError("v = " + to_string(v) + " outside [0,1]");
  Rational width = 0;
  for (const auto& p : f.pieces()) {
    if (p.height > v)
      width += p.width;
    else
      break;  // heights are decreasing
  }
  return width;
}

Marginals marginals(const StepFn& f) {
  Marginals m;
  const auto& pieces = f.pieces();
  // Heights are strictly decreasing after normalization, so each piece is one X atom.
  for (const auto& p : pieces) m.x.atoms.push_back({p.height, p.width});

  // Cut [0,1] at the distinct levels: on [h_{t+1}, h_t) only the first t pieces
  // stand above v, and above the highest level nothing does.
  Rational upper = 1;
  Rational above = 0;  // cumulative width of the pieces higher than the current gap
  for (std::size_t t = 0; t <= pieces.size(); ++t) {
    const Rational lower = t < pieces.size() ? pieces[t].height : Rational(0);
    if (upper > lower) m.y.atoms.push_back({above, upper - lower});
    if (t < pieces.size()) {
      above += pieces[t].width;
      upper = lower;
    }
  }
  // Cumulative widths only grow, so Y atoms are already distinct; keep the
  // same decreasing-value order as X.
  std::reverse(m.y.atoms.begin(), m.y.atoms.end());
  return m;
}

Rational moment(const StepFn& f, unsigned k) {
  if (k == 0) return 1;
  const auto m = marginals(f);
  Rational total = 0;
  for (const auto& x : m.x.atoms)
    for (const auto& y : m.y.atoms) total += x.prob * y.prob * pow(abs(x.value - y.value), k);
  return total;
}

Rational tail(const StepFn& f, const Rational& delta, bool strict) {
  const auto m = marginals(f);
  Rational total = 0;
  for (const auto& x : m.x.atoms) {
    for (const auto& y : m.y.atoms) {
      const Rational gap = abs(x.value - y.value);
      if (strict ? gap > delta : gap >= delta) total += x.prob * y.prob;
    }
  }
  return total;
}

StepFn from_partition(const Partition& b) {
  const Partition sorted = b.sorted();
  const Rational width = make_rational(1, b.n());
  std::vector<StepPiece> pieces;
  pieces.reserve(sorted.parts().size());
  for (int part : sorted.parts()) pieces.push_back({width, make_rational(part, b.n())});
  return StepFn(std::move(pieces));
}

StepFn indicator_diagram(const Rational& a) {
  if (a < 0 || a > 1) throw ValidationError("indicator probability outside [0,1]");
  if (a == 0) return StepFn({{Rational(1), Rational(0)}});
  if (a == 1) return StepFn({{Rational(1), Rational(1)}});
  return StepFn({{a, Rational(1)}, {Rational(1 - a), Rational(0)}});
}

StepFn two_level_diagram(const Rational& d) {
  if (d <= 0 || d >= 1) throw ValidationError("two-level gap must lie in (0,1)");
  return StepFn({{Rational(1 - d), Rational(1)}, {d, Rational(1 - d)}});
}

bool verify_coherence(const StepFn& f) {
  const auto& pieces = f.pieces();

  // Area of the region inside [u0,u1] x [v0,v1], integrated piece by piece.
  auto area_in = [&](const Rational& u0, const Rational& u1, const Rational& v0,
                     const Rational& v1) {
    Rational area = 0, left = 0;
    for (const auto& p : pieces) {
      const Rational right = left + p.width;
      const Rational du = std::min(right, u1) - std::max(left, u0);
      const Rational dv = std::min(p.height, v1) - v0;
      if (du > 0 && dv > 0) area += du * dv;
      left = right;
    }
    return area;
  };

  Rational left = 0;
  for (const auto& p : pieces) {
    const Rational right = left + p.width;
    const Rational mid = (left + right) / 2;
    if (area_in(left, right, 0, 1) / p.width != x_eval(f, mid)) return false;
    left = right;
  }

  std::vector<Rational> levels{Rational(0), Rational(1)};
  for (const auto& p : pieces) levels.push_back(p.height);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
    const Rational &lo = levels[i], &hi = levels[i + 1];
    if (area_in(0, 1, lo, hi) / (hi - lo) != y_eval(f, (lo + hi) / 2)) return false;
  }

  const auto m = marginals(f);
  const Rational area = area_in(0, 1, 0, 1);
  return m.x.total_mass() == 1 && m.y.total_mass() == 1 && m.x.mean() == area &&
         m.y.mean() == area;
}

}  // namespace coherent
