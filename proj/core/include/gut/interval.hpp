#pragma once

#include <iosfwd>
#include <string_view>

namespace gut {

inline constexpr double kDefaultTolerance = 1e-9;

/// A generalized uncertain measure value [left, right].
///
/// Orientation is not normalized: left > right is a legal "inverse"
/// interval. Both endpoints are always finite.
class GUInterval {
 public:
  constexpr GUInterval() = default;

  /// Throws Error(Construction) when either endpoint is NaN or infinite.
  GUInterval(double left, double right);

  /// Degenerate interval [value, value].
  static GUInterval point(double value) { return GUInterval(value, value); }

  constexpr double left() const noexcept { return left_; }
  constexpr double right() const noexcept { return right_; }

  constexpr bool is_proper() const noexcept { return left_ <= right_; }
  constexpr bool is_inverse() const noexcept { return left_ > right_; }
  /// Proper and contained in [0, 1].
  constexpr bool is_measure_valid() const noexcept {
    return is_proper() && left_ >= 0.0 && right_ <= 1.0;
  }

  friend constexpr bool operator==(const GUInterval&, const GUInterval&) = default;

 private:
  double left_ = 0.0;
  double right_ = 0.0;
};

std::ostream& operator<<(std::ostream& os, const GUInterval& interval);

enum class ArithOp { Add, Sub, Mul, Div };

/// Endpoint-wise arithmetic: [a1 op a2, b1 op b2]. Results are not clipped
/// and may be inverse-oriented. Div throws Error(DivisionDomain) when either
/// endpoint of the denominator is zero.
GUInterval arith(ArithOp op, const GUInterval& lhs, const GUInterval& rhs);

GUInterval operator+(const GUInterval& lhs, const GUInterval& rhs);
GUInterval operator-(const GUInterval& lhs, const GUInterval& rhs);
GUInterval operator*(const GUInterval& lhs, const GUInterval& rhs);
GUInterval operator/(const GUInterval& lhs, const GUInterval& rhs);
/// Scalar weighting, [s*a, s*b].
GUInterval operator*(double scale, const GUInterval& interval);

/// [1 - left, 1 - right]; inverse-oriented for non-degenerate input.
/// Both endpoints must lie in [0, 1]; either orientation is accepted so that
/// complement(complement(I)) == I.
GUInterval complement(const GUInterval& interval);

/// Swaps the endpoints.
GUInterval inverse(const GUInterval& interval);
/// [min, max] of the endpoints.
GUInterval normalize(const GUInterval& interval);

/// Uncertainty degree, right - left. Requires a proper interval.
double gud(const GUInterval& interval);

enum class Relation {
  Equal,
  StronglySmaller,
  WeaklySmaller,
  PartlySmaller,
  StronglyGreater,
  WeaklyGreater,
  PartlyGreater,
};

std::string_view to_string(Relation relation) noexcept;
/// Symbol used in comparison tables: "=", "<", "<=", "⪯", ">", ">=", "⪰".
std::string_view symbol(Relation relation) noexcept;
Relation mirror(Relation relation) noexcept;

/// Total classifier over pairs of proper intervals. Checked in order:
///   Equal            both endpoint gaps within tol
///   Strongly         separated: b1 < a2 (or b2 < a1)
///   Partly           inclusion: a1 > a2 and b1 <= b2 (or the mirror)
///   Weakly           everything else, oriented by the endpoints
/// The shared-lower-endpoint inclusion [a,b1] vs [a,b2] is interlaced, not
/// partly, so nested events never compare as Partly.
Relation compare(const GUInterval& lhs, const GUInterval& rhs, double tol = kDefaultTolerance);

/// |a1 - a2| <= delta and |b1 - b2| <= delta.
bool delta_neighbour(const GUInterval& lhs, const GUInterval& rhs, double delta);

enum class SystemOrder { Higher, Lower, Incomparable };

/// Order of the second system relative to the first: Higher when the second
/// system's measure is strongly greater than the first's.
SystemOrder uncertainty_order(const GUInterval& first, const GUInterval& second,
                              double tol = kDefaultTolerance);

}  // namespace gut
