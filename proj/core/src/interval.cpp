#include "gut/interval.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "gut/error.hpp"

namespace gut {

namespace {

std::string describe(const GUInterval& interval) {
  std::ostringstream os;
  os << interval;
  return os.str();
}

void require_proper(const GUInterval& interval, const char* op) {
  if (!interval.is_proper()) {
    throw Error(ErrorKind::Domain,
                std::string(op) + ": inverse interval " + describe(interval) + " (normalize first)");
  }
}

}  // namespace

GUInterval::GUInterval(double left, double right) : left_(left), right_(right) {
  if (!std::isfinite(left) || !std::isfinite(right)) {
    throw Error(ErrorKind::Construction, "interval endpoints must be finite");
  }
}

std::ostream& operator<<(std::ostream& os, const GUInterval& interval) {
  return os << '[' << interval.left() << ',' << interval.right() << ']';
}

GUInterval arith(ArithOp op, const GUInterval& lhs, const GUInterval& rhs) {
  switch (op) {
    case ArithOp::Add:
      return {lhs.left() + rhs.left(), lhs.right() + rhs.right()};
    case ArithOp::Sub:
      return {lhs.left() - rhs.left(), lhs.right() - rhs.right()};
    case ArithOp::Mul:
      return {lhs.left() * rhs.left(), lhs.right() * rhs.right()};
    case ArithOp::Div:
      if (rhs.left() == 0.0 || rhs.right() == 0.0) {
        throw Error(ErrorKind::DivisionDomain,
                    "division by interval with a zero endpoint " + describe(rhs));
      }
      return {lhs.left() / rhs.left(), lhs.right() / rhs.right()};
  }
  throw Error(ErrorKind::Domain, "unknown arithmetic operation");
}

GUInterval operator+(const GUInterval& lhs, const GUInterval& rhs) { return arith(ArithOp::Add, lhs, rhs); }
GUInterval operator-(const GUInterval& lhs, const GUInterval& rhs) { return arith(ArithOp::Sub, lhs, rhs); }
GUInterval operator*(const GUInterval& lhs, const GUInterval& rhs) { return arith(ArithOp::Mul, lhs, rhs); }
GUInterval operator/(const GUInterval& lhs, const GUInterval& rhs) { return arith(ArithOp::Div, lhs, rhs); }

GUInterval operator*(double scale, const GUInterval& interval) {
  return {scale * interval.left(), scale * interval.right()};
}

GUInterval complement(const GUInterval& interval) {
  if (!normalize(interval).is_measure_valid()) {
    throw Error(ErrorKind::Domain,
                "complement: " + describe(interval) + " has an endpoint outside [0, 1]");
  }
  return {1.0 - interval.left(), 1.0 - interval.right()};
}

GUInterval inverse(const GUInterval& interval) { return {interval.right(), interval.left()}; }

GUInterval normalize(const GUInterval& interval) {
  return {std::min(interval.left(), interval.right()), std::max(interval.left(), interval.right())};
}

double gud(const GUInterval& interval) {
  require_proper(interval, "gud");
  return interval.right() - interval.left();
}

std::string_view to_string(Relation relation) noexcept {
  switch (relation) {
    case Relation::Equal: return "Equal";
    case Relation::StronglySmaller: return "StronglySmaller";
    case Relation::WeaklySmaller: return "WeaklySmaller";
    case Relation::PartlySmaller: return "PartlySmaller";
    case Relation::StronglyGreater: return "StronglyGreater";
    case Relation::WeaklyGreater: return "WeaklyGreater";
    case Relation::PartlyGreater: return "PartlyGreater";
  }
  return "?";
}

std::string_view symbol(Relation relation) noexcept {
  switch (relation) {
    case Relation::Equal: return "=";
    case Relation::StronglySmaller: return "<";
    case Relation::WeaklySmaller: return "<=";
    case Relation::PartlySmaller: return "⪯";
    case Relation::StronglyGreater: return ">";
    case Relation::WeaklyGreater: return ">=";
    case Relation::PartlyGreater: return "⪰";
  }
  return "?";
}

Relation mirror(Relation relation) noexcept {
  switch (relation) {
    case Relation::Equal: return Relation::Equal;
    case Relation::StronglySmaller: return Relation::StronglyGreater;
    case Relation::WeaklySmaller: return Relation::WeaklyGreater;
    case Relation::PartlySmaller: return Relation::PartlyGreater;
    case Relation::StronglyGreater: return Relation::StronglySmaller;
    case Relation::WeaklyGreater: return Relation::WeaklySmaller;
    case Relation::PartlyGreater: return Relation::PartlySmaller;
  }
  return relation;
}

Relation compare(const GUInterval& lhs, const GUInterval& rhs, double tol) {
  require_proper(lhs, "compare");
  require_proper(rhs, "compare");
  if (!(tol >= 0.0)) throw Error(ErrorKind::Domain, "compare: tolerance must be >= 0");

  const double a1 = lhs.left(), b1 = lhs.right();
  const double a2 = rhs.left(), b2 = rhs.right();
  auto lt = [tol](double x, double y) { return x < y - tol; };
  auto le = [tol](double x, double y) { return x <= y + tol; };

  if (std::abs(a1 - a2) <= tol && std::abs(b1 - b2) <= tol) return Relation::Equal;
  if (lt(b1, a2)) return Relation::StronglySmaller;
  if (lt(b2, a1)) return Relation::StronglyGreater;
  if (lt(a2, a1) && le(b1, b2)) return Relation::PartlySmaller;
  if (lt(a1, a2) && le(b2, b1)) return Relation::PartlyGreater;
  // Remaining pairs are ordered the same way on both endpoints, up to tol.
  if (le(a1, a2) && le(b1, b2)) return Relation::WeaklySmaller;
  return Relation::WeaklyGreater;
}

bool delta_neighbour(const GUInterval& lhs, const GUInterval& rhs, double delta) {
  if (!(delta >= 0.0)) throw Error(ErrorKind::Domain, "delta_neighbour: delta must be >= 0");
  require_proper(lhs, "delta_neighbour");
  require_proper(rhs, "delta_neighbour");
  return std::abs(lhs.left() - rhs.left()) <= delta && std::abs(lhs.right() - rhs.right()) <= delta;
}

SystemOrder uncertainty_order(const GUInterval& first, const GUInterval& second, double tol) {
  switch (compare(second, first, tol)) {
    case Relation::StronglyGreater: return SystemOrder::Higher;
    case Relation::StronglySmaller: return SystemOrder::Lower;
    default: return SystemOrder::Incomparable;
  }
}

}  // namespace gut
