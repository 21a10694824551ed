#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pointfree/filters.hpp"

namespace pointfree {

using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// A rational number or one of the two infinities.
class QBound {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  QBound() = default;
  QBound(Rational value) : kind_(Kind::Finite), value_(std::move(value)) {}  // NOLINT: implicit by design
  QBound(long long value) : QBound(Rational(value)) {}                      // NOLINT
  static QBound neg_inf() { return QBound(Kind::NegInf); }
  static QBound pos_inf() { return QBound(Kind::PosInf); }

  Kind kind() const noexcept { return kind_; }
  bool finite() const noexcept { return kind_ == Kind::Finite; }
  const Rational& value() const { return value_; }

  friend bool operator==(const QBound& a, const QBound& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const QBound& a, const QBound& b);

 private:
  explicit QBound(Kind k) : kind_(k) {}
  Kind kind_ = Kind::Finite;
  Rational value_{0};
};

std::string to_string(const QBound& b);

struct Interval {
  QBound lo;
  QBound hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A finite union of open intervals with rational or infinite endpoints,
/// kept sorted with overlapping pieces merged. Pieces that merely share an
/// endpoint stay separate since that point is missing from the union.
class IntervalOpen {
 public:
  IntervalOpen() = default;
  /// Canonicalises an arbitrary list; empty pieces are dropped.
  explicit IntervalOpen(std::vector<Interval> pieces);

  static IntervalOpen empty() { return {}; }
  static IntervalOpen full() { return IntervalOpen({{QBound::neg_inf(), QBound::pos_inf()}}); }
  static IntervalOpen interval(QBound lo, QBound hi) { return IntervalOpen({{std::move(lo), std::move(hi)}}); }
  /// ℝ ∖ {x}.
  static IntervalOpen punctured_line(const Rational& x);

  const std::vector<Interval>& pieces() const noexcept { return pieces_; }
  bool is_empty() const noexcept { return pieces_.empty(); }
  bool is_full() const;
  bool contains(const Rational& x) const;

  friend bool operator==(const IntervalOpen&, const IntervalOpen&) = default;

 private:
  std::vector<Interval> pieces_;
};

/// Syntax: `(0,1)u(3/2,2)u(5,inf)`, `-inf` allowed, `empty` for ⊥.
IntervalOpen parse_interval_open(std::string_view text);
std::string to_string(const IntervalOpen& u);

IntervalOpen io_join(const IntervalOpen& u, const IntervalOpen& v);
IntervalOpen io_meet(const IntervalOpen& u, const IntervalOpen& v);
/// Interior of (ℝ ∖ u) ∪ v.
IntervalOpen io_heyting(const IntervalOpen& u, const IntervalOpen& v);
/// Interior of ℝ ∖ u, i.e. ℝ minus the closure of u.
IntervalOpen io_pseudocomplement(const IntervalOpen& u);
/// Set inclusion.
bool io_leq(const IntervalOpen& u, const IntervalOpen& v);
/// Closure of u inside v.
bool io_completely_below(const IntervalOpen& u, const IntervalOpen& v);
/// Some w with u ≪ w ≪ v, built from endpoint midpoints. Requires u ≪ v.
IntervalOpen io_interpolant(const IntervalOpen& u, const IntervalOpen& v);

struct PunctureInfo {
  bool punctured = false;
  std::vector<Rational> abutments;
};
PunctureInfo io_is_punctured(const IntervalOpen& u);
/// Merges every abutting pair: the π nucleus on this carrier.
IntervalOpen io_fill(const IntervalOpen& u);

/// Joins and meets of the pointless fragment (unpunctured elements).
/// Throw InputPunctured on a punctured argument.
IntervalOpen pl_join(std::span<const IntervalOpen> parts);
IntervalOpen pl_meet(std::span<const IntervalOpen> parts);

struct GeneratorRelationReport {
  Rational p;
  Rational q;
  bool join_is_top = false;         // (p,∞) ∨ (−∞,q) in the fragment
  bool join_expected = false;       // p ≤ q
  bool meet_is_bottom = false;      // (p,∞) ∧ (−∞,q)
  bool meet_forced = false;         // p > q, where the meet must vanish
  bool meet_exact = false;          // p ≥ q, exactly when it vanishes
  bool approximations_monotone = false;  // partial joins/meets move toward their limits
  bool approximations_bounded = false;   // and stay on the correct side of them
  bool relation_one_holds() const { return join_is_top == join_expected; }
  bool relation_two_holds() const { return !meet_forced || meet_is_bottom; }
  bool meet_characterised() const { return meet_is_bottom == meet_exact; }
};
/// Checks the defining relations between (p,∞) and (−∞,q); the infinite
/// joins and meets are approximated by `depth` finite stages.
GeneratorRelationReport generator_relations(const Rational& p, const Rational& q, int depth = 16);

using IntervalFilter = OracleFilter<IntervalOpen>;

/// Unpunctured opens containing x, with constructive round and regular
/// witnesses. The regular witness answers only unpunctured challenges.
IntervalFilter point_filter(const Rational& x);
/// Opens containing x with the same witnesses, on the full topology where
/// the challenge ℝ ∖ {x} has no answer.
IntervalFilter full_point_filter(const Rational& x);

/// Unpunctured element with endpoints on the quarter grid of [-span, span].
IntervalOpen random_unpunctured(std::mt19937_64& rng, int max_pieces = 3, int span = 4);
/// As above, but adjacent pieces may abut.
IntervalOpen random_interval_open(std::mt19937_64& rng, int max_pieces = 3, int span = 4);

/// Separating members for two distinct point filters.
std::pair<IntervalOpen, IntervalOpen> separate_points(const Rational& x, const Rational& z);

}  // namespace pointfree
