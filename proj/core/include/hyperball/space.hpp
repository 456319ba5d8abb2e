#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hyperball/rational.hpp"

namespace hyperball {

// A point of the word space: a finite word over the space's alphabet, or an
// eventually-constant infinite word written as a finite stem followed by the
// alphabet's first letter repeated forever.  Canonical form strips trailing
// copies of that letter from an infinite stem, so structural equality
// coincides with equality of the denoted words.  Text form: "ab" finite,
// "ab*" infinite ('*' never occurs in an alphabet).
struct Word {
  std::string letters;
  bool infinite = false;

  friend bool operator==(const Word& a, const Word& b) = default;
  friend bool operator<(const Word& a, const Word& b) {
    if (a.infinite != b.infinite) return !a.infinite;
    return a.letters < b.letters;
  }
};

// A point of one of the three carrier kinds: a rational in [0,1] for the
// lower-limit unit interval, a Word for word spaces, or an index into the
// point list of an explicit finite-matrix space.
class Point {
 public:
  static Point rational(Rational r) { return Point(std::move(r)); }
  static Point word(std::string letters, bool infinite = false) {
    return Point(Word{std::move(letters), infinite});
  }
  static Point index(std::size_t i) { return Point(i); }

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  bool is_word() const { return std::holds_alternative<Word>(v_); }
  bool is_index() const { return std::holds_alternative<std::size_t>(v_); }

  const Rational& as_rational() const { return std::get<Rational>(v_); }
  const Word& as_word() const { return std::get<Word>(v_); }
  std::size_t as_index() const { return std::get<std::size_t>(v_); }

  friend bool operator==(const Point& a, const Point& b) {
    if (a.v_.index() != b.v_.index()) return false;
    if (a.is_rational()) return a.as_rational() == b.as_rational();
    if (a.is_word()) return a.as_word() == b.as_word();
    return a.as_index() == b.as_index();
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  // Total order (kind tag first); used only to canonicalize sets and reports.
  friend bool operator<(const Point& a, const Point& b) {
    if (a.v_.index() != b.v_.index()) return a.v_.index() < b.v_.index();
    if (a.is_rational()) return a.as_rational() < b.as_rational();
    if (a.is_word()) return a.as_word() < b.as_word();
    return a.as_index() < b.as_index();
  }

 private:
  explicit Point(Rational r) : v_(std::move(r)) {}
  explicit Point(Word w) : v_(std::move(w)) {}
  explicit Point(std::size_t i) : v_(i) {}
  std::variant<Rational, Word, std::size_t> v_;
};

enum class SpaceKind { SorgenfreyUnit, Words, FiniteMatrix };

// Immutable definition of a quasi-metric space (X, d): d(x,x) = 0,
// d(x,z) <= d(x,y) + d(y,z), and separation d(x,y) = 0 => x = y.
//
// Three kinds are supported:
//  - SorgenfreyUnit: carrier [0,1] n Q, d(x,y) = y - x if x <= y, else 1.
//  - Words: finite and eventually-constant infinite words over an alphabet,
//    d(x,y) = 2^-len(x) - 2^-len(y) if x is a prefix of y, else 1,
//    with 2^-inf = 0.  Finite words and stems are capped at max_len.
//  - FiniteMatrix: an explicit nonnegative distance matrix over named
//    points; the constructor checks shape (square, zero diagonal), while
//    the semantic axioms are the business of verify_axioms.
class SpaceDef {
 public:
  static SpaceDef sorgenfrey_unit();
  static SpaceDef words(std::string alphabet, std::size_t max_len);
  static SpaceDef finite_matrix(std::vector<std::string> names,
                                std::vector<std::vector<Rational>> matrix);

  SpaceKind kind() const { return kind_; }

  // Upper bound declared for all realizable distances (1 for the built-in
  // carriers, the max entry for a matrix).  May be overridden upward.
  const Rational& bound() const { return bound_; }
  void declare_bound(Rational b);

  const std::string& alphabet() const { return alphabet_; }
  std::size_t max_len() const { return max_len_; }
  const std::vector<std::string>& point_names() const { return names_; }
  const std::vector<std::vector<Rational>>& matrix() const { return matrix_; }

  bool valid_point(const Point& p) const;
  // Throws std::invalid_argument naming the offending point if invalid.
  void require_point(const Point& p) const;

  // The quasi-metric.  Both points must be valid for this space.
  Rational dist(const Point& x, const Point& y) const;

  // Points exercised by default when a caller asks to validate the space
  // and supplies no sample of its own.
  std::vector<Point> default_sample() const;

  std::string point_to_text(const Point& p) const;
  Point point_from_text(std::string_view text) const;

 private:
  SpaceDef() = default;

  SpaceKind kind_ = SpaceKind::SorgenfreyUnit;
  Rational bound_ = Rational(1);
  // Words parameters.
  std::string alphabet_;
  std::size_t max_len_ = 0;
  std::vector<Rational> pow2neg_;  // pow2neg_[l] = 2^-l, l <= max_len
  // FiniteMatrix parameters.
  std::vector<std::string> names_;
  std::vector<std::vector<Rational>> matrix_;
};

// d with the roles of the arguments swapped: the conjugate quasi-metric.
Rational conjugate_dist(const SpaceDef& space, const Point& x, const Point& y);

// max of d and its conjugate: the induced (symmetric) metric.
Rational sym_dist(const SpaceDef& space, const Point& x, const Point& y);

// Membership of y in the open ball around center: d(center, y) < radius.
// Throws std::invalid_argument on nonpositive radius.
bool ball_contains(const SpaceDef& space, const Point& center,
                   const Rational& radius, const Point& y);

struct AxiomViolation {
  enum class Kind { SelfDistance, Separation, Triangle, Bound };
  Kind kind;
  Point x, y, z;      // z is meaningful only for Kind::Triangle
  Rational lhs, rhs;  // the two sides of the failed comparison
};

struct AxiomReport {
  std::size_t sample_size = 0;
  std::uint64_t pairs_checked = 0;
  std::uint64_t triples_checked = 0;
  bool exhaustive_triples = false;
  std::vector<AxiomViolation> violations;  // capped; empty means all passed
  bool ok() const { return violations.empty(); }
};

struct AxiomCheckOptions {
  // Exhaustive triple enumeration while n^3 stays within this budget;
  // beyond it, a deterministic pseudorandom sample of triples is used
  // (pairwise checks stay exhaustive either way).
  std::uint64_t exhaustive_triple_limit = 2'000'000;
  std::uint64_t random_triples = 100'000;
  std::uint64_t seed = 0x5eed;
  std::size_t max_reported_violations = 16;
};

// Checks d(x,x) = 0, separation, the declared bound, and the triangle
// inequality over the sample, exactly.  Duplicated sample points are
// checked once.
AxiomReport verify_axioms(const SpaceDef& space,
                          const std::vector<Point>& sample,
                          const AxiomCheckOptions& options = {});

// A finite prefix x_1, ..., x_N of a sequence in the space.
struct SequencePrefix {
  std::vector<Point> points;
};

// Whether d(x_n, x_m) < epsilon for all from_index <= n <= m <= N
// (indices 1-based).  This is the forward-Cauchy condition witnessed at
// one candidate start index, on the available prefix.
// Throws std::invalid_argument on an empty prefix or out-of-range index.
bool check_cauchy(const SpaceDef& space, const SequencePrefix& prefix,
                  const Rational& epsilon, std::size_t from_index);

// How far the candidate point is from being the limit the prefix points
// at, measured against the given probes:
//   max over probes y of | d(candidate, y) - min over n of (max over
//   m in [n, N] of d(x_m, y)) |.
// Zero means the candidate agrees with the truncated limit formula on
// every probe.  Throws on empty prefix or empty probe set.
Rational yoneda_residual(const SpaceDef& space, const SequencePrefix& prefix,
                         const Point& candidate,
                         const std::vector<Point>& probes);

// Residual of the finite-element distance formula on a prefix:
//   | d(e, limit) - max over n of (min over m in [n, N] of d(e, x_m)) |.
// Throws on an empty prefix.
Rational finite_element_residual(const SpaceDef& space, const Point& e,
                                 const SequencePrefix& prefix,
                                 const Point& limit);

}  // namespace hyperball
