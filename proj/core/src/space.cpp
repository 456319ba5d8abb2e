#include "hyperball/space.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace hyperball {

namespace {

constexpr std::size_t kDistCacheMaxPoints = 1024;

// Letters that would collide with the text encodings "stem*" (infinite
// word) and "point@radius" (formal ball).
bool reserved_letter(char c) { return c == '*' || c == '@' || c == '/'; }

}  // namespace

SpaceDef SpaceDef::sorgenfrey_unit() {
  SpaceDef s;
  s.kind_ = SpaceKind::SorgenfreyUnit;
  s.bound_ = Rational(1);
  return s;
}

SpaceDef SpaceDef::words(std::string alphabet, std::size_t max_len) {
  if (alphabet.empty()) throw std::invalid_argument("words space: empty alphabet");
  if (max_len == 0) throw std::invalid_argument("words space: max_len must be positive");
  std::string sorted = alphabet;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("words space: duplicate alphabet letter");
  }
  for (char c : alphabet) {
    if (reserved_letter(c)) throw std::invalid_argument("words space: reserved letter in alphabet");
  }
  SpaceDef s;
  s.kind_ = SpaceKind::Words;
  s.bound_ = Rational(1);
  s.alphabet_ = std::move(alphabet);
  s.max_len_ = max_len;
  s.pow2neg_.reserve(max_len + 1);
  Rational p(1);
  s.pow2neg_.push_back(p);
  for (std::size_t l = 1; l <= max_len; ++l) {
    p = p / Rational(2);
    s.pow2neg_.push_back(p);
  }
  return s;
}

SpaceDef SpaceDef::finite_matrix(std::vector<std::string> names,
                                 std::vector<std::vector<Rational>> matrix) {
  const std::size_t n = names.size();
  if (n == 0) throw std::invalid_argument("matrix space: no points");
  if (matrix.size() != n) throw std::invalid_argument("matrix space: matrix is not square");
  {
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("matrix space: duplicate point name");
    }
  }
  Rational maxent(0);
  for (std::size_t i = 0; i < n; ++i) {
    if (names[i].empty()) throw std::invalid_argument("matrix space: empty point name");
    for (char c : names[i]) {
      if (reserved_letter(c)) throw std::invalid_argument("matrix space: reserved character in point name");
    }
    if (matrix[i].size() != n) throw std::invalid_argument("matrix space: matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& e = matrix[i][j];
      if (e.is_negative()) throw std::invalid_argument("matrix space: negative distance entry");
      if (i == j && !e.is_zero()) throw std::invalid_argument("matrix space: nonzero diagonal entry");
      maxent = rat_max(maxent, e);
    }
  }
  SpaceDef s;
  s.kind_ = SpaceKind::FiniteMatrix;
  s.bound_ = maxent;
  s.names_ = std::move(names);
  s.matrix_ = std::move(matrix);
  return s;
}

void SpaceDef::declare_bound(Rational b) {
  if (b < bound_) throw std::invalid_argument("declared bound below a realizable distance");
  bound_ = std::move(b);
}

bool SpaceDef::valid_point(const Point& p) const {
  switch (kind_) {
    case SpaceKind::SorgenfreyUnit: {
      if (!p.is_rational()) return false;
      const Rational& r = p.as_rational();
      return !r.is_negative() && r <= Rational(1);
    }
    case SpaceKind::Words: {
      if (!p.is_word()) return false;
      const Word& w = p.as_word();
      if (w.letters.size() > max_len_) return false;
      for (char c : w.letters) {
        if (alphabet_.find(c) == std::string::npos) return false;
      }
      // Canonical infinite form: the stem must not end with the repeated
      // letter, otherwise two representations denote one word.
      if (w.infinite && !w.letters.empty() && w.letters.back() == alphabet_.front()) return false;
      return true;
    }
    case SpaceKind::FiniteMatrix:
      return p.is_index() && p.as_index() < names_.size();
  }
  return false;
}

void SpaceDef::require_point(const Point& p) const {
  if (!valid_point(p)) {
    throw std::invalid_argument("invalid point for this space: " +
                                (p.is_rational()   ? p.as_rational().str()
                                 : p.is_word()     ? p.as_word().letters + (p.as_word().infinite ? "*" : "")
                                                   : "#" + std::to_string(p.as_index())));
  }
}

namespace {

// x <= y as (possibly infinite) words.  Infinite words repeat `rep` after
// their stem; stems are canonical (never end in `rep`), so two infinite
// words are prefix-related exactly when their stems are equal.
bool word_prefix(const Word& x, const Word& y, char rep) {
  if (x.infinite) return y.infinite && x.letters == y.letters;
  if (!y.infinite) {
    return x.letters.size() <= y.letters.size() &&
           y.letters.compare(0, x.letters.size(), x.letters) == 0;
  }
  const std::string& stem = y.letters;
  for (std::size_t i = 0; i < x.letters.size(); ++i) {
    const char expected = i < stem.size() ? stem[i] : rep;
    if (x.letters[i] != expected) return false;
  }
  return true;
}

}  // namespace

Rational SpaceDef::dist(const Point& x, const Point& y) const {
  require_point(x);
  require_point(y);
  switch (kind_) {
    case SpaceKind::SorgenfreyUnit: {
      const Rational& a = x.as_rational();
      const Rational& b = y.as_rational();
      return a <= b ? b - a : Rational(1);
    }
    case SpaceKind::Words: {
      const Word& a = x.as_word();
      const Word& b = y.as_word();
      if (!word_prefix(a, b, alphabet_.front())) return Rational(1);
      const Rational la = a.infinite ? Rational(0) : pow2neg_[a.letters.size()];
      const Rational lb = b.infinite ? Rational(0) : pow2neg_[b.letters.size()];
      return la - lb;
    }
    case SpaceKind::FiniteMatrix:
      return matrix_[x.as_index()][y.as_index()];
  }
  throw std::logic_error("unreachable space kind");
}

std::vector<Point> SpaceDef::default_sample() const {
  std::vector<Point> out;
  switch (kind_) {
    case SpaceKind::SorgenfreyUnit:
      out.push_back(Point::rational(Rational(0)));
      out.push_back(Point::rational(Rational(1, 3)));
      out.push_back(Point::rational(Rational(1, 2)));
      out.push_back(Point::rational(Rational(2, 3)));
      out.push_back(Point::rational(Rational(1)));
      return out;
    case SpaceKind::Words: {
      const std::size_t depth = std::min<std::size_t>(2, max_len_);
      std::vector<std::string> layer{""};
      out.push_back(Point::word(""));
      for (std::size_t l = 0; l < depth; ++l) {
        std::vector<std::string> next;
        for (const auto& w : layer) {
          for (char c : alphabet_) {
            next.push_back(w + c);
            out.push_back(Point::word(w + c));
          }
        }
        layer = std::move(next);
      }
      out.push_back(Point::word("", true));  // the all-first-letter word
      if (alphabet_.size() > 1) out.push_back(Point::word(std::string(1, alphabet_[1]), true));
      return out;
    }
    case SpaceKind::FiniteMatrix:
      for (std::size_t i = 0; i < names_.size(); ++i) out.push_back(Point::index(i));
      return out;
  }
  return out;
}

std::string SpaceDef::point_to_text(const Point& p) const {
  require_point(p);
  switch (kind_) {
    case SpaceKind::SorgenfreyUnit:
      return p.as_rational().str();
    case SpaceKind::Words:
      return p.as_word().letters + (p.as_word().infinite ? "*" : "");
    case SpaceKind::FiniteMatrix:
      return names_[p.as_index()];
  }
  throw std::logic_error("unreachable space kind");
}

Point SpaceDef::point_from_text(std::string_view text) const {
  switch (kind_) {
    case SpaceKind::SorgenfreyUnit: {
      Point p = Point::rational(Rational::from_string(text));
      require_point(p);
      return p;
    }
    case SpaceKind::Words: {
      bool infinite = false;
      if (!text.empty() && text.back() == '*') {
        infinite = true;
        text.remove_suffix(1);
      }
      std::string stem(text);
      if (infinite) {
        // Accept non-canonical stems in input and canonicalize here.
        while (!stem.empty() && stem.back() == alphabet_.front()) stem.pop_back();
      }
      Point p = Point::word(std::move(stem), infinite);
      require_point(p);
      return p;
    }
    case SpaceKind::FiniteMatrix: {
      for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == text) return Point::index(i);
      }
      throw std::invalid_argument("unknown point name '" + std::string(text) + "'");
    }
  }
  throw std::logic_error("unreachable space kind");
}

Rational conjugate_dist(const SpaceDef& space, const Point& x, const Point& y) {
  return space.dist(y, x);
}

Rational sym_dist(const SpaceDef& space, const Point& x, const Point& y) {
  return rat_max(space.dist(x, y), space.dist(y, x));
}

bool ball_contains(const SpaceDef& space, const Point& center,
                   const Rational& radius, const Point& y) {
  if (!radius.is_positive()) throw std::invalid_argument("ball_contains: nonpositive radius");
  return space.dist(center, y) < radius;
}

AxiomReport verify_axioms(const SpaceDef& space, const std::vector<Point>& sample,
                          const AxiomCheckOptions& options) {
  for (const Point& p : sample) space.require_point(p);

  std::vector<Point> pts = sample;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  AxiomReport report;
  report.sample_size = pts.size();
  const std::size_t n = pts.size();
  // A vacuous report would read as evidence; demand at least one point.
  if (n == 0) throw std::invalid_argument("verify_axioms: empty sample");

  const bool cached = n <= kDistCacheMaxPoints;
  std::vector<Rational> dmat;
  if (cached) {
    dmat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) dmat.push_back(space.dist(pts[i], pts[j]));
    }
  }
  auto d = [&](std::size_t i, std::size_t j) -> Rational {
    return cached ? dmat[i * n + j] : space.dist(pts[i], pts[j]);
  };
  auto report_violation = [&](AxiomViolation v) {
    if (report.violations.size() < options.max_reported_violations) {
      report.violations.push_back(std::move(v));
    }
  };

  const Rational zero(0);
  for (std::size_t i = 0; i < n; ++i) {
    Rational dii = d(i, i);
    if (!dii.is_zero()) {
      report_violation({AxiomViolation::Kind::SelfDistance, pts[i], pts[i], pts[i], dii, zero});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      ++report.pairs_checked;
      Rational dij = d(i, j);
      if (dij.is_zero()) {
        report_violation({AxiomViolation::Kind::Separation, pts[i], pts[j], pts[j], dij, zero});
      }
      if (dij > space.bound()) {
        report_violation({AxiomViolation::Kind::Bound, pts[i], pts[j], pts[j], dij, space.bound()});
      }
    }
  }

  const std::uint64_t total = static_cast<std::uint64_t>(n) * n * n;
  mpq_class sum;  // reused triangle right-hand side
  auto check_triple = [&](std::size_t i, std::size_t j, std::size_t k) {
    ++report.triples_checked;
    const Rational dik = d(i, k);
    const Rational dij = d(i, j);
    const Rational djk = d(j, k);
    sum = dij.raw() + djk.raw();
    if (cmp(dik.raw(), sum) > 0) {
      report_violation({AxiomViolation::Kind::Triangle, pts[i], pts[j], pts[k], dik, dij + djk});
    }
  };

  if (total <= options.exhaustive_triple_limit) {
    report.exhaustive_triples = true;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) check_triple(i, j, k);
      }
    }
  } else {
    report.exhaustive_triples = false;
    std::mt19937_64 rng(options.seed);
    for (std::uint64_t t = 0; t < options.random_triples; ++t) {
      check_triple(rng() % n, rng() % n, rng() % n);
    }
  }
  return report;
}

bool check_cauchy(const SpaceDef& space, const SequencePrefix& prefix,
                  const Rational& epsilon, std::size_t from_index) {
  const std::size_t n = prefix.points.size();
  if (n == 0) throw std::invalid_argument("check_cauchy: empty prefix");
  if (from_index < 1 || from_index > n) throw std::invalid_argument("check_cauchy: index out of range");
  for (const Point& p : prefix.points) space.require_point(p);
  for (std::size_t i = from_index - 1; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (!(space.dist(prefix.points[i], prefix.points[j]) < epsilon)) return false;
    }
  }
  return true;
}

Rational yoneda_residual(const SpaceDef& space, const SequencePrefix& prefix,
                         const Point& candidate, const std::vector<Point>& probes) {
  const std::size_t n = prefix.points.size();
  if (n == 0) throw std::invalid_argument("yoneda_residual: empty prefix");
  if (probes.empty()) throw std::invalid_argument("yoneda_residual: empty probe set");
  space.require_point(candidate);

  Rational residual(0);
  for (const Point& y : probes) {
    // min over start indices of the running tail maximum of d(x_m, y).
    Rational tail = space.dist(prefix.points[n - 1], y);
    Rational inner = tail;
    for (std::size_t i = n - 1; i-- > 0;) {
      tail = rat_max(tail, space.dist(prefix.points[i], y));
      inner = rat_min(inner, tail);
    }
    residual = rat_max(residual, (space.dist(candidate, y) - inner).abs());
  }
  return residual;
}

Rational finite_element_residual(const SpaceDef& space, const Point& e,
                                 const SequencePrefix& prefix, const Point& limit) {
  const std::size_t n = prefix.points.size();
  if (n == 0) throw std::invalid_argument("finite_element_residual: empty prefix");

  // max over start indices of the running tail minimum of d(e, x_m).
  Rational tail = space.dist(e, prefix.points[n - 1]);
  Rational inner = tail;
  for (std::size_t i = n - 1; i-- > 0;) {
    tail = rat_min(tail, space.dist(e, prefix.points[i]));
    inner = rat_max(inner, tail);
  }
  return (space.dist(e, limit) - inner).abs();
}

}  // namespace hyperball
