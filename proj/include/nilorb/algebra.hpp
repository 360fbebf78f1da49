#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nilorb {

/// Supported simple families. Complex algebras are treated as members in
/// their own right (as real algebras they are real forms of their doubles).
enum class Family { sl_real, sl_complex, su, so_real, so_complex };

/// One simple summand: sl(n,R), sl(n,C), su(p,q), so(p,q) or so(m,C).
/// su/so real forms are stored with p >= q (normalized on construction).
struct SimpleAlgebra {
  Family family = Family::sl_real;
  int p = 0;  // n for sl, p for su/so(p,q), m for so(m,C)
  int q = 0;  // unused for sl and so(m,C)

  static SimpleAlgebra sl_real_form(int n) {
    if (n < 2) throw std::invalid_argument("sl(n,R) requires n >= 2");
    return SimpleAlgebra{Family::sl_real, n, 0};
  }

  static SimpleAlgebra sl_complex_form(int n) {
    if (n < 2) throw std::invalid_argument("sl(n,C) requires n >= 2");
    return SimpleAlgebra{Family::sl_complex, n, 0};
  }

  static SimpleAlgebra su_form(int p, int q) {
    if (p < q) std::swap(p, q);
    if (q < 1) throw std::invalid_argument("su(p,q) requires p >= q >= 1");
    return SimpleAlgebra{Family::su, p, q};
  }

  static SimpleAlgebra so_real_form(int p, int q) {
    if (p < q) std::swap(p, q);
    if (q < 1 || p + q < 3)
      throw std::invalid_argument("so(p,q) requires p >= q >= 1 and p+q >= 3");
    return SimpleAlgebra{Family::so_real, p, q};
  }

  static SimpleAlgebra so_complex_form(int m) {
    if (m < 3) throw std::invalid_argument("so(m,C) requires m >= 3");
    return SimpleAlgebra{Family::so_complex, m, 0};
  }

  bool is_complex() const {
    return family == Family::sl_complex || family == Family::so_complex;
  }

  /// Size of the defining matrix representation.
  int defining_size() const {
    switch (family) {
      case Family::sl_real:
      case Family::sl_complex:
      case Family::so_complex:
        return p;
      case Family::su:
      case Family::so_real:
        return p + q;
    }
    return 0;
  }

  std::string to_string() const {
    switch (family) {
      case Family::sl_real:
        return "sl(" + std::to_string(p) + ",R)";
      case Family::sl_complex:
        return "sl(" + std::to_string(p) + ",C)";
      case Family::su:
        return "su(" + std::to_string(p) + "," + std::to_string(q) + ")";
      case Family::so_real:
        return "so(" + std::to_string(p) + "," + std::to_string(q) + ")";
      case Family::so_complex:
        return "so(" + std::to_string(p) + ",C)";
    }
    return "";
  }

  auto operator<=>(const SimpleAlgebra&) const = default;
};

/// A formal direct sum of simple summands (nonempty, order preserved).
class AlgebraSpec {
public:
  AlgebraSpec(SimpleAlgebra member) : summands_{member} {}  // NOLINT(implicit)

  explicit AlgebraSpec(std::vector<SimpleAlgebra> summands)
      : summands_(std::move(summands)) {
    if (summands_.empty())
      throw std::invalid_argument("AlgebraSpec: at least one summand required");
  }

  const std::vector<SimpleAlgebra>& summands() const { return summands_; }

  int summand_count() const { return static_cast<int>(summands_.size()); }

  bool is_simple() const { return summands_.size() == 1; }

  const SimpleAlgebra& simple() const {
    if (!is_simple())
      throw std::invalid_argument("AlgebraSpec: not a simple algebra");
    return summands_.front();
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < summands_.size(); ++i) {
      if (i) s += "+";
      s += summands_[i].to_string();
    }
    return s;
  }

  bool operator==(const AlgebraSpec&) const = default;

private:
  std::vector<SimpleAlgebra> summands_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline int parse_int(std::string_view tok, std::string_view term) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw std::invalid_argument("algebra parse error: bad integer '" +
                                std::string(tok) + "' in '" + std::string(term) + "'");
  return value;
}

inline SimpleAlgebra parse_simple(std::string_view term) {
  const auto fail = [&](const std::string& why) -> SimpleAlgebra {
    throw std::invalid_argument("algebra parse error: " + why + " in '" +
                                std::string(term) + "'");
  };
  const std::size_t open = term.find('(');
  if (open == std::string_view::npos || term.back() != ')')
    return fail("expected 'family(args)'");
  const std::string_view fam = trim(term.substr(0, open));
  const std::string_view args = term.substr(open + 1, term.size() - open - 2);
  const std::size_t comma = args.find(',');
  if (comma == std::string_view::npos) return fail("expected two arguments");
  const std::string_view first = trim(args.substr(0, comma));
  const std::string_view second = trim(args.substr(comma + 1));
  if (second.find(',') != std::string_view::npos) return fail("too many arguments");

  if (fam == "sl") {
    const int n = parse_int(first, term);
    if (second == "R") return SimpleAlgebra::sl_real_form(n);
    if (second == "C") return SimpleAlgebra::sl_complex_form(n);
    return fail("expected 'R' or 'C', got '" + std::string(second) + "'");
  }
  if (fam == "su") {
    return SimpleAlgebra::su_form(parse_int(first, term), parse_int(second, term));
  }
  if (fam == "so") {
    if (second == "C") return SimpleAlgebra::so_complex_form(parse_int(first, term));
    return SimpleAlgebra::so_real_form(parse_int(first, term), parse_int(second, term));
  }
  return fail("unknown family '" + std::string(fam) + "'");
}

}  // namespace detail

/// Parse an algebra description such as "sl(4,R)", "su(2,1)", "so(4,C)" or a
/// direct sum "sl(2,R)+so(3,1)". Throws std::invalid_argument on bad input,
/// echoing the offending token.
inline AlgebraSpec parse_algebra(std::string_view text) {
  std::vector<SimpleAlgebra> summands;
  std::size_t start = 0;
  const std::string_view whole = text;
  while (start <= text.size()) {
    std::size_t plus = text.find('+', start);
    if (plus == std::string_view::npos) plus = text.size();
    const std::string_view term = detail::trim(text.substr(start, plus - start));
    if (term.empty())
      throw std::invalid_argument("algebra parse error: empty term in '" +
                                  std::string(whole) + "'");
    summands.push_back(detail::parse_simple(term));
    if (plus == text.size()) break;
    start = plus + 1;
  }
  return AlgebraSpec(std::move(summands));
}

/// Complexification at the level of algebra descriptions. Complex members map
/// to themselves; real forms map to the complex algebra they are forms of.
inline SimpleAlgebra complexify_algebra(const SimpleAlgebra& g) {
  switch (g.family) {
    case Family::sl_real:
      return SimpleAlgebra::sl_complex_form(g.p);
    case Family::su:
      return SimpleAlgebra::sl_complex_form(g.p + g.q);
    case Family::so_real:
      return SimpleAlgebra::so_complex_form(g.p + g.q);
    case Family::sl_complex:
    case Family::so_complex:
      return g;
  }
  return g;
}

inline AlgebraSpec complexify_algebra(const AlgebraSpec& g) {
  std::vector<SimpleAlgebra> out;
  out.reserve(g.summands().size());
  for (const SimpleAlgebra& s : g.summands()) out.push_back(complexify_algebra(s));
  return AlgebraSpec(std::move(out));
}

inline bool is_split(const SimpleAlgebra& g) {
  switch (g.family) {
    case Family::sl_real:
      return true;
    case Family::su:
    case Family::sl_complex:
    case Family::so_complex:
      return false;
    case Family::so_real:
      return g.p - g.q <= 1;
  }
  return false;
}

inline bool is_quasi_split(const SimpleAlgebra& g) {
  switch (g.family) {
    case Family::sl_real:
    case Family::sl_complex:
    case Family::so_complex:
      return true;
    case Family::su:
      return g.p - g.q <= 1;
    case Family::so_real:
      return g.p - g.q <= 2;
  }
  return false;
}

inline bool is_split(const AlgebraSpec& g) {
  return std::all_of(g.summands().begin(), g.summands().end(),
                     [](const SimpleAlgebra& s) { return is_split(s); });
}

inline bool is_quasi_split(const AlgebraSpec& g) {
  return std::all_of(g.summands().begin(), g.summands().end(),
                     [](const SimpleAlgebra& s) { return is_quasi_split(s); });
}

/// True for so(2n+1,2n-1): the quasi-split orthogonal forms whose orbit
/// complexification map fails to be surjective.
inline bool is_odd_balanced_orthogonal(const SimpleAlgebra& g) {
  return g.family == Family::so_real && g.p - g.q == 2 && g.p % 2 == 1;
}

/// Right-hand side of the surjectivity characterization: quasi-split with no
/// summand of the form so(2n+1,2n-1).
inline bool theorem1_predicate(const AlgebraSpec& g) {
  if (!is_quasi_split(g)) return false;
  return std::none_of(g.summands().begin(), g.summands().end(),
                      is_odd_balanced_orthogonal);
}

}  // namespace nilorb
