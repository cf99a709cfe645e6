#include "klnet/factor.hpp"

#include <algorithm>
#include <sstream>

#include "klnet/network.hpp"

namespace klnet {

std::map<std::pair<int, int>, std::set<int>> overlap_intervals(const IntervalSequence& seq) {
  for (Interval iv : seq.intervals) check_interval(seq.n, iv);
  std::map<std::pair<int, int>, std::set<int>> out;
  const int m = static_cast<int>(seq.intervals.size());
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) out[{i, j}] = overlap_positions(seq.intervals, i, j);
  return out;
}

QPoly overlap_poly(const IntervalSequence& seq) {
  QPoly f = QPoly::one();
  for (const auto& [pair, set] : overlap_intervals(seq)) f *= q_factorial(static_cast<int>(set.size()));
  return f;
}

bool verify(const Permutation& w, const IntervalSequence& seq) {
  if (w.degree() != seq.n) throw std::invalid_argument("verify: degree mismatch");
  const HeckeElement product = product_of_reversal_kls(seq.n, seq.intervals);
  const QPoly f = overlap_poly(seq);
  return kl_basis_element(w).scaled(f) == product;
}

namespace {

Permutation demazure_left(Interval iv, const Permutation& x) {
  // Bruhat-maximal support element of R(iv) * T_x: fold the reversal's reduced
  // word from the inside out, keeping each step only when it goes up.
  Permutation y = x;
  const std::vector<int> word = reduced_word(reversal(x.degree(), iv));
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    if (!has_left_descent(y, *it)) y = left_gen(*it, y);
  return y;
}

bool window_in_descents(Interval iv, const std::vector<bool>& descents) {
  for (int i = iv.a; i < iv.b; ++i)
    if (!descents[i]) return false;
  return true;
}

struct SearchContext {
  const Permutation& w;
  HeckeElement target_unit;  // kl_basis_element(w)
  int max_factors;
  std::vector<bool> right_descents, left_descents;  // indexed 1..n-1
  std::vector<Interval> candidates;                 // width >= 2
  std::uint64_t searched = 0;
  std::optional<IntervalSequence> found;
  QPoly found_overlap;
};

bool dfs(SearchContext& ctx, std::vector<Interval>& prefix, const HeckeElement& product,
         const Permutation& demazure) {
  if (demazure == ctx.w && (prefix.empty() || window_in_descents(prefix.back(), ctx.left_descents))) {
    IntervalSequence seq{ctx.w.degree(), prefix};
    const QPoly f = overlap_poly(seq);
    if (ctx.target_unit.scaled(f) == product) {
      ctx.found = std::move(seq);
      ctx.found_overlap = f;
      return true;
    }
  }
  if (static_cast<int>(prefix.size()) >= ctx.max_factors) return false;

  struct Move {
    Interval iv;
    Permutation next;
    int gain;
  };
  std::vector<Move> moves;
  for (Interval iv : ctx.candidates) {
    ++ctx.searched;
    if (prefix.empty() && !window_in_descents(iv, ctx.right_descents)) continue;
    Permutation next = demazure_left(iv, demazure);
    if (!bruhat_leq(next, ctx.w)) continue;
    moves.push_back(Move{iv, std::move(next), 0});
  }
  for (Move& mv : moves) mv.gain = length(mv.next) - length(demazure);
  std::stable_sort(moves.begin(), moves.end(),
                   [](const Move& x, const Move& y) { return x.gain > y.gain; });
  for (const Move& mv : moves) {
    prefix.push_back(mv.iv);
    HeckeElement next_product = left_mul_reversal_kl(mv.iv, product);
    if (dfs(ctx, prefix, next_product, mv.next)) return true;
    prefix.pop_back();
  }
  return false;
}

const Permutation& pattern_3412() {
  static const Permutation p(std::vector<int>{3, 4, 1, 2});
  return p;
}
const Permutation& pattern_4231() {
  static const Permutation p(std::vector<int>{4, 2, 3, 1});
  return p;
}
const Permutation& pattern_45312() {
  static const Permutation p(std::vector<int>{4, 5, 3, 1, 2});
  return p;
}
const Permutation& pattern_321() {
  static const Permutation p(std::vector<int>{3, 2, 1});
  return p;
}

bool avoids(const Permutation& w, const Permutation& u) {
  if (u.degree() > w.degree()) return true;
  return avoids_pattern(w, u);
}

}  // namespace

int default_max_factors(const Permutation& w) { return length(w); }

FactorizationResult search(const Permutation& w, int max_factors, const SearchOptions& opts) {
  FactorizationResult res;
  res.bound = max_factors;
  const ClassifyResult cls = classify(w);
  if (opts.use_impossibility_proof && cls.kind == Classification::kProvedUnfactorable) {
    res.status = SearchStatus::kProvedImpossible;
    res.gap = cls.gap;
    return res;
  }
  if (opts.assume_conjecture && cls.kind == Classification::kConjecturedUnfactorable) {
    res.status = SearchStatus::kNotFoundWithinBound;
    return res;
  }
  if (w.is_identity()) {
    res.status = SearchStatus::kFound;
    res.sequence = IntervalSequence{w.degree(), {}};
    res.overlap = QPoly::one();
    return res;
  }
  if (opts.use_reduced_word_witness && cls.kind == Classification::kFactorableByBW &&
      length(w) <= max_factors) {
    const std::vector<int> word = reduced_word(w);
    IntervalSequence seq{w.degree(), {}};
    for (auto it = word.rbegin(); it != word.rend(); ++it) seq.intervals.push_back(Interval{*it, *it + 1});
    ++res.searched;
    if (verify(w, seq)) {
      res.status = SearchStatus::kFound;
      res.overlap = overlap_poly(seq);
      res.sequence = std::move(seq);
      return res;
    }
  }

  SearchContext ctx{w, kl_basis_element(w), max_factors, {}, {}, {}, res.searched, {}, {}};
  const int n = w.degree();
  ctx.right_descents.assign(n, false);
  ctx.left_descents.assign(n, false);
  for (int i = 1; i < n; ++i) {
    ctx.right_descents[i] = has_right_descent(w, i);
    ctx.left_descents[i] = has_left_descent(w, i);
  }
  ctx.candidates = all_intervals(n, 2);
  std::vector<Interval> prefix;
  dfs(ctx, prefix, HeckeElement::unit(n), Permutation::identity(n));
  res.searched = ctx.searched;
  if (ctx.found) {
    res.status = SearchStatus::kFound;
    res.sequence = std::move(ctx.found);
    res.overlap = std::move(ctx.found_overlap);
  } else {
    res.status = SearchStatus::kNotFoundWithinBound;
  }
  return res;
}

ClassifyResult classify(const Permutation& w) {
  // Hexagon avoidance for the reduced-word route.
  static const std::vector<std::vector<int>> hexagons = {
      {5, 6, 7, 8, 1, 2, 3, 4}, {4, 6, 7, 8, 1, 2, 3, 5}, {5, 6, 7, 1, 8, 2, 3, 4}, {4, 6, 7, 1, 8, 2, 3, 5}};
  bool bw = avoids(w, pattern_321());
  for (const auto& word : hexagons) {
    if (!bw) break;
    bw = avoids(w, Permutation(word));
  }
  if (bw) return {Classification::kFactorableByBW, 0};

  const bool c3412 = !avoids(w, pattern_3412());
  const bool c4231 = !avoids(w, pattern_4231());
  if (!c3412 && !c4231) return {Classification::kFactorableBySmooth, 0};
  if (!c4231 && c3412) {
    const int gap = gap3412(w);
    if (gap > 1) return {Classification::kProvedUnfactorable, gap};
  }
  if (!avoids(w, pattern_45312())) return {Classification::kConjecturedUnfactorable, 0};
  return {Classification::kUnknown, 0};
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::kFactorableByBW:
      return "FactorableByBW";
    case Classification::kFactorableBySmooth:
      return "FactorableBySmooth";
    case Classification::kProvedUnfactorable:
      return "ProvedUnfactorable";
    case Classification::kConjecturedUnfactorable:
      return "ConjecturedUnfactorable";
    case Classification::kUnknown:
      return "Unknown";
  }
  return "?";
}

std::optional<int> singdeg(const Permutation& w) {
  const bool c4231 = !avoids(w, pattern_4231());
  const bool c3412 = !avoids(w, pattern_3412());
  if (!c4231 && !c3412) return std::nullopt;
  if (c4231) return 1;
  return gap3412(w);
}

std::optional<int> singdeg_brute(const Permutation& w) {
  const QPoly p = kl_polynomial(Permutation::identity(w.degree()), w);
  if (p.is_one()) return std::nullopt;
  for (int d = 1; d <= p.degree(); ++d)
    if (p.coeff(d) != 0) return d;
  return std::nullopt;  // unreachable for constant-term-1 polynomials
}

IntervalSequence transfer(const IntervalSequence& seq, Symmetry which) {
  IntervalSequence out{seq.n, seq.intervals};
  auto reflect = [n = seq.n](Interval iv) { return Interval{n + 1 - iv.b, n + 1 - iv.a}; };
  switch (which) {
    case Symmetry::kHReflect:
      for (Interval& iv : out.intervals) iv = reflect(iv);
      break;
    case Symmetry::kVReflect:
      std::reverse(out.intervals.begin(), out.intervals.end());
      break;
    case Symmetry::kRotate:
      for (Interval& iv : out.intervals) iv = reflect(iv);
      std::reverse(out.intervals.begin(), out.intervals.end());
      break;
  }
  return out;
}

bool internal_coefficients_check(const Permutation& w, const IntervalSequence& seq) {
  if (!verify(w, seq)) throw VerifyFailed("internal_coefficients_check: sequence does not verify");
  const HeckeElement element = kl_basis_element(w);
  for (const auto& [v, p] : element.terms()) {
    if (v == w) continue;
    for (int d = 1; d <= p.degree(); ++d)
      if (p.coeff(d) <= 0) return false;
  }
  return true;
}

const std::vector<CatalogRow>& s5_catalog() {
  static const std::vector<CatalogRow> rows = [] {
    struct Raw {
      const char* w;
      std::vector<Interval> intervals;
      int prefactor;  // f = [prefactor]_q!
      std::vector<const char*> related;
    };
    const std::vector<Raw> raw = {
        {"42315", {{1, 2}, {2, 4}, {1, 2}}, 1, {"15342"}},
        {"52314", {{1, 2}, {2, 4}, {1, 2}, {4, 5}}, 1, {"25341", "42351", "51342"}},
        {"35142", {{2, 3}, {1, 2}, {3, 5}, {2, 3}}, 1, {"42513"}},
        {"35241", {{2, 3}, {3, 5}, {1, 3}}, 1, {"52413", "53142", "42531"}},
        {"35412", {{2, 4}, {3, 5}, {1, 2}, {2, 3}}, 2, {"45213", "45132", "43512"}},
        {"52431", {{1, 2}, {2, 5}, {1, 2}}, 1, {"53241"}},
        {"53421", {{3, 5}, {1, 4}, {4, 5}}, 2, {"54231"}},
        {"45231", {{2, 3}, {3, 5}, {1, 3}, {3, 4}}, 1, {"53412"}},
        {"52341", {{1, 2}, {4, 5}, {2, 4}, {1, 2}, {4, 5}}, 1, {}},
    };
    std::vector<CatalogRow> out;
    for (const Raw& row : raw) {
      CatalogRow cr{parse_permutation(row.w), IntervalSequence{5, row.intervals},
                    q_factorial(row.prefactor), {}};
      for (const char* rel : row.related) cr.related.push_back(parse_permutation(rel));
      out.push_back(std::move(cr));
    }
    return out;
  }();
  return rows;
}

std::vector<Interval> parse_interval_list(std::string_view text) {
  std::vector<Interval> out;
  std::string buf(text);
  std::istringstream is(buf);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    size_t first = tok.find_first_not_of(" \t");
    size_t last = tok.find_last_not_of(" \t");
    if (first == std::string::npos) throw std::invalid_argument("parse_interval_list: empty entry");
    out.push_back(parse_interval(std::string_view(tok).substr(first, last - first + 1)));
  }
  return out;
}

std::string interval_list_string(const std::vector<Interval>& intervals) {
  std::string out;
  for (const Interval& iv : intervals) {
    if (!out.empty()) out += ",";
    out += to_string(iv);
  }
  return out;
}

}  // namespace klnet
