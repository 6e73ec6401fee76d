#include "goedel/valueset.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "goedel/errors.hpp"

namespace goedel {

namespace {

Value piece_min(const Piece& p) {
  if (auto* pt = std::get_if<PointPiece>(&p)) return pt->v;
  if (auto* iv = std::get_if<IntervalPiece>(&p)) return iv->lo;
  if (auto* cp = std::get_if<CantorPiece>(&p)) return cp->lo;
  return Value(0);  // both sequence families reach down to 0
}

int piece_rank(const Piece& p) { return static_cast<int>(p.index()); }

bool piece_equal(const Piece& a, const Piece& b) {
  if (a.index() != b.index()) return false;
  if (auto* pa = std::get_if<PointPiece>(&a))
    return pa->v == std::get<PointPiece>(b).v;
  if (auto* ia = std::get_if<IntervalPiece>(&a)) {
    const auto& ib = std::get<IntervalPiece>(b);
    return ia->lo == ib.lo && ia->hi == ib.hi;
  }
  if (auto* ca = std::get_if<CantorPiece>(&a)) {
    const auto& cb = std::get<CantorPiece>(b);
    return ca->lo == cb.lo && ca->hi == cb.hi;
  }
  return std::get<SeqPiece>(a).ascending == std::get<SeqPiece>(b).ascending;
}

bool piece_contains(const Piece& p, const Value& v) {
  if (auto* pt = std::get_if<PointPiece>(&p)) return pt->v == v;
  if (auto* iv = std::get_if<IntervalPiece>(&p)) return v >= iv->lo && v <= iv->hi;
  if (auto* cp = std::get_if<CantorPiece>(&p)) {
    if (v < cp->lo || v > cp->hi) return false;
    return in_standard_cantor((v - cp->lo) / (cp->hi - cp->lo));
  }
  const auto& sq = std::get<SeqPiece>(p);
  if (sq.ascending) {
    if (v == 1) return true;
    Value d = 1 - v;
    return d > 0 && numerator(d) == 1;  // v = 1 - 1/k
  }
  if (v == 0) return true;
  return v > 0 && numerator(v) == 1;  // v = 1/k
}

std::vector<Piece> canonicalize(std::vector<Piece> in) {
  // Degenerate intervals become points; sanity-check bounds.
  std::vector<Piece> pieces;
  for (auto& p : in) {
    if (auto* iv = std::get_if<IntervalPiece>(&p)) {
      if (iv->lo > iv->hi) throw ValueSetError("interval with lo > hi");
      if (iv->lo < 0 || iv->hi > 1) throw ValueSetError("piece outside [0,1]");
      if (iv->lo == iv->hi) {
        pieces.push_back(PointPiece{iv->lo});
        continue;
      }
    }
    if (auto* cp = std::get_if<CantorPiece>(&p)) {
      if (cp->lo >= cp->hi) throw ValueSetError("Cantor piece with lo >= hi");
      if (cp->lo < 0 || cp->hi > 1) throw ValueSetError("piece outside [0,1]");
    }
    if (auto* pt = std::get_if<PointPiece>(&p)) {
      if (pt->v < 0 || pt->v > 1) throw ValueSetError("piece outside [0,1]");
    }
    pieces.push_back(p);
  }

  // Merge overlapping or touching intervals.
  std::vector<IntervalPiece> intervals;
  for (const auto& p : pieces)
    if (auto* iv = std::get_if<IntervalPiece>(&p)) intervals.push_back(*iv);
  std::sort(intervals.begin(), intervals.end(),
            [](const IntervalPiece& a, const IntervalPiece& b) { return a.lo < b.lo; });
  std::vector<IntervalPiece> merged;
  for (const auto& iv : intervals) {
    if (!merged.empty() && iv.lo <= merged.back().hi)
      merged.back().hi = std::max(merged.back().hi, iv.hi);
    else
      merged.push_back(iv);
  }

  auto covered_by_interval = [&](const Value& lo, const Value& hi) {
    for (const auto& m : merged)
      if (m.lo <= lo && hi <= m.hi) return true;
    return false;
  };

  std::vector<Piece> out;
  for (const auto& m : merged) out.push_back(m);
  for (const auto& p : pieces) {
    if (std::holds_alternative<IntervalPiece>(p)) continue;
    if (auto* cp = std::get_if<CantorPiece>(&p)) {
      if (covered_by_interval(cp->lo, cp->hi)) continue;
    }
    if (auto* sq = std::get_if<SeqPiece>(&p)) {
      (void)sq;
      if (covered_by_interval(Value(0), Value(1))) continue;
    }
    bool dup = false;
    for (const auto& have : out)
      if (piece_equal(have, p)) dup = true;
    if (dup) continue;
    out.push_back(p);
  }

  // Points covered by any other piece are redundant.
  std::vector<Piece> final_pieces;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (auto* pt = std::get_if<PointPiece>(&out[i])) {
      bool covered = false;
      for (std::size_t j = 0; j < out.size(); ++j)
        if (i != j && !std::holds_alternative<PointPiece>(out[j]) &&
            piece_contains(out[j], pt->v))
          covered = true;
      if (covered) continue;
      bool dup = false;
      for (const auto& have : final_pieces)
        if (piece_equal(have, out[i])) dup = true;
      if (dup) continue;
    }
    final_pieces.push_back(out[i]);
  }

  std::sort(final_pieces.begin(), final_pieces.end(),
            [](const Piece& a, const Piece& b) {
              Value ma = piece_min(a), mb = piece_min(b);
              if (ma != mb) return ma < mb;
              return piece_rank(a) < piece_rank(b);
            });
  return final_pieces;
}

std::string piece_to_string(const Piece& p) {
  if (auto* pt = std::get_if<PointPiece>(&p))
    return "point(" + value_to_string(pt->v) + ")";
  if (auto* iv = std::get_if<IntervalPiece>(&p))
    return "[" + value_to_string(iv->lo) + "," + value_to_string(iv->hi) + "]";
  if (auto* cp = std::get_if<CantorPiece>(&p)) {
    if (cp->lo == 0 && cp->hi == 1) return "cantor";
    return "cantor(" + value_to_string(cp->lo) + "," + value_to_string(cp->hi) + ")";
  }
  return std::get<SeqPiece>(p).ascending ? "Vup" : "Vdown";
}

}  // namespace

bool in_standard_cantor(const Value& v) {
  if (v < 0 || v > 1) return false;
  Value x = v;
  std::set<Value> seen;
  for (;;) {
    if (x == 0 || x == 1) return true;
    if (seen.count(x)) return true;  // periodic, all digits so far in {0,2}
    seen.insert(x);
    Value t = 3 * x;
    auto digit = (numerator(t) / denominator(t)).convert_to<int>();
    x = t - digit;
    if (digit == 1) return x == 0;  // 0.w1 == 0.w0222...
  }
}

Value cantor_word_value(const std::vector<int>& prefix) {
  Value v(0);
  Value scale(1);
  for (int d : prefix) {
    scale /= 3;
    v += scale * d;
  }
  return v + scale / 4;  // 0.020202... in ternary is 1/4
}

SymbolicValueSet::SymbolicValueSet(std::vector<Piece> pieces, bool validate)
    : pieces_(canonicalize(std::move(pieces))) {
  if (validate) {
    if (pieces_.empty()) throw ValueSetError("empty truth-value set");
    if (!contains(Value(0)) || !contains(Value(1)))
      throw ValueSetError("truth-value set must contain 0 and 1");
  }
}

SymbolicValueSet SymbolicValueSet::from_pieces(std::vector<Piece> pieces) {
  return SymbolicValueSet(std::move(pieces), true);
}

SymbolicValueSet SymbolicValueSet::vm(int m) {
  std::vector<Piece> pieces;
  for (const auto& v : vm_values(m)) pieces.push_back(PointPiece{v});
  return from_pieces(std::move(pieces));
}

SymbolicValueSet SymbolicValueSet::unit_interval() {
  return from_pieces({IntervalPiece{Value(0), Value(1)}});
}

SymbolicValueSet SymbolicValueSet::cantor() {
  return from_pieces({CantorPiece{Value(0), Value(1)}});
}

SymbolicValueSet SymbolicValueSet::vup() { return from_pieces({SeqPiece{true}}); }

SymbolicValueSet SymbolicValueSet::vdown() { return from_pieces({SeqPiece{false}}); }

bool SymbolicValueSet::contains(const Value& v) const {
  for (const auto& p : pieces_)
    if (piece_contains(p, v)) return true;
  return false;
}

std::string SymbolicValueSet::to_string() const {
  if (pieces_.size() == 1) return piece_to_string(pieces_[0]);
  std::string out = "union(";
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (i) out += ", ";
    out += piece_to_string(pieces_[i]);
  }
  return out + ")";
}

std::vector<Value> SymbolicValueSet::finite_values() const {
  std::vector<Value> out;
  for (const auto& p : pieces_) {
    auto* pt = std::get_if<PointPiece>(&p);
    if (!pt) throw ValueSetError("finite_values on an infinite set");
    out.push_back(pt->v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Literal mini-parser.
struct LiteralParser {
  const std::string& s;
  std::size_t i = 0;

  explicit LiteralParser(const std::string& text) : s(text) {}

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c))
      throw ValueSetError("expected '" + std::string(1, c) + "' in value-set literal");
  }

  std::string word() {
    skip();
    std::size_t start = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i]))))
      ++i;
    return s.substr(start, i - start);
  }

  Value rational() {
    skip();
    std::size_t start = i;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) ||
                            s[i] == '/' || s[i] == '.' || s[i] == '-'))
      ++i;
    if (start == i) throw ValueSetError("expected a rational in value-set literal");
    return parse_value(s.substr(start, i - start));
  }

  void element(std::vector<Piece>& out) {
    skip();
    if (i < s.size() && s[i] == '[') {
      ++i;
      Value lo = rational();
      expect(',');
      Value hi = rational();
      expect(']');
      out.push_back(IntervalPiece{lo, hi});
      return;
    }
    std::string w = word();
    std::string lower;
    for (char c : w) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower == "vup") {
      out.push_back(SeqPiece{true});
    } else if (lower == "vdown") {
      out.push_back(SeqPiece{false});
    } else if (lower == "vm") {
      expect('(');
      Value m = rational();
      expect(')');
      if (denominator(m) != 1 || m < 2) throw ValueSetError("Vm needs an integer >= 2");
      for (const auto& v : vm_values(numerator(m).convert_to<int>()))
        out.push_back(PointPiece{v});
    } else if (lower == "cantor") {
      skip();
      if (i < s.size() && s[i] == '(') {
        ++i;
        Value lo = rational();
        expect(',');
        Value hi = rational();
        expect(')');
        out.push_back(CantorPiece{lo, hi});
      } else {
        out.push_back(CantorPiece{Value(0), Value(1)});
      }
    } else if (lower == "point") {
      expect('(');
      Value v = rational();
      expect(')');
      out.push_back(PointPiece{v});
    } else if (lower == "union") {
      expect('(');
      element(out);
      while (eat(',')) element(out);
      expect(')');
    } else {
      throw ValueSetError("unknown value-set literal '" + w + "'");
    }
  }
};

}  // namespace

SymbolicValueSet SymbolicValueSet::parse(const std::string& literal) {
  LiteralParser p(literal);
  std::vector<Piece> pieces;
  p.element(pieces);
  p.skip();
  if (p.i != literal.size())
    throw ValueSetError("trailing characters in value-set literal");
  return from_pieces(std::move(pieces));
}

Classification classify(const SymbolicValueSet& v) {
  // Cantor-Bendixson on the piece algebra: points are isolated once the
  // canonical form has dropped covered ones; a sequence piece derives to
  // its limit point; intervals and Cantor pieces are perfect. Iterate to
  // the fixpoint.
  std::vector<Piece> cur = v.pieces();
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Piece> next;
    for (const auto& p : cur) {
      if (std::holds_alternative<PointPiece>(p)) {
        changed = true;
      } else if (auto* sq = std::get_if<SeqPiece>(&p)) {
        next.push_back(PointPiece{Value(sq->ascending ? 1 : 0)});
        changed = true;
      } else {
        next.push_back(p);
      }
    }
    if (changed) cur = canonicalize(std::move(next));
  }

  Classification out;
  if (!cur.empty()) {
    out.kind = SetCardinality::Uncountable;
    out.kernel = cur;
    for (const auto& p : v.pieces()) {
      bool in_kernel = false;
      for (const auto& k : out.kernel)
        if (piece_equal(p, k)) in_kernel = true;
      if (!in_kernel) out.countable_part.push_back(p);
    }
    return out;
  }
  for (const auto& p : v.pieces()) {
    if (std::holds_alternative<SeqPiece>(p)) {
      out.kind = SetCardinality::CountablyInfinite;
      return out;
    }
  }
  out.kind = SetCardinality::Finite;
  out.finite_size = v.pieces().size();
  return out;
}

namespace {

// All witness points a single kernel piece contributes at the given depth.
void piece_witness(const Piece& p, int depth, std::vector<Value>& out) {
  if (depth > 24) throw ValueSetError("witness depth too large for enumeration");
  if (auto* iv = std::get_if<IntervalPiece>(&p)) {
    Value span = iv->hi - iv->lo;
    long long denom = 1;
    for (int j = 1; j <= depth; ++j) {
      denom *= 2;
      for (long long k = 1; k < denom; k += 2)
        out.push_back(iv->lo + span * Value(k, denom));
    }
    return;
  }
  if (auto* cp = std::get_if<CantorPiece>(&p)) {
    // Words over {0,2} with an even trailing run of length >= 2; these are
    // exactly the border-point approximants a^k (trailing zeros) and b^k
    // (trailing twos), followed by the repeating tail 02.
    Value span = cp->hi - cp->lo;
    int max_len = (5 * depth + 1) / 2;
    std::vector<int> word;
    auto emit = [&]() {
      int run = 1;
      int n = static_cast<int>(word.size());
      while (run < n && word[n - 1 - run] == word[n - 1]) ++run;
      if (run >= 2 && run % 2 == 0)
        out.push_back(cp->lo + span * cantor_word_value(word));
    };
    // Iterate words of length 1..max_len in binary-counter order.
    for (int len = 2; len <= max_len; ++len) {
      word.assign(len, 0);
      for (;;) {
        emit();
        int j = len - 1;
        while (j >= 0 && word[j] == 2) word[j--] = 0;
        if (j < 0) break;
        word[j] = 2;
      }
    }
    return;
  }
}

}  // namespace

std::vector<Value> dense_suborder_witness(const SymbolicValueSet& v, int depth) {
  Classification c = classify(v);
  if (c.kind != SetCardinality::Uncountable)
    throw ValueSetError("dense suborder witness requires an uncountable set");
  std::vector<Value> out;
  for (const auto& p : c.kernel) piece_witness(p, depth, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Smallest-depth dyadic of [0,1] strictly inside (lo, hi); smallest
// numerator on ties.
std::optional<Value> dyadic_between(const Value& lo, const Value& hi, int max_depth) {
  Value denom(1);
  for (int j = 1; j <= max_depth; ++j) {
    denom *= 2;
    // smallest odd k with lo < k/denom < hi
    Value scaled = lo * denom;
    auto k = numerator(scaled) / denominator(scaled) + 1;  // floor + 1
    if (Value(k) <= scaled) ++k;                           // lo itself a grid point
    if (k % 2 == 0) ++k;
    if (Value(k) / denom < hi && k >= 1 && Value(k) < denom) return Value(k) / denom;
  }
  return std::nullopt;
}

// A border-point approximant of the standard Cantor set strictly inside
// (lo, hi): depth-first over ternary cylinders, preferring the shallowest
// fully-inside child, then zero-padded to an even trailing run.
std::optional<Value> cantor_between(const Value& lo, const Value& hi, int max_len) {
  struct Rec {
    const Value &lo, &hi;
    int max_len;
    std::optional<std::vector<int>> run(std::vector<int>& prefix, const Value& base,
                                        const Value& width) const {
      if (base > lo && base + width < hi) return prefix;  // cylinder inside
      if (static_cast<int>(prefix.size()) >= max_len) return std::nullopt;
      Value child = width / 3;
      for (int d : {0, 2}) {
        Value cbase = base + child * d;
        if (cbase > lo && cbase + child < hi) {
          prefix.push_back(d);
          return prefix;
        }
      }
      for (int d : {0, 2}) {
        Value cbase = base + child * d;
        if (cbase < hi && cbase + child > lo) {
          prefix.push_back(d);
          auto r = run(prefix, cbase, child);
          if (r) return r;
          prefix.pop_back();
        }
      }
      return std::nullopt;
    }
  };
  std::vector<int> prefix;
  Rec rec{lo, hi, max_len};
  auto word = rec.run(prefix, Value(0), Value(1));
  if (!word) return std::nullopt;
  // Pad with zeros so the trailing run is even and >= 2; padding only
  // refines inside the chosen cylinder.
  int run = 0;
  for (auto it = word->rbegin(); it != word->rend() && *it == 0; ++it) ++run;
  int pad = (run % 2 == 0) ? 2 : 3;
  for (int i = 0; i < pad; ++i) word->push_back(0);
  return cantor_word_value(*word);
}

}  // namespace

std::optional<Value> witness_between(const SymbolicValueSet& v, const Value& lo,
                                     const Value& hi, int max_depth) {
  Classification c = classify(v);
  if (c.kind != SetCardinality::Uncountable)
    throw ValueSetError("witness_between requires an uncountable set");
  std::optional<Value> best;
  for (const auto& p : c.kernel) {
    std::optional<Value> cand;
    if (auto* iv = std::get_if<IntervalPiece>(&p)) {
      Value span = iv->hi - iv->lo;
      Value lo1 = std::max(Value(0), (lo - iv->lo) / span);
      Value hi1 = std::min(Value(1), (hi - iv->lo) / span);
      if (lo1 < hi1) {
        auto x = dyadic_between(lo1, hi1, max_depth);
        if (x) cand = iv->lo + span * *x;
      }
    } else if (auto* cp = std::get_if<CantorPiece>(&p)) {
      Value span = cp->hi - cp->lo;
      Value lo1 = std::max(Value(0), (lo - cp->lo) / span);
      Value hi1 = std::min(Value(1), (hi - cp->lo) / span);
      if (lo1 < hi1) {
        auto x = cantor_between(lo1, hi1, 4 * max_depth);
        if (x) cand = cp->lo + span * *x;
      }
    }
    if (cand && *cand > lo && *cand < hi && (!best || *cand < *best)) best = cand;
  }
  return best;
}

std::optional<std::vector<Value>> ascending_interior_values(
    const SymbolicValueSet& v, std::size_t count, const Value& cap) {
  if (count == 0) return std::vector<Value>{};
  if (cap <= 0 || cap >= 1) throw ValueSetError("cap must lie strictly in (0,1)");
  for (const auto& p : v.pieces()) {
    if (auto* sq = std::get_if<SeqPiece>(&p)) {
      std::vector<Value> vals;
      if (!sq->ascending) {
        // 1/k below cap: largest eligible k first, then extend downward.
        long long k = 2;
        while (Value(1, k) >= cap) ++k;
        for (std::size_t i = 0; i < count; ++i)
          vals.push_back(Value(1, k + static_cast<long long>(count - 1 - i)));
      } else {
        for (long long k = 2; vals.size() < count; ++k) {
          Value x = Value(k - 1, k);
          if (x >= cap) return std::nullopt;  // only finitely many below cap
          vals.push_back(x);
        }
      }
      return vals;
    }
  }
  return std::nullopt;
}

AxiomVerdict axiomatizability_verdict(const Classification& c) {
  AxiomVerdict out;
  switch (c.kind) {
    case SetCardinality::Finite: {
      out.axiomatizable = true;
      int m = static_cast<int>(c.finite_size);
      out.basis = "LC + quantifier rules (4)-(7) + characteristic " +
                  std::to_string(m) + "-valued axiom";
      // G_m: some pair among A_1..A_{m+1} takes the same value.
      FormulaPtr schema;
      for (int i = 1; i <= m; ++i) {
        for (int j = i + 1; j <= m + 1; ++j) {
          auto ai = Formula::atom("A" + std::to_string(i));
          auto aj = Formula::atom("A" + std::to_string(j));
          auto eq = Formula::conj(Formula::implies(ai, aj), Formula::implies(aj, ai));
          schema = schema ? Formula::disj(schema, eq) : eq;
        }
      }
      out.characteristic_axiom = schema;
      return out;
    }
    case SetCardinality::Uncountable:
      out.axiomatizable = true;
      out.basis = "LC + quantifier rules (4)-(7)";
      return out;
    case SetCardinality::CountablyInfinite:
      out.axiomatizable = false;
      out.reason =
          "countably infinite truth-value set: the prenex fragment is not "
          "recursively axiomatizable";
      return out;
  }
  return out;
}

}  // namespace goedel
