#include <cctype>
#include <string>

#include "ordlex/error.hpp"
#include "ordlex/scatter.hpp"

namespace ordlex {

RankValue rank_calculus(const RankExpr& e) {
  using Op = RankExpr::Op;
  if (e.op == Op::Leaf) return {e.leaf, true};
  std::vector<RankValue> args;
  for (const auto& a : e.args) args.push_back(rank_calculus(a));
  switch (e.op) {
    case Op::Union:
    case Op::Shuffle: {
      if (args.size() < 2) throw PreconditionError("union and shuffle take at least two operands");
      RankValue out{Ordinal{}, true};
      for (const auto& a : args) {
        out.value = ord_max(out.value, a.value);
        out.tight = out.tight && a.tight;
      }
      return out;
    }
    case Op::Concat: {
      if (args.size() < 2) throw PreconditionError("concat takes at least two operands");
      Ordinal sum;
      for (std::size_t i = args.size(); i-- > 0;) sum = sum + args[i].value;
      return {sum, false};
    }
    case Op::Subst: {
      if (args.size() != 2) throw PreconditionError("subst takes exactly two operands");
      return {args[1].value + args[0].value, false};
    }
    case Op::Leaf:
      break;
  }
  throw Error("internal: unknown rank operator");
}

namespace {

class RankParser {
public:
  explicit RankParser(std::string_view text) : text_(text) {}

  RankExpr parse() {
    RankExpr e = expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input in rank expression", pos_);
    return e;
  }

private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  RankExpr expr() {
    skip_space();
    std::size_t end = pos_;
    while (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) ++end;
    const std::string_view word = text_.substr(pos_, end - pos_);
    static const std::pair<std::string_view, RankExpr::Op> kOps[] = {{"union", RankExpr::Op::Union},
                                                                     {"shuffle", RankExpr::Op::Shuffle},
                                                                     {"concat", RankExpr::Op::Concat},
                                                                     {"subst", RankExpr::Op::Subst}};
    for (const auto& [name, op] : kOps) {
      if (word != name) continue;
      pos_ = end;
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != '(') throw ParseError("expected '(' after operator", pos_);
      ++pos_;
      RankExpr e;
      e.op = op;
      for (;;) {
        e.args.push_back(expr());
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (pos_ < text_.size() && text_[pos_] == ')') {
          ++pos_;
          break;
        }
        throw ParseError("expected ',' or ')' in rank expression", pos_);
      }
      return e;
    }
    return leaf();
  }

  // An ordinal runs to the next ',' or ')' outside its own parentheses.
  RankExpr leaf() {
    const std::size_t begin = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '(') ++depth;
      if (c == ')') {
        if (depth == 0) break;
        --depth;
      }
      if (c == ',' && depth == 0) break;
      ++pos_;
    }
    if (pos_ == begin) throw ParseError("expected an ordinal operand", pos_);
    RankExpr e;
    try {
      e.leaf = parse_ordinal(text_.substr(begin, pos_ - begin));
    } catch (const ParseError& err) {
      throw ParseError(err.what(), begin + err.position());
    }
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RankExpr parse_rank_expr(std::string_view text) { return RankParser(text).parse(); }

}  // namespace ordlex
