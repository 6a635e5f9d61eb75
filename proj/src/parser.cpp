#include "srl/parser.hpp"

#include <charconv>
#include <cctype>
#include <optional>
#include <system_error>
#include <vector>

namespace srl {

namespace {

enum class Tok {
  Header,  // M
  Ident,   // A<n>
  Tr,
  Assign,  // :=
  Eq,      // =
  Ne,      // !=
  Bang,
  Amp,
  Bar,
  LParen,
  RParen,
  Number,
  End,
};

struct Token {
  Tok kind;
  SourceSpan span;
  std::string_view text;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Header: return "'M'";
    case Tok::Ident: return "sentence name";
    case Tok::Tr: return "'Tr'";
    case Tok::Assign: return "':='";
    case Tok::Eq: return "'='";
    case Tok::Ne: return "'!='";
    case Tok::Bang: return "'!'";
    case Tok::Amp: return "'&'";
    case Tok::Bar: return "'|'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Number: return "number";
    case Tok::End: return "end of line";
  }
  return "token";
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

std::vector<Token> lex_line(std::string_view line, std::size_t lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto span_at = [&](std::size_t col) { return SourceSpan{lineno, col + 1}; };
  while (i < line.size()) {
    const char c = line[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '#') break;
    const std::size_t start = i;
    auto single = [&](Tok kind) {
      out.push_back({kind, span_at(start), line.substr(start, 1)});
      ++i;
    };
    switch (c) {
      case '(': single(Tok::LParen); continue;
      case ')': single(Tok::RParen); continue;
      case '&': single(Tok::Amp); continue;
      case '|': single(Tok::Bar); continue;
      case '=': single(Tok::Eq); continue;
      case '!':
        if (i + 1 < line.size() && line[i + 1] == '=') {
          out.push_back({Tok::Ne, span_at(start), line.substr(start, 2)});
          i += 2;
        } else {
          single(Tok::Bang);
        }
        continue;
      case ':':
        if (i + 1 < line.size() && line[i + 1] == '=') {
          out.push_back({Tok::Assign, span_at(start), line.substr(start, 2)});
          i += 2;
          continue;
        }
        throw ParseError(ParseError::Kind::Lexical, span_at(start),
                         "expected ':=' after ':'");
      default:
        break;
    }
    if (is_digit(c)) {
      while (i < line.size() && is_digit(line[i])) ++i;
      if (i < line.size() && line[i] == '.') {
        ++i;
        if (i >= line.size() || !is_digit(line[i]))
          throw ParseError(ParseError::Kind::Lexical, span_at(start),
                           "malformed number: digits required after '.'");
        while (i < line.size() && is_digit(line[i])) ++i;
      }
      if (i < line.size() && (is_alpha(line[i]) || line[i] == '.'))
        throw ParseError(ParseError::Kind::Lexical, span_at(start),
                         "malformed number");
      out.push_back({Tok::Number, span_at(start), line.substr(start, i - start)});
      continue;
    }
    if (is_alpha(c)) {
      while (i < line.size() && (is_alpha(line[i]) || is_digit(line[i]))) ++i;
      const auto word = line.substr(start, i - start);
      if (word == "M") {
        out.push_back({Tok::Header, span_at(start), word});
      } else if (word == "Tr") {
        out.push_back({Tok::Tr, span_at(start), word});
      } else if (word.size() >= 2 && word[0] == 'A' && word[1] != '0' &&
                 [&] {
                   for (std::size_t k = 1; k < word.size(); ++k)
                     if (!is_digit(word[k])) return false;
                   return true;
                 }()) {
        out.push_back({Tok::Ident, span_at(start), word});
      } else {
        throw ParseError(ParseError::Kind::Lexical, span_at(start),
                         "unknown word '" + std::string(word) + "'");
      }
      continue;
    }
    throw ParseError(ParseError::Kind::Lexical, span_at(start),
                     std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::End, span_at(line.size()), {}});
  return out;
}

std::size_t to_index(const Token& t, std::string_view digits) {
  std::size_t value = 0;
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw ParseError(ParseError::Kind::Lexical, t.span,
                     "integer too large: " + std::string(digits));
  return value;
}

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, std::size_t m)
      : tokens_(std::move(tokens)), m_(m) {}

  const Token& peek() const { return tokens_[pos_]; }

  const Token& expect(Tok kind) {
    const Token& t = peek();
    if (t.kind != kind)
      throw ParseError(ParseError::Kind::Syntax, t.span,
                       std::string("expected ") + describe(kind) + ", found " +
                           describe(t.kind));
    ++pos_;
    return t;
  }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  std::size_t ident() {
    const Token& t = expect(Tok::Ident);
    const std::size_t index = to_index(t, t.text.substr(1));
    if (index > m_)
      throw ParseError(ParseError::Kind::Semantic, t.span,
                       "sentence A" + std::to_string(index) +
                           " out of range 1.." + std::to_string(m_));
    return index;
  }

  Level2Formula l2expr() {
    auto lhs = l2term();
    while (accept(Tok::Bar)) lhs = Level2Formula::disj(std::move(lhs), l2term());
    return lhs;
  }

  void finish() { expect(Tok::End); }

 private:
  Level2Formula l2term() {
    auto lhs = l2factor();
    while (accept(Tok::Amp))
      lhs = Level2Formula::conj(std::move(lhs), l2factor());
    return lhs;
  }

  Level2Formula l2factor() {
    if (accept(Tok::Bang)) return Level2Formula::negation(l2factor());
    if (accept(Tok::LParen)) {
      auto inner = l2expr();
      expect(Tok::RParen);
      return inner;
    }
    if (peek().kind == Tok::Tr) return leaf();
    const Token& t = peek();
    throw ParseError(ParseError::Kind::Syntax, t.span,
                     std::string("expected assessment 'Tr(...)', '!' or '(', "
                                 "found ") +
                         describe(t.kind));
  }

  Level2Formula leaf() {
    expect(Tok::Tr);
    expect(Tok::LParen);
    auto target = l1expr();
    expect(Tok::RParen);
    Relation rel;
    if (accept(Tok::Eq)) {
      rel = Relation::Equal;
    } else if (accept(Tok::Ne)) {
      rel = Relation::NotEqual;
    } else {
      throw ParseError(ParseError::Kind::Syntax, peek().span,
                       std::string("expected '=' or '!=', found ") +
                           describe(peek().kind));
    }
    const Token& num = expect(Tok::Number);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(num.text.data(),
                                     num.text.data() + num.text.size(), value);
    if (ec != std::errc() || ptr != num.text.data() + num.text.size())
      throw ParseError(ParseError::Kind::Lexical, num.span,
                       "malformed number '" + std::string(num.text) + "'");
    if (!(value >= 0.0 && value <= 1.0))
      throw ParseError(ParseError::Kind::Semantic, num.span,
                       "assessment value " + std::string(num.text) +
                           " outside [0,1]");
    return Level2Formula::leaf({std::move(target), rel, value});
  }

  Level1Formula l1expr() {
    auto lhs = l1term();
    while (accept(Tok::Bar)) lhs = Level1Formula::disj(std::move(lhs), l1term());
    return lhs;
  }

  Level1Formula l1term() {
    auto lhs = l1factor();
    while (accept(Tok::Amp))
      lhs = Level1Formula::conj(std::move(lhs), l1factor());
    return lhs;
  }

  Level1Formula l1factor() {
    if (accept(Tok::Bang)) return Level1Formula::negation(l1factor());
    if (accept(Tok::LParen)) {
      auto inner = l1expr();
      expect(Tok::RParen);
      return inner;
    }
    if (peek().kind == Tok::Ident) return Level1Formula::var(ident());
    const Token& t = peek();
    throw ParseError(ParseError::Kind::Syntax, t.span,
                     std::string("expected sentence name, '!' or '(', found ") +
                         describe(t.kind));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t m_;
};

}  // namespace

Collection parse_collection(std::string_view text) {
  std::optional<std::size_t> m;
  std::vector<std::optional<Level2Formula>> defs;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  SourceSpan last{1, 1};
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const auto line = text.substr(pos, eol - pos);
    ++lineno;
    pos = eol + 1;
    last = {lineno, line.size() + 1};

    auto tokens = lex_line(line, lineno);
    if (tokens.front().kind == Tok::End) continue;

    if (!m) {
      LineParser p(std::move(tokens), 0);
      p.expect(Tok::Header);
      p.expect(Tok::Eq);
      const Token& n = p.expect(Tok::Number);
      if (n.text.find('.') != std::string_view::npos)
        throw ParseError(ParseError::Kind::Syntax, n.span,
                         "M must be an integer");
      const std::size_t size = to_index(n, n.text);
      if (size < 1)
        throw ParseError(ParseError::Kind::Semantic, n.span,
                         "M must be at least 1");
      p.finish();
      m = size;
      defs.resize(size);
      continue;
    }

    LineParser p(std::move(tokens), *m);
    const SourceSpan name_span = p.peek().span;
    const std::size_t index = p.ident();
    p.expect(Tok::Assign);
    auto d = p.l2expr();
    p.finish();
    if (defs[index - 1])
      throw ParseError(ParseError::Kind::Semantic, name_span,
                       "duplicate definition of A" + std::to_string(index));
    defs[index - 1] = std::move(d);
  }

  if (!m)
    throw ParseError(ParseError::Kind::Syntax, last,
                     "missing header 'M = <integer>'");
  Collection c;
  c.size = *m;
  for (std::size_t i = 0; i < defs.size(); ++i) {
    if (!defs[i])
      throw ParseError(ParseError::Kind::Semantic, last,
                       "missing definition of A" + std::to_string(i + 1));
    c.definitions.push_back(std::move(*defs[i]));
  }
  return c;
}

std::string format_value(double v) {
  char buf[400];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed);
  if (ec != std::errc()) throw InvalidArgument("cannot format value");
  return std::string(buf, ptr);
}

namespace {

// Binding strength: | < & < ! / atoms.
int precedence(Level1Formula::Kind k) {
  switch (k) {
    case Level1Formula::Kind::Or: return 1;
    case Level1Formula::Kind::And: return 2;
    default: return 3;
  }
}

int precedence(Level2Formula::Kind k) {
  switch (k) {
    case Level2Formula::Kind::Or: return 1;
    case Level2Formula::Kind::And: return 2;
    default: return 3;
  }
}

template <class F>
void emit(const F& f, std::string& out);

template <class F>
void emit_child(const F& child, int min_prec, std::string& out) {
  if (precedence(child.kind()) < min_prec) {
    out += '(';
    emit(child, out);
    out += ')';
  } else {
    emit(child, out);
  }
}

void emit_leaf(const Level1Formula& f, std::string& out) {
  out += 'A';
  out += std::to_string(f.index().value);
}

void emit_leaf(const Level2Formula& f, std::string& out) {
  const auto& a = f.assessment();
  out += "Tr(";
  emit(a.target, out);
  out += a.relation == Relation::Equal ? ") = " : ") != ";
  out += format_value(a.value);
}

template <class F>
void emit(const F& f, std::string& out) {
  using K = typename F::Kind;
  switch (f.kind()) {
    case K::And:
    case K::Or: {
      const int p = precedence(f.kind());
      // Left-associative: a right operand of equal precedence needs parens.
      emit_child(f.lhs(), p, out);
      out += f.kind() == K::And ? " & " : " | ";
      emit_child(f.rhs(), p + 1, out);
      return;
    }
    case K::Not:
      out += '!';
      emit_child(f.operand(), 3, out);
      return;
    default:
      emit_leaf(f, out);
      return;
  }
}

}  // namespace

std::string format_formula(const Level1Formula& b) {
  std::string out;
  emit(b, out);
  return out;
}

std::string format_formula(const Level2Formula& d) {
  std::string out;
  emit(d, out);
  return out;
}

std::string format_collection(const Collection& c) {
  require_valid(c);
  std::string out = "M=" + std::to_string(c.size) + "\n";
  for (std::size_t m = 0; m < c.definitions.size(); ++m) {
    out += 'A';
    out += std::to_string(m + 1);
    out += " := ";
    out += format_formula(c.definitions[m]);
    out += '\n';
  }
  return out;
}

}  // namespace srl
