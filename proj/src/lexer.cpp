#include "uvk/syntax.hpp"

#include <cstring>
#include <unordered_map>

namespace uvk {

namespace {

const std::unordered_map<std::string, Tok> kKeywords = {
    {"def", Tok::KwDef},       {"postulate", Tok::KwPostulate},
    {"in", Tok::KwIn},         {"U", Tok::KwU},
    {"Nat", Tok::KwNat},       {"zero", Tok::KwZero},
    {"star", Tok::KwStar},     {"Id", Tok::KwId},
    {"refl", Tok::KwRefl},     {"J", Tok::KwJ},
    {"natInd", Tok::KwNatInd}, {"sumInd", Tok::KwSumInd},
    {"unitInd", Tok::KwUnitInd}, {"absurd", Tok::KwAbsurd},
    {"suc", Tok::KwSuc},       {"inl", Tok::KwInl},
    {"inr", Tok::KwInr},       {"Pi", Tok::PiTok},
    {"Sigma", Tok::SigmaTok},
};

struct Utf8Sym {
  const char *bytes;
  size_t len;
  Tok kind;
};

const Utf8Sym kSymbols[] = {
    {"\xce\xbb", 2, Tok::Lambda},   // λ
    {"\xce\xa0", 2, Tok::PiTok},    // Π
    {"\xce\xa3", 2, Tok::SigmaTok}, // Σ
    {"\xe2\x86\x92", 3, Tok::Arrow},   // →
    {"\xc3\x97", 2, Tok::Times},       // ×
    {"\xe2\x8a\x94", 3, Tok::Join},    // ⊔
    {"\xe2\x81\xba", 3, Tok::LevelSuc}, // ⁺
    {"\xe2\x84\x95", 3, Tok::KwNat},   // ℕ
};

struct Lexer {
  const std::string &s;
  size_t i = 0;
  int line = 1, col = 1;
  std::vector<Token> out;

  explicit Lexer(const std::string &text) : s(text) {}

  [[noreturn]] void err(const std::string &msg) {
    throw CheckError{"lex", Span{line, col, line, col + 1}, msg, "", ""};
  }

  char peek(size_t k = 0) const { return i + k < s.size() ? s[i + k] : '\0'; }

  void bump(size_t bytes) { // advance one codepoint of the given byte width
    i += bytes;
    ++col;
  }

  void push(Tok kind, std::string text, int l0, int c0) {
    out.push_back(Token{kind, std::move(text), Span{l0, c0, line, col}});
  }

  void run() {
    while (i < s.size()) {
      char c = s[i];
      if (c == '\n') {
        ++i;
        ++line;
        col = 1;
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r') {
        bump(1);
        continue;
      }
      int l0 = line, c0 = col;
      if (c == '-') {
        if (peek(1) == '-') {
          while (i < s.size() && s[i] != '\n')
            ++i, ++col;
          continue;
        }
        if (peek(1) == '>') {
          bump(2);
          push(Tok::Arrow, "->", l0, c0);
          continue;
        }
        err("stray '-' (did you mean '->' or a '--' comment?)");
      }
      if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
        std::string word;
        while (i < s.size()) {
          char d = s[i];
          if ((d >= 'a' && d <= 'z') || (d >= 'A' && d <= 'Z') ||
              (d >= '0' && d <= '9') || d == '_' || d == '\'') {
            word.push_back(d);
            bump(1);
          } else
            break;
        }
        auto it = kKeywords.find(word);
        push(it == kKeywords.end() ? Tok::Ident : it->second, word, l0, c0);
        continue;
      }
      if (c >= '0' && c <= '9') {
        std::string digits;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
          digits.push_back(s[i]);
          bump(1);
        }
        push(Tok::Number, digits, l0, c0);
        continue;
      }
      switch (c) {
      case '(': bump(1); push(Tok::LParen, "(", l0, c0); continue;
      case ')': bump(1); push(Tok::RParen, ")", l0, c0); continue;
      case '[': bump(1); push(Tok::LBracket, "[", l0, c0); continue;
      case ']': bump(1); push(Tok::RBracket, "]", l0, c0); continue;
      case ',': bump(1); push(Tok::Comma, ",", l0, c0); continue;
      case '*': bump(1); push(Tok::Times, "*", l0, c0); continue;
      case '+': bump(1); push(Tok::Plus, "+", l0, c0); continue;
      case '=': bump(1); push(Tok::Eq, "=", l0, c0); continue;
      case ':':
        if (peek(1) == '=') {
          bump(2);
          push(Tok::ColonEq, ":=", l0, c0);
        } else {
          bump(1);
          push(Tok::Colon, ":", l0, c0);
        }
        continue;
      case '\\':
        if (peek(1) == '/') {
          bump(2);
          push(Tok::Join, "\\/", l0, c0);
        } else {
          bump(1);
          push(Tok::Lambda, "\\", l0, c0);
        }
        continue;
      case '^':
        if (peek(1) == '+') {
          bump(2);
          push(Tok::LevelSuc, "^+", l0, c0);
          continue;
        }
        err("stray '^' (level successor is '^+')");
      default:
        break;
      }
      bool matched = false;
      for (const auto &sym : kSymbols) {
        if (i + sym.len <= s.size() &&
            std::memcmp(s.data() + i, sym.bytes, sym.len) == 0) {
          bump(sym.len);
          push(sym.kind, sym.bytes, l0, c0);
          matched = true;
          break;
        }
      }
      if (matched)
        continue;
      err("unexpected character");
    }
    out.push_back(Token{Tok::End, "", Span{line, col, line, col}});
  }
};

} // namespace

std::vector<Token> tokenize(const std::string &text) {
  Lexer lx(text);
  lx.run();
  return std::move(lx.out);
}

} // namespace uvk
