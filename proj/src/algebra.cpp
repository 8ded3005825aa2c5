#include "treehopf/algebra.hpp"

#include <cctype>

namespace treehopf {

std::string to_string(const Rational &c) { return c.get_str(); }

bool looks_like_rational(std::string_view token) {
  std::size_t i = 0;
  if (i < token.size() && (token[i] == '-' || token[i] == '+'))
    ++i;
  std::size_t digits = 0;
  while (i < token.size() && std::isdigit(static_cast<unsigned char>(token[i])))
    ++i, ++digits;
  if (digits == 0)
    return false;
  if (i == token.size())
    return true;
  if (token[i] != '/')
    return false;
  ++i;
  digits = 0;
  while (i < token.size() && std::isdigit(static_cast<unsigned char>(token[i])))
    ++i, ++digits;
  return digits > 0 && i == token.size();
}

Rational parse_rational(std::string_view text) {
  if (!looks_like_rational(text))
    throw ParseError("malformed rational '" + std::string(text) + "'", 0);
  std::string s(text);
  if (s[0] == '+')
    s.erase(0, 1);
  auto slash = s.find('/');
  if (slash != std::string::npos && mpz_class(s.substr(slash + 1)) == 0)
    throw ParseError("zero denominator", slash);
  Rational r(s);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// Parsing shared by elements and tensors

namespace {

struct Token {
  std::string_view text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    // a sign glued to a tree, as in "-[[]]"
    if ((text[i] == '-' || text[i] == '+') && i + 1 < text.size() && text[i + 1] == '[') {
      out.push_back({text.substr(i, 1), i});
      ++i;
      continue;
    }
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    out.push_back({text.substr(start, i - start), start});
  }
  return out;
}

Forest parse_slot(const std::vector<Token> &tokens, std::size_t begin, std::size_t end,
                  std::size_t fallback_pos) {
  if (begin == end)
    throw ParseError("empty tensor factor", fallback_pos);
  Forest f;
  for (std::size_t i = begin; i < end; ++i) {
    const Token &tok = tokens[i];
    if (tok.text == "1")
      continue;
    if (tok.text.empty() || tok.text[0] != '[')
      throw ParseError("expected a tree or 1, got '" + std::string(tok.text) + "'", tok.pos);
    try {
      f = f * Forest(RootedTree::parse(tok.text));
    } catch (const ParseError &e) {
      throw ParseError(e.message(), tok.pos + e.position());
    }
  }
  return f;
}

using ParsedTerm = std::pair<Rational, std::vector<Forest>>;

std::vector<ParsedTerm> parse_terms(std::string_view text, int rank) {
  auto tokens = tokenize(text);
  if (tokens.empty())
    throw ParseError("empty expression", 0);
  std::vector<ParsedTerm> out;
  std::size_t i = 0;
  bool expect_term = true;
  Rational sign = 1;
  while (i < tokens.size()) {
    const Token &tok = tokens[i];
    if (tok.text == "+" || tok.text == "-") {
      if (!expect_term && !out.empty()) {
        expect_term = true;
        sign = tok.text == "-" ? -1 : 1;
      } else if (tok.text == "-") {
        sign = -sign;
      } else if (out.empty() && i == 0) {
        // leading unary plus
      } else {
        throw ParseError("unexpected '+'", tok.pos);
      }
      ++i;
      continue;
    }
    if (!expect_term)
      throw ParseError("expected '+' or '-' between terms", tok.pos);
    std::size_t end = i;
    while (end < tokens.size() && tokens[end].text != "+" && tokens[end].text != "-")
      ++end;
    Rational coef = 1;
    std::size_t first = i;
    bool lone_scalar = false;
    if (looks_like_rational(tok.text)) {
      bool next_is_factor = first + 1 < end && tokens[first + 1].text != "(x)";
      if (next_is_factor) {
        coef = parse_rational(tok.text);
        ++first;
      } else if (tok.text != "1") {
        if (rank != 1)
          throw ParseError("scalar term in a tensor expression", tok.pos);
        coef = parse_rational(tok.text);
        lone_scalar = true;
      }
    }
    std::vector<Forest> factors;
    if (lone_scalar) {
      factors.emplace_back();
    } else {
      std::size_t slot_begin = first;
      for (std::size_t k = first; k <= end; ++k) {
        if (k == end || tokens[k].text == "(x)") {
          std::size_t pos = k < tokens.size() ? tokens[k].pos : text.size();
          factors.push_back(parse_slot(tokens, slot_begin, k, pos));
          slot_begin = k + 1;
        }
      }
    }
    if (static_cast<int>(factors.size()) != rank)
      throw ParseError("term has " + std::to_string(factors.size()) + " factors, expected " +
                           std::to_string(rank),
                       tok.pos);
    out.emplace_back(sign * coef, std::move(factors));
    sign = 1;
    expect_term = false;
    i = end;
  }
  if (expect_term)
    throw ParseError("expression ends with an operator", text.size());
  return out;
}

std::string coefficient_prefix(const Rational &c) {
  if (c == 1)
    return "";
  return to_string(c) + " ";
}

} // namespace

// ---------------------------------------------------------------------------
// AlgebraElement

AlgebraElement::AlgebraElement(const Forest &f) { terms_.emplace(f, Rational(1)); }

AlgebraElement AlgebraElement::scalar(const Rational &c) {
  AlgebraElement x;
  x.add_term(Forest(), c);
  return x;
}

AlgebraElement AlgebraElement::parse(std::string_view text) {
  AlgebraElement x;
  for (auto &[c, factors] : parse_terms(text, 1))
    x.add_term(factors[0], c);
  return x;
}

Rational AlgebraElement::coefficient(const Forest &f) const {
  auto it = terms_.find(f);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(const Forest &f, const Rational &c) {
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(f, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

std::string AlgebraElement::str() const {
  if (terms_.empty())
    return "0";
  std::string out;
  for (const auto &[f, c] : terms_) {
    if (!out.empty())
      out += " + ";
    out += coefficient_prefix(c) + f.str();
  }
  return out;
}

AlgebraElement &AlgebraElement::operator+=(const AlgebraElement &o) {
  for (const auto &[f, c] : o.terms_)
    add_term(f, c);
  return *this;
}

AlgebraElement &AlgebraElement::operator-=(const AlgebraElement &o) {
  for (const auto &[f, c] : o.terms_)
    add_term(f, -c);
  return *this;
}

AlgebraElement &AlgebraElement::operator*=(const Rational &c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[f, v] : terms_)
    v *= c;
  return *this;
}

AlgebraElement operator*(const AlgebraElement &a, const AlgebraElement &b) {
  AlgebraElement out;
  for (const auto &[fa, ca] : a.terms_)
    for (const auto &[fb, cb] : b.terms_)
      out.add_term(fa * fb, ca * cb);
  return out;
}

AlgebraElement power(const AlgebraElement &x, int k) {
  AlgebraElement out = AlgebraElement::scalar(1);
  for (int i = 0; i < k; ++i)
    out = out * x;
  return out;
}

int max_weight(const AlgebraElement &x) {
  int w = -1;
  for (const auto &[f, c] : x.terms())
    w = std::max(w, f.weight());
  return w;
}

std::map<int, AlgebraElement> weight_split(const AlgebraElement &x) {
  std::map<int, AlgebraElement> out;
  for (const auto &[f, c] : x.terms())
    out[f.weight()].add_term(f, c);
  return out;
}

std::optional<int> is_homogeneous(const AlgebraElement &x) {
  std::optional<int> w;
  for (const auto &[f, c] : x.terms()) {
    if (w && *w != f.weight())
      return std::nullopt;
    w = f.weight();
  }
  return w;
}

AlgebraElement pi_c(const AlgebraElement &x) {
  AlgebraElement out;
  for (const auto &[f, c] : x.terms())
    if (f.is_tree())
      out.add_term(f, c);
  return out;
}

AlgebraElement apply_linear(const AlgebraElement &x,
                            const std::function<AlgebraElement(const Forest &)> &f) {
  AlgebraElement out;
  for (const auto &[forest, c] : x.terms()) {
    AlgebraElement image = f(forest);
    image *= c;
    out += image;
  }
  return out;
}

// ---------------------------------------------------------------------------
// TensorElement

TensorElement::TensorElement(int rank) : rank_(rank) {
  if (rank < 1)
    throw std::invalid_argument("tensor rank must be >= 1");
}

TensorElement TensorElement::tensor(const std::vector<AlgebraElement> &factors) {
  TensorElement out(static_cast<int>(factors.size()));
  out.add_term(Key(factors.size()), 1);
  for (std::size_t s = 0; s < factors.size(); ++s) {
    TensorElement next(out.rank());
    for (const auto &[key, c] : out.terms_)
      for (const auto &[f, cf] : factors[s].terms()) {
        Key k = key;
        k[s] = f;
        next.add_term(k, c * cf);
      }
    out = std::move(next);
  }
  return out;
}

TensorElement TensorElement::parse(std::string_view text, int rank) {
  TensorElement x(rank);
  for (auto &[c, factors] : parse_terms(text, rank))
    x.add_term(factors, c);
  return x;
}

Rational TensorElement::coefficient(const Key &k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TensorElement::add_term(const Key &k, const Rational &c) {
  if (static_cast<int>(k.size()) != rank_)
    throw std::invalid_argument("tensor key rank mismatch");
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

std::string TensorElement::str() const {
  if (terms_.empty())
    return "0";
  std::string out;
  for (const auto &[key, c] : terms_) {
    if (!out.empty())
      out += " + ";
    out += coefficient_prefix(c);
    for (std::size_t s = 0; s < key.size(); ++s) {
      if (s)
        out += " (x) ";
      out += key[s].str();
    }
  }
  return out;
}

TensorElement &TensorElement::operator+=(const TensorElement &o) {
  if (o.rank_ != rank_)
    throw std::invalid_argument("tensor rank mismatch in addition");
  for (const auto &[k, c] : o.terms_)
    add_term(k, c);
  return *this;
}

TensorElement &TensorElement::operator-=(const TensorElement &o) {
  if (o.rank_ != rank_)
    throw std::invalid_argument("tensor rank mismatch in subtraction");
  for (const auto &[k, c] : o.terms_)
    add_term(k, -c);
  return *this;
}

TensorElement &TensorElement::operator*=(const Rational &c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[k, v] : terms_)
    v *= c;
  return *this;
}

TensorElement operator*(const TensorElement &a, const TensorElement &b) {
  if (a.rank_ != b.rank_)
    throw std::invalid_argument("tensor rank mismatch in product");
  TensorElement out(a.rank_);
  for (const auto &[ka, ca] : a.terms_)
    for (const auto &[kb, cb] : b.terms_) {
      TensorElement::Key k(ka.size());
      for (std::size_t s = 0; s < k.size(); ++s)
        k[s] = ka[s] * kb[s];
      out.add_term(k, ca * cb);
    }
  return out;
}

TensorElement apply_to_slot(const TensorElement &x,
                            const std::function<AlgebraElement(const Forest &)> &f, int slot) {
  if (slot < 0 || slot >= x.rank())
    throw std::invalid_argument("slot out of range");
  TensorElement out(x.rank());
  for (const auto &[key, c] : x.terms()) {
    AlgebraElement image = f(key[slot]);
    for (const auto &[g, cg] : image.terms()) {
      auto k = key;
      k[slot] = g;
      out.add_term(k, c * cg);
    }
  }
  return out;
}

TensorElement expand_slot(const TensorElement &x,
                          const std::function<TensorElement(const Forest &)> &f, int slot) {
  if (slot < 0 || slot >= x.rank())
    throw std::invalid_argument("slot out of range");
  std::optional<TensorElement> out;
  for (const auto &[key, c] : x.terms()) {
    TensorElement image = f(key[slot]);
    if (!out)
      out.emplace(x.rank() + image.rank() - 1);
    for (const auto &[ik, ic] : image.terms()) {
      TensorElement::Key k(key.begin(), key.begin() + slot);
      k.insert(k.end(), ik.begin(), ik.end());
      k.insert(k.end(), key.begin() + slot + 1, key.end());
      out->add_term(k, c * ic);
    }
  }
  if (!out) {
    // Zero input: the rank of the image is unknown, evaluate on the unit to learn it.
    return TensorElement(x.rank() + f(Forest()).rank() - 1);
  }
  return *out;
}

AlgebraElement multiply_out(const TensorElement &x) {
  AlgebraElement out;
  for (const auto &[key, c] : x.terms()) {
    Forest f;
    for (const auto &g : key)
      f = f * g;
    out.add_term(f, c);
  }
  return out;
}

} // namespace treehopf
