#include "bihom/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace bihom {

std::vector<std::string> union_variables(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out(a);
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const Rational& c) {
  MultiPoly p(std::move(variables));
  p.add_term(Exponents(p.nvars(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, std::size_t index) {
  MultiPoly p(std::move(variables));
  if (index >= p.nvars()) throw std::out_of_range("variable index out of range");
  Exponents e(p.nvars(), 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, const std::string& name) {
  auto it = std::find(variables.begin(), variables.end(), name);
  if (it == variables.end()) throw std::invalid_argument("unknown variable '" + name + "'");
  const auto idx = static_cast<std::size_t>(it - variables.begin());
  return variable(std::move(variables), idx);
}

std::optional<std::size_t> MultiPoly::index_of(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

bool MultiPoly::is_nonzero_constant() const {
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

std::vector<std::size_t> MultiPoly::support() const {
  std::vector<bool> seen(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) seen[i] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i]) out.push_back(i);
  return out;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != vars_.size()) throw std::invalid_argument("exponent vector length mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::over(const std::vector<std::string>& variables) const {
  if (variables == vars_) return *this;
  std::vector<std::size_t> map(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(variables.begin(), variables.end(), vars_[i]);
    if (it == variables.end()) {
      bool used = std::any_of(terms_.begin(), terms_.end(), [i](const auto& t) { return t.first[i] != 0; });
      if (used) throw std::invalid_argument("variable '" + vars_[i] + "' missing from target list");
      map[i] = variables.size();
    } else {
      map[i] = static_cast<std::size_t>(it - variables.begin());
    }
  }
  MultiPoly out(variables);
  for (const auto& [e, c] : terms_) {
    Exponents ne(variables.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) ne[map[i]] = e[i];
    out.add_term(ne, c);
  }
  return out;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != vars_.size()) throw std::invalid_argument("evaluation point has wrong length");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::substitute(std::size_t index, const Rational& value) const {
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::uint32_t k = 0; k < e[index]; ++k) t *= value;
    Exponents ne(e);
    ne[index] = 0;
    out.add_term(ne, t);
  }
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.vars_ != vars_) {
    auto u = union_variables(vars_, o.vars_);
    *this = over(u);
    return *this += o.over(u);
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += Rational(-1) * o; }

MultiPoly& MultiPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ != b.vars_) {
    auto u = union_variables(a.vars_, b.vars_);
    return a.over(u) * b.over(u);
  }
  MultiPoly out(a.vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = c.sign() < 0;
    const Rational a = c.abs();
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      s += a.str();
    } else {
      if (!a.is_one()) s += a.str() + "*";
      s += mono;
    }
  }
  return s;
}

namespace {

// Recursive-descent parser for sums of products of numbers, names and powers,
// with parentheses.
class PolyParser {
public:
  PolyParser(std::string_view text, std::vector<std::string> vars, bool extend)
      : text_(text), vars_(std::move(vars)), extend_(extend) {}

  MultiPoly run() {
    MultiPoly p = sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p.over(vars_);
  }

private:
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("polynomial parse error at " + std::to_string(pos_) + ": " + why);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly sum() {
    MultiPoly acc(vars_);
    bool first = true;
    for (;;) {
      skip_ws();
      int sign = 1;
      if (eat('+')) {
      } else if (eat('-')) {
        sign = -1;
      } else if (!first) {
        break;
      }
      MultiPoly t = product();
      if (sign < 0) t = -t;
      acc += t;
      first = false;
      skip_ws();
      if (pos_ >= text_.size() || (text_[pos_] != '+' && text_[pos_] != '-')) break;
    }
    return acc;
  }

  MultiPoly product() {
    MultiPoly acc = power();
    while (eat('*')) acc = acc * power();
    return acc;
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (eat('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      const unsigned k = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
      MultiPoly r = MultiPoly::constant(base.variables(), 1);
      for (unsigned i = 0; i < k; ++i) r = r * base;
      return r;
    }
    return base;
  }

  MultiPoly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly p = sum();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) ++pos_;
      return MultiPoly::constant(vars_, Rational::parse(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) {
        if (!extend_) fail("unknown variable '" + name + "'");
        vars_.push_back(name);
      }
      return MultiPoly::variable(vars_, name);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::vector<std::string> vars_;
  bool extend_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text, std::vector<std::string> variables, bool extend) {
  return PolyParser(text, std::move(variables), extend).run();
}

}  // namespace bihom
