#include "fincat/names.hpp"

#include <cctype>

#include "fincat/errors.hpp"

namespace fincat {

struct CanonicalName::Node {
  Kind kind;
  std::string text; // atom token or tag
  std::shared_ptr<const Node> a, b;
};

namespace {

bool is_token_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
         c == '+' || c == '*' || c == '.' || c == '\'' || c == '/' || c == '!' ||
         c == '@' || c == '#' || c == '=' || c == '~';
}

bool is_plain_token(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!is_token_char(c)) return false;
  return true;
}

bool is_tag_token(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

void render(const CanonicalName& n, std::string& out) {
  switch (n.kind()) {
    case CanonicalName::Kind::Atom: {
      const std::string& s = n.atom_value();
      if (is_plain_token(s)) {
        out += s;
      } else {
        out += '"';
        for (char c : s) {
          if (c == '"' || c == '\\') out += '\\';
          out += c;
        }
        out += '"';
      }
      break;
    }
    case CanonicalName::Kind::Pair:
      out += '(';
      render(n.first(), out);
      out += ',';
      render(n.second(), out);
      out += ')';
      break;
    case CanonicalName::Kind::Tagged:
      out += n.tag();
      out += ':';
      render(n.inner(), out);
      break;
  }
}

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("bad name at offset " + std::to_string(pos) + ": " + why +
                     " in '" + s + "'");
  }

  char peek() const { return pos < s.size() ? s[pos] : '\0'; }

  std::string token() {
    std::size_t start = pos;
    while (pos < s.size() && is_token_char(s[pos])) ++pos;
    if (pos == start) fail("expected token");
    return s.substr(start, pos - start);
  }

  std::string quoted() {
    ++pos; // opening quote
    std::string out;
    while (pos < s.size() && s[pos] != '"') {
      if (s[pos] == '\\') {
        ++pos;
        if (pos >= s.size()) fail("dangling escape");
      }
      out += s[pos++];
    }
    if (pos >= s.size()) fail("unterminated quote");
    ++pos; // closing quote
    return out;
  }

  CanonicalName name() {
    char c = peek();
    if (c == '(') {
      ++pos;
      CanonicalName a = name();
      if (peek() != ',') fail("expected ','");
      ++pos;
      CanonicalName b = name();
      if (peek() != ')') fail("expected ')'");
      ++pos;
      return CanonicalName::pair(std::move(a), std::move(b));
    }
    if (c == '"') return CanonicalName::atom(quoted());
    std::string tok = token();
    if (peek() == ':' && is_tag_token(tok)) {
      ++pos;
      return CanonicalName::tagged(std::move(tok), name());
    }
    return CanonicalName::atom(std::move(tok));
  }
};

} // namespace

CanonicalName::CanonicalName() {
  static const auto empty =
      std::make_shared<const Node>(Node{Kind::Atom, "", nullptr, nullptr});
  node_ = empty;
}

CanonicalName CanonicalName::atom(std::string token) {
  if (token.empty()) return CanonicalName();
  return CanonicalName(std::make_shared<const Node>(
      Node{Kind::Atom, std::move(token), nullptr, nullptr}));
}

CanonicalName CanonicalName::pair(CanonicalName first, CanonicalName second) {
  return CanonicalName(std::make_shared<const Node>(
      Node{Kind::Pair, "", std::move(first.node_), std::move(second.node_)}));
}

CanonicalName CanonicalName::tagged(std::string tag, CanonicalName inner) {
  if (!is_tag_token(tag))
    throw InvalidArgument("name tag must be alphanumeric: '" + tag + "'");
  return CanonicalName(std::make_shared<const Node>(
      Node{Kind::Tagged, std::move(tag), std::move(inner.node_), nullptr}));
}

CanonicalName::Kind CanonicalName::kind() const { return node_->kind; }

bool CanonicalName::is_tagged(const char* tag) const {
  return node_->kind == Kind::Tagged && node_->text == tag;
}

const std::string& CanonicalName::atom_value() const {
  if (!is_atom()) throw InvalidArgument("atom_value on non-atom name");
  return node_->text;
}

const std::string& CanonicalName::tag() const {
  if (!is_tagged()) throw InvalidArgument("tag on non-tagged name");
  return node_->text;
}

CanonicalName CanonicalName::first() const {
  if (!is_pair()) throw InvalidArgument("first on non-pair name");
  return CanonicalName(node_->a);
}

CanonicalName CanonicalName::second() const {
  if (!is_pair()) throw InvalidArgument("second on non-pair name");
  return CanonicalName(node_->b);
}

CanonicalName CanonicalName::inner() const {
  if (!is_tagged()) throw InvalidArgument("inner on non-tagged name");
  return CanonicalName(node_->a);
}

std::strong_ordering CanonicalName::operator<=>(const CanonicalName& o) const {
  if (node_ == o.node_) return std::strong_ordering::equal;
  const Node& x = *node_;
  const Node& y = *o.node_;
  if (x.kind != y.kind)
    return static_cast<int>(x.kind) <=> static_cast<int>(y.kind);
  switch (x.kind) {
    case Kind::Atom:
      return x.text.compare(y.text) <=> 0;
    case Kind::Pair: {
      auto c = CanonicalName(x.a) <=> CanonicalName(y.a);
      if (c != 0) return c;
      return CanonicalName(x.b) <=> CanonicalName(y.b);
    }
    case Kind::Tagged: {
      auto c = x.text.compare(y.text) <=> 0;
      if (c != 0) return c;
      return CanonicalName(x.a) <=> CanonicalName(y.a);
    }
  }
  return std::strong_ordering::equal;
}

bool CanonicalName::operator==(const CanonicalName& o) const {
  return (*this <=> o) == 0;
}

std::string CanonicalName::str() const {
  std::string out;
  render(*this, out);
  return out;
}

CanonicalName CanonicalName::parse(const std::string& s) {
  Parser p{s};
  CanonicalName n = p.name();
  if (p.pos != s.size()) p.fail("trailing characters");
  return n;
}

CanonicalName name_tuple(const std::vector<CanonicalName>& parts) {
  CanonicalName acc = CanonicalName::atom("nil");
  for (auto it = parts.rbegin(); it != parts.rend(); ++it)
    acc = CanonicalName::pair(*it, acc);
  return CanonicalName::tagged("tup", acc);
}

std::vector<CanonicalName> tuple_parts(const CanonicalName& n) {
  if (!n.is_tagged("tup")) throw InvalidArgument("not a tuple name: " + n.str());
  std::vector<CanonicalName> out;
  CanonicalName cur = n.inner();
  while (cur.is_pair()) {
    out.push_back(cur.first());
    cur = cur.second();
  }
  if (!(cur.is_atom() && cur.atom_value() == "nil"))
    throw InvalidArgument("malformed tuple name: " + n.str());
  return out;
}

CanonicalName make_arrow_name(const char* tag, const CanonicalName& core,
                              const CanonicalName& src, const CanonicalName& tgt) {
  return CanonicalName::tagged(
      tag, CanonicalName::pair(core, CanonicalName::pair(src, tgt)));
}

ArrowNameParts arrow_name_parts(const CanonicalName& n) {
  if (!n.is_tagged() || !n.inner().is_pair() || !n.inner().second().is_pair())
    throw InvalidArgument("not an arrow name: " + n.str());
  const CanonicalName& body = n.inner();
  return ArrowNameParts{body.first(), body.second().first(),
                        body.second().second()};
}

} // namespace fincat
