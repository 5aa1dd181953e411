#include "relkit/text_format.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "relkit/errors.hpp"

namespace relkit {
namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f') {
      ++i;
      ++col;
    } else {
      Token t{std::string(), line, col};
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '#') {
        t.text.push_back(text[i]);
        ++i;
        ++col;
      }
      tokens.push_back(std::move(t));
    }
  }
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Document run() {
    while (pos_ < tokens_.size()) {
      const Token& t = tokens_[pos_];
      if (t.text == "carrier") {
        parse_carrier();
      } else if (t.text == "rel") {
        parse_rel();
      } else {
        fail(t, "expected 'carrier' or 'rel', found '" + t.text + "'");
      }
    }
    return std::move(doc_);
  }

 private:
  [[noreturn]] static void fail(const Token& t, const std::string& msg) {
    throw ParseError(t.line, t.column, msg);
  }

  const Token& next(const Token& after, const char* what) {
    if (pos_ >= tokens_.size())
      throw ParseError(after.line, after.column + after.text.size(),
                       std::string("unexpected end of input, expected ") + what);
    return tokens_[pos_++];
  }

  void expect(const Token& after, const char* literal) {
    const Token& t = next(after, literal);
    if (t.text != literal) fail(t, std::string("expected '") + literal + "', found '" + t.text + "'");
  }

  void parse_carrier() {
    const Token& kw = tokens_[pos_++];
    const Token& name = next(kw, "carrier name");
    if (name.line != kw.line) fail(name, "carrier name must follow 'carrier' on the same line");
    if (carriers_.count(name.text)) fail(name, "carrier '" + name.text + "' declared twice");
    const Token& eq = next(name, "'='");
    if (eq.text != "=" || eq.line != kw.line) fail(eq, "expected '=' after carrier name");
    std::vector<std::string> labels;
    while (pos_ < tokens_.size() && tokens_[pos_].line == kw.line) {
      const Token& l = tokens_[pos_++];
      for (const auto& seen : labels)
        if (seen == l.text) fail(l, "duplicate label '" + l.text + "' in carrier " + name.text);
      labels.push_back(l.text);
    }
    try {
      Carrier c(name.text, std::move(labels));
      carriers_.emplace(name.text, c);
      doc_.carriers.push_back(c);
    } catch (const Error& e) {
      fail(name, e.what());
    }
  }

  const Carrier& carrier_ref(const Token& t) {
    auto it = carriers_.find(t.text);
    if (it == carriers_.end()) fail(t, "unknown carrier '" + t.text + "'");
    return it->second;
  }

  void parse_rel() {
    const Token& kw = tokens_[pos_++];
    const Token& name = next(kw, "relation name");
    if (doc_.find(name.text)) fail(name, "relation '" + name.text + "' defined twice");
    expect(name, ":");
    const Token& tname = next(name, "target carrier");
    const Carrier target = carrier_ref(tname);
    expect(tname, "~");
    const Token& sname = next(tname, "source carrier");
    const Carrier source = carrier_ref(sname);
    BitMatrix bits(target.size(), source.size());
    const Token* last = &sname;
    while (true) {
      const Token& a = next(*last, "a label pair or 'end'");
      // A label may be spelled "end"; only a bare "end" closes the relation.
      if (a.text == "end" && (pos_ >= tokens_.size() || tokens_[pos_].line != a.line)) break;
      const Token& b = next(a, "second label of pair");
      auto i = target.find(a.text);
      if (!i) fail(a, "label '" + a.text + "' not in carrier " + target.name());
      auto j = source.find(b.text);
      if (!j) fail(b, "label '" + b.text + "' not in carrier " + source.name());
      bits.set(*i, *j);
      last = &b;
    }
    doc_.relations.push_back({name.text, Rel(target, source, std::move(bits))});
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::map<std::string, Carrier> carriers_;
  Document doc_;
};

void collect(std::vector<Carrier>& seen, const Carrier& c) {
  for (const auto& s : seen) {
    if (s.name() != c.name()) continue;
    if (!s.identical(c)) throw Error("two different carriers are both named '" + c.name() + "'");
    return;
  }
  seen.push_back(c);
}

}  // namespace

const Rel* Document::find(std::string_view name) const {
  for (const auto& r : relations)
    if (r.name == name) return &r.rel;
  return nullptr;
}

const Rel& Document::get(std::string_view name) const {
  const Rel* r = find(name);
  if (!r) throw Error("no relation named '" + std::string(name) + "'");
  return *r;
}

Document parse_document(std::string_view text) { return Parser(tokenize(text)).run(); }

Document read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

std::string write_document(const std::vector<NamedRel>& relations) {
  std::vector<Carrier> carriers;
  for (const auto& nr : relations) {
    collect(carriers, nr.rel.target());
    collect(carriers, nr.rel.source());
  }
  std::ostringstream out;
  for (const auto& c : carriers) {
    out << "carrier " << c.name() << " =";
    for (const auto& l : c.labels()) out << ' ' << l;
    out << '\n';
  }
  for (const auto& nr : relations) {
    const Rel& r = nr.rel;
    out << "rel " << nr.name << " : " << r.target().name() << " ~ " << r.source().name() << '\n';
    for (const auto& [i, j] : r.pairs()) out << r.target().label(i) << ' ' << r.source().label(j) << '\n';
    out << "end\n";
  }
  return out.str();
}

std::string write_relation(const std::string& name, const Rel& r) { return write_document({{name, r}}); }

}  // namespace relkit
