#include "trisect/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace trisect {

bool GroupDecl::operator==(const GroupDecl& other) const {
  return name == other.name && presentation == other.presentation;
}

bool HomDecl::operator==(const HomDecl& other) const {
  if (name != other.name || domain != other.domain || codomain != other.codomain)
    return false;
  if (hom.images().size() != other.hom.images().size()) return false;
  for (size_t i = 0; i < hom.images().size(); ++i)
    if (!(hom.images()[i] == other.hom.images()[i])) return false;
  return true;
}

bool CubeDecl::operator==(const CubeDecl& other) const {
  return name == other.name && maps == other.maps &&
         cube.params() == other.cube.params();
}

bool MorphismDecl::operator==(const MorphismDecl& other) const {
  return name == other.name && source == other.source && target == other.target &&
         components == other.components;
}

bool CurvesDecl::operator==(const CurvesDecl& other) const {
  return name == other.name && group == other.group && hom == other.hom &&
         words == other.words;
}

namespace {

template <class T>
const T* find_decl(const std::vector<Document::Item>& items, std::string_view name) {
  for (const auto& item : items)
    if (const T* decl = std::get_if<T>(&item); decl && decl->name == name) return decl;
  return nullptr;
}

const std::set<std::string>& reserved_words() {
  static const std::set<std::string> words{
      "group", "gens", "rel",  "hom",  "trisection", "morphism", "curves",
      "in",    "ker",  "phi0", "phi1", "phi2",       "phi3"};
  return words;
}

struct Token {
  enum class Kind { Name, Integer, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  long value = 0;
  int line = 1, column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (true) {
      skip_space_and_comments();
      Token token;
      token.line = line_;
      token.column = column_;
      if (pos_ >= text_.size()) {
        tokens.push_back(token);
        return tokens;
      }
      const unsigned char c = static_cast<unsigned char>(text_[pos_]);
      if (c >= 0x80)
        throw ParseError(line_, column_, "non-ASCII input is not accepted");
      if (std::isalpha(c) || c == '_') {
        token.kind = Token::Kind::Name;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
          token.text.push_back(take());
      } else if (std::isdigit(c)) {
        token.kind = Token::Kind::Integer;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
          token.text.push_back(take());
        token.value = std::strtol(token.text.c_str(), nullptr, 10);
      } else if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
        token.kind = Token::Kind::Punct;
        token.text = "->";
        take();
        take();
      } else if (std::string_view("{}():;,=^*[]-").find(static_cast<char>(c)) !=
                 std::string_view::npos) {
        token.kind = Token::Kind::Punct;
        token.text.push_back(take());
      } else {
        throw ParseError(line_, column_,
                         std::string("unexpected character '") + static_cast<char>(c) + "'");
      }
      tokens.push_back(std::move(token));
    }
  }

 private:
  char take() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') take();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        take();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1, column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(Lexer(text).run()) {}

  Document run() {
    Document doc;
    while (peek().kind != Token::Kind::End) {
      const Token& head = peek();
      if (head.kind != Token::Kind::Name)
        fail(head, "expected a declaration (group, hom, trisection, morphism, curves)");
      Document::Item item = [&]() -> Document::Item {
        if (head.text == "group") return parse_group();
        if (head.text == "hom") return parse_hom(doc);
        if (head.text == "trisection") return parse_cube(doc);
        if (head.text == "morphism") return parse_morphism(doc);
        if (head.text == "curves") return parse_curves(doc);
        fail(head, "unknown declaration '" + head.text + "'");
      }();
      try {
        doc.add(std::move(item));
      } catch (const Error& e) {
        fail(head, e.what());
      }
    }
    return doc;
  }

  Word parse_single_word(const Alphabet& alphabet) {
    Word w = parse_word(alphabet);
    if (peek().kind != Token::Kind::End) fail(peek(), "trailing input after word");
    return w;
  }

 private:
  const Token& peek(int ahead = 0) const {
    const size_t i = std::min(pos_ + static_cast<size_t>(ahead), tokens_.size() - 1);
    return tokens_[i];
  }

  const Token& next() {
    const Token& t = tokens_[std::min(pos_, tokens_.size() - 1)];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const Token& at, const std::string& message) const {
    throw ParseError(at.line, at.column, message);
  }

  const Token& expect_punct(const std::string& text) {
    const Token& t = peek();
    if (t.kind != Token::Kind::Punct || t.text != text)
      fail(t, "expected '" + text + "'");
    return next();
  }

  std::string expect_name(const std::string& what) {
    const Token& t = peek();
    if (t.kind != Token::Kind::Name) fail(t, "expected " + what);
    return next().text;
  }

  std::string declared_name(const std::string& what) {
    const Token& t = peek();
    const std::string name = expect_name(what);
    if (reserved_words().contains(name))
      fail(t, "'" + name + "' is a reserved word");
    return name;
  }

  void expect_keyword(const std::string& keyword) {
    const Token& t = peek();
    if (t.kind != Token::Kind::Name || t.text != keyword)
      fail(t, "expected '" + keyword + "'");
    next();
  }

  long expect_int() {
    const Token& t = peek();
    if (t.kind != Token::Kind::Integer) fail(t, "expected an integer");
    return next().value;
  }

  long expect_signed_int() {
    if (peek().kind == Token::Kind::Punct && peek().text == "-") {
      next();
      return -expect_int();
    }
    return expect_int();
  }

  bool at_punct(const std::string& text) const {
    return peek().kind == Token::Kind::Punct && peek().text == text;
  }

  // word := "1" | term+ ; term := NAME ("^" SINT)? | "[" word "," word "]"
  Word parse_word(const Alphabet& alphabet) {
    std::vector<int32_t> raw;
    if (peek().kind == Token::Kind::Integer) {
      const Token& t = peek();
      if (t.value != 1) fail(t, "only '1' denotes the identity word");
      next();
      return Word(alphabet);
    }
    parse_terms(alphabet, raw);
    return Word::reduce(alphabet, raw);
  }

  void parse_terms(const Alphabet& alphabet, std::vector<int32_t>& raw) {
    bool first = true;
    while (true) {
      if (peek().kind == Token::Kind::Name) {
        const Token& t = peek();
        const int g = alphabet.find(t.text);
        if (g < 0) fail(t, "unknown generator '" + t.text + "'");
        next();
        long exponent = 1;
        if (at_punct("^")) {
          next();
          exponent = expect_signed_int();
        }
        const int32_t code = exponent >= 0 ? g + 1 : -(g + 1);
        for (long i = 0; i < std::labs(exponent); ++i) raw.push_back(code);
      } else if (at_punct("[")) {
        next();
        std::vector<int32_t> u, v;
        parse_terms_into(alphabet, u);
        expect_punct(",");
        parse_terms_into(alphabet, v);
        expect_punct("]");
        raw.insert(raw.end(), u.begin(), u.end());
        raw.insert(raw.end(), v.begin(), v.end());
        for (auto it = u.rbegin(); it != u.rend(); ++it) raw.push_back(-*it);
        for (auto it = v.rbegin(); it != v.rend(); ++it) raw.push_back(-*it);
      } else {
        if (first) fail(peek(), "expected a word");
        return;
      }
      first = false;
      if (at_punct("*")) next();
      if (!(peek().kind == Token::Kind::Name || at_punct("["))) return;
    }
  }

  void parse_terms_into(const Alphabet& alphabet, std::vector<int32_t>& raw) {
    if (peek().kind == Token::Kind::Integer && peek().value == 1) {
      next();
      return;
    }
    parse_terms(alphabet, raw);
  }

  Document::Item parse_group() {
    next();  // group
    const Token& at = peek();
    const std::string name = declared_name("a group name");
    expect_punct("{");
    expect_keyword("gens");
    std::vector<std::string> names;
    while (peek().kind == Token::Kind::Name) {
      const Token& t = peek();
      const std::string gen = declared_name("a generator name");
      try {
        Alphabet::validate_name(gen);
      } catch (const Error& e) {
        fail(t, e.what());
      }
      names.push_back(gen);
    }
    expect_punct(";");
    Alphabet alphabet;
    try {
      alphabet = Alphabet(names);
    } catch (const Error& e) {
      fail(at, e.what());
    }

    std::vector<Word> relators;
    while (peek().kind == Token::Kind::Name && peek().text == "rel") {
      next();
      const Word lhs = parse_word(alphabet);
      expect_punct("=");
      const Word rhs = parse_word(alphabet);
      expect_punct(";");
      relators.push_back(concat(lhs, rhs.inverse()));
    }
    expect_punct("}");
    return GroupDecl{name, Presentation(name, alphabet, std::move(relators))};
  }

  Document::Item parse_hom(const Document& doc) {
    next();  // hom
    const std::string name = declared_name("a hom name");
    expect_punct(":");
    const Token& dom_at = peek();
    const std::string domain = expect_name("a group name");
    expect_punct("->");
    const Token& cod_at = peek();
    const std::string codomain = expect_name("a group name");
    const GroupDecl* dom = doc.group(domain);
    if (!dom) fail(dom_at, "unknown group '" + domain + "'");
    const GroupDecl* cod = doc.group(codomain);
    if (!cod) fail(cod_at, "unknown group '" + codomain + "'");

    expect_punct("{");
    std::vector<std::optional<Word>> images(
        static_cast<size_t>(dom->presentation.generators().size()));
    while (peek().kind == Token::Kind::Name) {
      const Token& t = peek();
      const std::string gen = next().text;
      const int g = dom->presentation.generators().find(gen);
      if (g < 0) fail(t, "image for unknown generator '" + gen + "'");
      if (images[static_cast<size_t>(g)]) fail(t, "duplicate image for generator '" + gen + "'");
      expect_punct("->");
      images[static_cast<size_t>(g)] = parse_word(cod->presentation.generators());
      expect_punct(";");
    }
    const Token& close = peek();
    expect_punct("}");
    std::vector<Word> total;
    for (int g = 0; g < dom->presentation.generators().size(); ++g) {
      if (!images[static_cast<size_t>(g)])
        fail(close, "hom '" + name + "' gives no image for generator '" +
                        dom->presentation.generators().name(g) + "'");
      total.push_back(*images[static_cast<size_t>(g)]);
    }
    return HomDecl{name, domain, codomain,
                   GroupHom(name, dom->presentation, cod->presentation, std::move(total))};
  }

  Document::Item parse_cube(const Document& doc) {
    const Token& at = peek();
    next();  // trisection
    const std::string name = declared_name("a trisection name");
    expect_punct("(");
    TrisectionParams params;
    const std::array<std::pair<std::string, int*>, 4> keys{
        {{"g", &params.genus}, {"k", &params.handles}, {"p", &params.page_genus},
         {"b", &params.boundary}}};
    for (size_t i = 0; i < keys.size(); ++i) {
      expect_keyword(keys[i].first);
      expect_punct("=");
      *keys[i].second = static_cast<int>(expect_int());
      if (i + 1 < keys.size()) expect_punct(",");
    }
    expect_punct(")");
    expect_punct("{");
    std::array<std::string, 3> maps;
    std::array<const HomDecl*, 3> decls{};
    for (int i = 0; i < 3; ++i) {
      const Token& t = peek();
      maps[static_cast<size_t>(i)] = expect_name("a hom name");
      decls[static_cast<size_t>(i)] = doc.hom(maps[static_cast<size_t>(i)]);
      if (!decls[static_cast<size_t>(i)])
        fail(t, "unknown hom '" + maps[static_cast<size_t>(i)] + "'");
    }
    expect_punct("}");
    try {
      TrisectionCube cube(name, params, decls[0]->hom, decls[1]->hom, decls[2]->hom);
      return CubeDecl{name, maps, std::move(cube)};
    } catch (const Error& e) {
      fail(at, e.what());
    }
  }

  Document::Item parse_morphism(const Document& doc) {
    const Token& at = peek();
    next();  // morphism
    const std::string name = declared_name("a morphism name");
    expect_punct(":");
    const Token& src_at = peek();
    const std::string source = expect_name("a trisection name");
    expect_punct("->");
    const Token& tgt_at = peek();
    const std::string target = expect_name("a trisection name");
    const CubeDecl* src = doc.cube(source);
    if (!src) fail(src_at, "unknown trisection '" + source + "'");
    const CubeDecl* tgt = doc.cube(target);
    if (!tgt) fail(tgt_at, "unknown trisection '" + target + "'");

    expect_punct("{");
    std::array<std::string, 4> components;
    std::array<const HomDecl*, 4> decls{};
    for (int i = 0; i < 4; ++i) {
      expect_keyword("phi" + std::to_string(i));
      const Token& t = peek();
      components[static_cast<size_t>(i)] = expect_name("a hom name");
      decls[static_cast<size_t>(i)] = doc.hom(components[static_cast<size_t>(i)]);
      if (!decls[static_cast<size_t>(i)])
        fail(t, "unknown hom '" + components[static_cast<size_t>(i)] + "'");
      expect_punct(";");
    }
    expect_punct("}");
    try {
      CubeMorphism morphism(name, src->cube, tgt->cube, decls[0]->hom, decls[1]->hom,
                            decls[2]->hom, decls[3]->hom);
      return MorphismDecl{name, source, target, components, std::move(morphism)};
    } catch (const Error& e) {
      fail(at, e.what());
    }
  }

  Document::Item parse_curves(const Document& doc) {
    next();  // curves
    const std::string name = declared_name("a curve family name");
    expect_keyword("in");
    const Token& grp_at = peek();
    const std::string group = expect_name("a group name");
    const GroupDecl* grp = doc.group(group);
    if (!grp) fail(grp_at, "unknown group '" + group + "'");
    expect_keyword("ker");
    const Token& hom_at = peek();
    const std::string hom = expect_name("a hom name");
    const HomDecl* h = doc.hom(hom);
    if (!h) fail(hom_at, "unknown hom '" + hom + "'");
    if (h->domain != group)
      fail(hom_at, "hom '" + hom + "' is not defined on group '" + group + "'");

    expect_punct("{");
    std::vector<Word> words;
    words.push_back(parse_word(grp->presentation.generators()));
    while (at_punct(",")) {
      next();
      words.push_back(parse_word(grp->presentation.generators()));
    }
    expect_punct("}");
    return CurvesDecl{name, group, hom, std::move(words)};
  }

  std::vector<Token> tokens_;
  size_t pos_ = 0;
};

}  // namespace

const GroupDecl* Document::group(std::string_view name) const {
  return find_decl<GroupDecl>(items_, name);
}
const HomDecl* Document::hom(std::string_view name) const {
  return find_decl<HomDecl>(items_, name);
}
const CubeDecl* Document::cube(std::string_view name) const {
  return find_decl<CubeDecl>(items_, name);
}
const MorphismDecl* Document::morphism(std::string_view name) const {
  return find_decl<MorphismDecl>(items_, name);
}
const CurvesDecl* Document::curves(std::string_view name) const {
  return find_decl<CurvesDecl>(items_, name);
}

void Document::add(Item item) {
  const auto name_of = [](const Item& it) {
    return std::visit([](const auto& decl) { return decl.name; }, it);
  };
  const std::string name = name_of(item);
  for (const auto& existing : items_)
    if (existing.index() == item.index() && name_of(existing) == name)
      throw Error("duplicate declaration '" + name + "'");
  items_.push_back(std::move(item));
}

Document parse_document(std::string_view text) { return Parser(text).run(); }

Word parse_word_text(std::string_view text, const Alphabet& alphabet) {
  return Parser(text).parse_single_word(alphabet);
}

namespace {

struct Serializer {
  std::ostringstream out;

  void operator()(const GroupDecl& decl) {
    out << "group " << decl.name << " {\n  gens";
    for (const auto& g : decl.presentation.generators().names()) out << ' ' << g;
    out << ";\n";
    for (const Word& r : decl.presentation.relators())
      out << "  rel " << r.str() << " = 1;\n";
    out << "}\n";
  }

  void operator()(const HomDecl& decl) {
    out << "hom " << decl.name << " : " << decl.domain << " -> " << decl.codomain
        << " {\n";
    for (int g = 0; g < decl.hom.domain().generators().size(); ++g)
      out << "  " << decl.hom.domain().generators().name(g) << " -> "
          << decl.hom.image(g).str() << ";\n";
    out << "}\n";
  }

  void operator()(const CubeDecl& decl) {
    const auto& p = decl.cube.params();
    out << "trisection " << decl.name << " (g=" << p.genus << ", k=" << p.handles
        << ", p=" << p.page_genus << ", b=" << p.boundary << ") { " << decl.maps[0]
        << ' ' << decl.maps[1] << ' ' << decl.maps[2] << " }\n";
  }

  void operator()(const MorphismDecl& decl) {
    out << "morphism " << decl.name << " : " << decl.source << " -> " << decl.target
        << " {\n";
    for (int i = 0; i < 4; ++i)
      out << "  phi" << i << ' ' << decl.components[static_cast<size_t>(i)] << ";\n";
    out << "}\n";
  }

  void operator()(const CurvesDecl& decl) {
    out << "curves " << decl.name << " in " << decl.group << " ker " << decl.hom
        << " { ";
    for (size_t i = 0; i < decl.words.size(); ++i) {
      if (i) out << ", ";
      out << decl.words[i].str();
    }
    out << " }\n";
  }
};

}  // namespace

std::string serialize(const Document& doc) {
  Serializer serializer;
  bool first = true;
  for (const auto& item : doc.items()) {
    if (!first) serializer.out << '\n';
    first = false;
    std::visit(serializer, item);
  }
  return serializer.out.str();
}

}  // namespace trisect
