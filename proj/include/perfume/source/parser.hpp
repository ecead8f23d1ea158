#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "perfume/source/ast.hpp"
#include "perfume/source/lexer.hpp"
#include "perfume/source/token.hpp"

namespace perfume {

// Recursive-descent parser for Java 17 source. Tokens are pre-lexed into a
// vector so speculative parses can rewind by index; the handful of token
// mutations (splitting ">>" when closing type arguments) are journaled and
// undone on rewind.
class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string path)
      : toks_(std::move(tokens)), path_(std::move(path)) {
    if (toks_.empty()) toks_.push_back({TokenKind::End, "", {1, 1}});
  }

  void parse_into(CompilationUnit& unit) {
    parse_package_and_imports(unit);
    while (!at_end()) {
      if (accept_punct(";")) continue;
      SourcePosition start = cur().pos;
      auto [mods, annos] = parse_modifiers();
      unit.types.push_back(parse_type_decl(mods, std::move(annos), "", start));
    }
  }

 private:
  std::vector<Token> toks_;
  std::string path_;
  std::size_t pos_ = 0;
  std::vector<std::pair<std::size_t, Token>> undo_;  // journal for token edits

  // -- token access ---------------------------------------------------------

  const Token& cur() const { return toks_[pos_]; }
  const Token& peek(std::size_t n = 1) const {
    std::size_t k = pos_ + n;
    return k < toks_.size() ? toks_[k] : toks_.back();
  }
  bool at_end() const { return cur().kind == TokenKind::End; }
  void advance() {
    if (!at_end()) ++pos_;
  }
  SourcePosition prev_end() const {
    return pos_ > 0 ? token_end(toks_[pos_ - 1]) : SourcePosition{1, 1};
  }
  static SourcePosition token_end(const Token& t) {
    SourcePosition p = t.pos;
    int line = p.line;
    int col = p.column;
    for (std::size_t i = 0; i < t.text.size(); ++i) {
      unsigned char c = static_cast<unsigned char>(t.text[i]);
      if (c == '\n') {
        ++line;
        col = 0;  // next visible char lands on column 1
      } else if ((c & 0xC0) == 0x80) {
        // UTF-8 continuation byte, no column advance
      } else {
        ++col;
      }
    }
    return {line, col > 0 ? col : 1};
  }
  SourceSpan span_from(SourcePosition start) const { return {start, prev_end()}; }

  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(message + " (found " + describe(cur()) + ")", cur().pos);
  }
  static std::string describe(const Token& t) {
    if (t.kind == TokenKind::End) return "end of file";
    return "'" + t.text + "'";
  }

  bool accept_punct(const char* p) {
    if (cur().is_punct(p)) {
      advance();
      return true;
    }
    return false;
  }
  void expect_punct(const char* p) {
    if (!accept_punct(p)) fail(std::string("expected '") + p + "'");
  }
  bool accept_kw(const char* k) {
    if (cur().is_kw(k)) {
      advance();
      return true;
    }
    return false;
  }
  void expect_kw(const char* k) {
    if (!accept_kw(k)) fail(std::string("expected '") + k + "'");
  }
  std::string expect_ident() {
    if (!cur().is_ident()) fail("expected identifier");
    std::string s = cur().text;
    advance();
    return s;
  }

  // -- speculation ----------------------------------------------------------

  struct Mark {
    std::size_t pos;
    std::size_t undo;
  };
  Mark mark() const { return {pos_, undo_.size()}; }
  void rewind(Mark m) {
    while (undo_.size() > m.undo) {
      toks_[undo_.back().first] = std::move(undo_.back().second);
      undo_.pop_back();
    }
    pos_ = m.pos;
  }

  template <typename F>
  auto speculate(F&& f) -> std::optional<decltype(f())> {
    Mark m = mark();
    try {
      return f();
    } catch (const SyntaxError&) {
      rewind(m);
      return std::nullopt;
    }
  }

  // Consumes a single '>' even when the lexer merged it into ">>", ">=", etc.
  void consume_one_gt() {
    const Token& t = cur();
    if (t.kind != TokenKind::Punct || t.text.empty() || t.text[0] != '>')
      fail("expected '>'");
    if (t.text == ">") {
      advance();
      return;
    }
    Token shortened = t;
    shortened.text.erase(0, 1);
    shortened.pos.column += 1;
    undo_.emplace_back(pos_, t);
    toks_[pos_] = std::move(shortened);
  }
  bool at_gt() const {
    return cur().kind == TokenKind::Punct && !cur().text.empty() &&
           cur().text[0] == '>';
  }

  // -- names, annotations, modifiers ---------------------------------------

  std::string parse_qualified_name() {
    std::string name = expect_ident();
    while (cur().is_punct(".") && peek().is_ident()) {
      advance();
      name += "." + expect_ident();
    }
    return name;
  }

  Annotation parse_annotation() {
    SourcePosition start = cur().pos;
    expect_punct("@");
    Annotation a;
    a.name = parse_qualified_name();
    if (cur().is_punct("(")) a.args_text = capture_balanced("(", ")");
    a.span = span_from(start);
    return a;
  }

  // Captures raw token text between matching delimiters, inclusive.
  std::string capture_balanced(const char* open, const char* close) {
    expect_punct(open);
    std::string text = open;
    int depth = 1;
    while (depth > 0) {
      if (at_end()) fail(std::string("unbalanced '") + open + "'");
      if (cur().is_punct(open)) ++depth;
      if (cur().is_punct(close)) {
        --depth;
        if (depth == 0) {
          advance();
          break;
        }
      }
      if (!text.empty() && text != open) text += " ";
      if (text == open) text += " ";
      text += cur().text;
      advance();
    }
    text += std::string(" ") + close;
    return text;
  }

  bool at_modifier() const {
    static const char* const kws[] = {
        "public", "protected", "private",  "static",    "final",
        "abstract", "synchronized", "native", "strictfp", "transient",
        "volatile", "default"};
    for (const char* k : kws)
      if (cur().is_kw(k)) return true;
    if (cur().is_ident("non") && peek(1).is_punct("-") && peek(2).is_ident("sealed"))
      return true;
    if (cur().is_ident("sealed") &&
        (peek().is_kw("class") || peek().is_kw("interface") ||
         peek().is_kw("abstract") || peek().is_kw("final") ||
         peek().is_kw("static") || peek().is_ident("record")))
      return true;
    return false;
  }

  std::pair<Modifiers, std::vector<Annotation>> parse_modifiers() {
    Modifiers mods;
    std::vector<Annotation> annos;
    for (;;) {
      if (cur().is_punct("@") && !peek().is_kw("interface")) {
        annos.push_back(parse_annotation());
        continue;
      }
      if (!at_modifier()) break;
      if (cur().is_ident("non")) {
        advance();
        advance();
        advance();
        mods.add(Modifier::NonSealed);
        continue;
      }
      if (cur().is_ident("sealed")) {
        advance();
        mods.add(Modifier::Sealed);
        continue;
      }
      const std::string& t = cur().text;
      if (t == "public") mods.add(Modifier::Public);
      else if (t == "protected") mods.add(Modifier::Protected);
      else if (t == "private") mods.add(Modifier::Private);
      else if (t == "static") mods.add(Modifier::Static);
      else if (t == "final") mods.add(Modifier::Final);
      else if (t == "abstract") mods.add(Modifier::Abstract);
      else if (t == "synchronized") mods.add(Modifier::Synchronized);
      else if (t == "native") mods.add(Modifier::Native);
      else if (t == "strictfp") mods.add(Modifier::Strictfp);
      else if (t == "transient") mods.add(Modifier::Transient);
      else if (t == "volatile") mods.add(Modifier::Volatile);
      else if (t == "default") mods.add(Modifier::Default);
      advance();
    }
    return {mods, std::move(annos)};
  }

  // -- types ----------------------------------------------------------------

  std::string capture_type_args() {
    expect_punct("<");
    std::string text = "<";
    if (at_gt()) {  // diamond
      consume_one_gt();
      return "<>";
    }
    int depth = 1;
    while (depth > 0) {
      if (at_end()) fail("unbalanced '<' in type arguments");
      if (at_gt()) {
        consume_one_gt();
        --depth;
        text += ">";
        continue;
      }
      if (cur().is_punct("<")) ++depth;
      // Reject tokens that can never occur inside type arguments so that
      // speculative type parses fail fast on expressions like a < b && c.
      if (cur().kind != TokenKind::Identifier && cur().kind != TokenKind::Keyword &&
          !cur().is_punct("<") && !cur().is_punct(",") && !cur().is_punct(".") &&
          !cur().is_punct("?") && !cur().is_punct("@") && !cur().is_punct("[") &&
          !cur().is_punct("]") && !cur().is_punct("&"))
        fail("unexpected token in type arguments");
      if (cur().kind == TokenKind::Keyword && !cur().is_kw("extends") &&
          !cur().is_kw("super") && !is_primitive_type_name(cur().text))
        fail("unexpected keyword in type arguments");
      if (text.size() > 1) text += " ";
      text += cur().text;
      advance();
    }
    return text;
  }

  TypeRef parse_type(bool allow_dims = true) {
    SourcePosition start = cur().pos;
    TypeRef ty;
    while (cur().is_punct("@")) parse_annotation();  // type-use annotation
    if (cur().kind == TokenKind::Keyword &&
        (is_primitive_type_name(cur().text) || cur().text == "void")) {
      ty.name = cur().text;
      ty.text = cur().text;
      advance();
    } else {
      ty.name = expect_ident();
      ty.text = ty.name;
      if (cur().is_punct("<")) ty.text += capture_type_args();
      while (cur().is_punct(".") && (peek().is_ident() || peek().is_punct("@"))) {
        advance();
        while (cur().is_punct("@")) parse_annotation();
        std::string seg = expect_ident();
        ty.name += "." + seg;
        ty.text += "." + seg;
        if (cur().is_punct("<")) ty.text += capture_type_args();
      }
    }
    if (allow_dims) {
      for (;;) {
        while (cur().is_punct("@")) parse_annotation();
        if (cur().is_punct("[") && peek().is_punct("]")) {
          advance();
          advance();
          ++ty.array_dims;
        } else {
          break;
        }
      }
    }
    ty.span = span_from(start);
    return ty;
  }

  std::optional<TypeRef> try_type(bool allow_dims = true) {
    return speculate([&] { return parse_type(allow_dims); });
  }

  std::string capture_type_params() {
    // Type parameter lists share the balanced-angle shape of type arguments
    // but may also contain annotations and bounds.
    return capture_type_args();
  }

  // -- declarations ----------------------------------------------------------

  void parse_package_and_imports(CompilationUnit& unit) {
    Mark m = mark();
    while (cur().is_punct("@") && !peek().is_kw("interface"))
      parse_annotation();  // package annotations
    if (cur().is_kw("package")) {
      advance();
      unit.package_name = parse_qualified_name();
      expect_punct(";");
    } else {
      rewind(m);
    }
    while (cur().is_kw("import")) {
      SourcePosition start = cur().pos;
      advance();
      ImportDecl imp;
      imp.is_static = accept_kw("static");
      imp.name = expect_ident();
      for (;;) {
        if (cur().is_punct(".") && peek().is_ident()) {
          advance();
          imp.name += "." + expect_ident();
        } else if (cur().is_punct(".") && peek().is_punct("*")) {
          advance();
          advance();
          imp.is_wildcard = true;
          break;
        } else {
          break;
        }
      }
      expect_punct(";");
      imp.span = span_from(start);
      unit.imports.push_back(imp);
    }
  }

  bool at_type_decl_start() const {
    if (cur().is_kw("class") || cur().is_kw("interface") || cur().is_kw("enum"))
      return true;
    if (cur().is_punct("@") && peek().is_kw("interface")) return true;
    if (cur().is_ident("record") && peek().is_ident() &&
        (peek(2).is_punct("(") || peek(2).is_punct("<")))
      return true;
    return false;
  }

  TypeDeclPtr parse_type_decl(Modifiers mods, std::vector<Annotation> annos,
                              const std::string& enclosing, SourcePosition start) {
    auto decl = std::make_unique<TypeDecl>();
    decl->modifiers = mods;
    decl->annotations = std::move(annos);
    decl->enclosing_path = enclosing;
    if (accept_kw("class")) {
      decl->kind = TypeKind::Class;
      decl->name = expect_ident();
      if (cur().is_punct("<")) decl->type_params_text = capture_type_params();
      if (accept_kw("extends")) decl->extends_type = parse_type();
      if (accept_kw("implements")) parse_type_list(decl->implements_list);
      parse_permits(*decl);
      parse_class_body(*decl);
    } else if (accept_kw("interface")) {
      decl->kind = TypeKind::Interface;
      decl->name = expect_ident();
      if (cur().is_punct("<")) decl->type_params_text = capture_type_params();
      if (accept_kw("extends")) parse_type_list(decl->implements_list);
      parse_permits(*decl);
      parse_class_body(*decl);
    } else if (accept_kw("enum")) {
      decl->kind = TypeKind::Enum;
      decl->name = expect_ident();
      if (accept_kw("implements")) parse_type_list(decl->implements_list);
      parse_enum_body(*decl);
    } else if (cur().is_punct("@") && peek().is_kw("interface")) {
      advance();
      advance();
      decl->kind = TypeKind::AnnotationType;
      decl->name = expect_ident();
      parse_class_body(*decl);
    } else if (cur().is_ident("record")) {
      advance();
      decl->kind = TypeKind::Record;
      decl->name = expect_ident();
      if (cur().is_punct("<")) decl->type_params_text = capture_type_params();
      expect_punct("(");
      if (!cur().is_punct(")")) {
        do {
          decl->record_components.push_back(parse_param());
        } while (accept_punct(","));
      }
      expect_punct(")");
      if (accept_kw("implements")) parse_type_list(decl->implements_list);
      parse_class_body(*decl);
    } else {
      fail("expected type declaration");
    }
    decl->span = span_from(start);
    return decl;
  }

  void parse_type_list(std::vector<TypeRef>& out) {
    do {
      out.push_back(parse_type());
    } while (accept_punct(","));
  }

  void parse_permits(TypeDecl& decl) {
    if (cur().is_ident("permits") && peek().is_ident()) {
      advance();
      parse_type_list(decl.permits_list);
    }
  }

  void parse_class_body(TypeDecl& decl) {
    expect_punct("{");
    while (!cur().is_punct("}")) {
      if (at_end()) fail("unterminated type body");
      if (accept_punct(";")) continue;
      parse_member(decl);
    }
    expect_punct("}");
  }

  void parse_enum_body(TypeDecl& decl) {
    expect_punct("{");
    while (!cur().is_punct(";") && !cur().is_punct("}")) {
      EnumConstant c;
      SourcePosition start = cur().pos;
      while (cur().is_punct("@")) c.annotations.push_back(parse_annotation());
      c.name = expect_ident();
      if (cur().is_punct("(")) parse_args(c.args);
      if (cur().is_punct("{")) {
        auto body = std::make_unique<TypeDecl>();
        body->kind = TypeKind::Class;
        body->enclosing_path = decl.path();
        parse_class_body(*body);
        body->span = span_from(start);
        c.body = std::move(body);
      }
      c.span = span_from(start);
      decl.enum_constants.push_back(std::move(c));
      if (!accept_punct(",")) break;
    }
    if (accept_punct(";")) {
      while (!cur().is_punct("}")) {
        if (at_end()) fail("unterminated enum body");
        if (accept_punct(";")) continue;
        parse_member(decl);
      }
    }
    expect_punct("}");
  }

  void parse_member(TypeDecl& decl) {
    SourcePosition start = cur().pos;
    auto [mods, annos] = parse_modifiers();

    if (at_type_decl_start()) {
      decl.members.emplace_back(
          parse_type_decl(mods, std::move(annos), decl.path(), start));
      return;
    }
    if (cur().is_punct("{")) {
      InitializerBlock init;
      init.is_static = mods.has(Modifier::Static);
      init.body = parse_block();
      init.span = span_from(start);
      decl.members.emplace_back(std::move(init));
      return;
    }

    std::string type_params;
    if (cur().is_punct("<")) type_params = capture_type_params();

    // Constructor: bare type name followed by '(' (or '{' for the compact
    // record form).
    if (cur().is_ident(decl.name.c_str()) &&
        (peek().is_punct("(") ||
         (decl.kind == TypeKind::Record && peek().is_punct("{")))) {
      ConstructorDecl ctor;
      ctor.modifiers = mods;
      ctor.annotations = std::move(annos);
      ctor.type_params_text = std::move(type_params);
      ctor.name = expect_ident();
      if (cur().is_punct("(")) {
        parse_params(ctor.params);
        parse_throws(ctor.throws_list);
      } else {
        ctor.is_compact = true;
      }
      ctor.body = parse_block();
      ctor.span = span_from(start);
      decl.members.emplace_back(std::move(ctor));
      return;
    }

    TypeRef type = parse_type();
    std::string name;
    if (cur().is_ident()) {
      name = expect_ident();
    } else {
      fail("expected member name");
    }

    if (cur().is_punct("(")) {
      MethodDecl method;
      method.modifiers = mods;
      method.annotations = std::move(annos);
      method.type_params_text = std::move(type_params);
      method.return_type = std::move(type);
      method.name = std::move(name);
      parse_params(method.params);
      while (cur().is_punct("[") && peek().is_punct("]")) {
        advance();
        advance();
        ++method.extra_dims;
      }
      parse_throws(method.throws_list);
      if (cur().is_kw("default")) {  // annotation type member default
        advance();
        while (!cur().is_punct(";")) {
          if (at_end()) fail("unterminated default value");
          if (!method.default_value_text.empty()) method.default_value_text += " ";
          method.default_value_text += cur().text;
          advance();
        }
      }
      if (cur().is_punct("{")) {
        method.body = parse_block();
        method.has_body = true;
      } else {
        expect_punct(";");
      }
      method.span = span_from(start);
      decl.members.emplace_back(std::move(method));
      return;
    }

    // Field declaration, possibly with several declarators.
    for (;;) {
      FieldDecl field;
      field.modifiers = mods;
      field.annotations = annos;
      field.type = type;
      field.name = name;
      while (cur().is_punct("[") && peek().is_punct("]")) {
        advance();
        advance();
        ++field.extra_dims;
      }
      if (accept_punct("=")) field.init = parse_initializer();
      field.span = span_from(start);
      decl.members.emplace_back(std::move(field));
      if (accept_punct(",")) {
        name = expect_ident();
        continue;
      }
      expect_punct(";");
      break;
    }
  }

  Param parse_param() {
    Param p;
    SourcePosition start = cur().pos;
    for (;;) {
      if (cur().is_punct("@")) {
        p.annotations.push_back(parse_annotation());
      } else if (cur().is_kw("final")) {
        p.is_final = true;
        advance();
      } else {
        break;
      }
    }
    p.type = parse_type();
    if (accept_punct("...")) p.is_varargs = true;
    if (cur().is_kw("this")) {  // receiver parameter
      p.name = "this";
      advance();
    } else {
      p.name = expect_ident();
    }
    while (cur().is_punct("[") && peek().is_punct("]")) {
      advance();
      advance();
      ++p.type.array_dims;
    }
    p.span = span_from(start);
    return p;
  }

  void parse_params(std::vector<Param>& out) {
    expect_punct("(");
    if (!cur().is_punct(")")) {
      do {
        if (!out.empty() && out.back().is_varargs)
          fail("varargs parameter must be last");
        out.push_back(parse_param());
      } while (accept_punct(","));
    }
    expect_punct(")");
  }

  void parse_throws(std::vector<TypeRef>& out) {
    if (accept_kw("throws")) parse_type_list(out);
  }

  // -- statements -------------------------------------------------------------

  std::vector<StmtPtr> parse_block() {
    expect_punct("{");
    std::vector<StmtPtr> stmts;
    while (!cur().is_punct("}")) {
      if (at_end()) fail("unterminated block");
      stmts.push_back(parse_statement());
    }
    expect_punct("}");
    return stmts;
  }

  StmtPtr make_stmt(SourcePosition start, auto node) {
    auto s = std::make_unique<Stmt>();
    s->span = span_from(start);
    s->node = std::move(node);
    return s;
  }

  // Control-flow branches are normalised to blocks so that trees have one
  // canonical shape regardless of whether the source used braces.
  StmtPtr as_block(StmtPtr s) {
    if (s->is<BlockStmt>()) return s;
    auto wrapped = std::make_unique<Stmt>();
    wrapped->span = s->span;
    BlockStmt b;
    b.stmts.push_back(std::move(s));
    wrapped->node = std::move(b);
    return wrapped;
  }

  StmtPtr parse_statement() {
    SourcePosition start = cur().pos;
    if (cur().is_punct("{")) {
      BlockStmt b;
      b.stmts = parse_block();
      return make_stmt(start, std::move(b));
    }
    if (accept_punct(";")) return make_stmt(start, EmptyStmt{});
    if (cur().is_kw("if")) return parse_if(start);
    if (cur().is_kw("while")) return parse_while(start);
    if (cur().is_kw("do")) return parse_do(start);
    if (cur().is_kw("for")) return parse_for(start);
    if (cur().is_kw("switch")) {
      SwitchStmt sw;
      parse_switch_body(sw.selector, sw.cases);
      return make_stmt(start, std::move(sw));
    }
    if (cur().is_kw("try")) return parse_try(start);
    if (cur().is_kw("throw")) {
      advance();
      ThrowStmt t;
      t.expr = parse_expression();
      expect_punct(";");
      return make_stmt(start, std::move(t));
    }
    if (cur().is_kw("return")) {
      advance();
      ReturnStmt r;
      if (!cur().is_punct(";")) r.expr = parse_expression();
      expect_punct(";");
      return make_stmt(start, std::move(r));
    }
    if (cur().is_kw("break")) {
      advance();
      BreakStmt b;
      if (cur().is_ident()) b.label = expect_ident();
      expect_punct(";");
      return make_stmt(start, std::move(b));
    }
    if (cur().is_kw("continue")) {
      advance();
      ContinueStmt c;
      if (cur().is_ident()) c.label = expect_ident();
      expect_punct(";");
      return make_stmt(start, std::move(c));
    }
    if (cur().is_kw("assert")) {
      advance();
      AssertStmt a;
      a.condition = parse_expression();
      if (accept_punct(":")) a.message = parse_expression();
      expect_punct(";");
      return make_stmt(start, std::move(a));
    }
    if (cur().is_kw("synchronized") && peek().is_punct("(")) {
      advance();
      SynchronizedStmt s;
      expect_punct("(");
      s.lock = parse_expression();
      expect_punct(")");
      s.body = parse_block();
      return make_stmt(start, std::move(s));
    }
    if (cur().is_ident("yield") && starts_expression(peek()) &&
        !peek().is_punct("(") ) {
      advance();
      YieldStmt y;
      y.expr = parse_expression();
      expect_punct(";");
      return make_stmt(start, std::move(y));
    }
    if (cur().is_ident() && peek().is_punct(":") && !peek().is_punct("::")) {
      LabeledStmt l;
      l.label = expect_ident();
      expect_punct(":");
      l.stmt = parse_statement();
      return make_stmt(start, std::move(l));
    }

    // Local type declarations and modifier-prefixed local variables.
    if (cur().is_punct("@") || cur().is_kw("final") || cur().is_kw("abstract") ||
        cur().is_kw("static") || at_type_decl_start()) {
      auto [mods, annos] = parse_modifiers();
      if (at_type_decl_start()) {
        LocalTypeDeclStmt lt;
        lt.decl = parse_type_decl(mods, std::move(annos), "", start);
        return make_stmt(start, std::move(lt));
      }
      LocalVarDeclStmt decl = parse_local_var_decl(mods.has(Modifier::Final),
                                                   std::move(annos));
      return make_stmt(start, std::move(decl));
    }

    // Plain local variable declaration vs expression statement.
    auto local = speculate([&] { return parse_local_var_decl(false, {}); });
    if (local) return make_stmt(start, std::move(*local));

    ExprStmt es;
    es.expr = parse_expression();
    expect_punct(";");
    return make_stmt(start, std::move(es));
  }

  LocalVarDeclStmt parse_local_var_decl(bool is_final,
                                        std::vector<Annotation> annos) {
    LocalVarDeclStmt decl;
    decl.is_final = is_final;
    decl.annotations = std::move(annos);
    decl.type = parse_type();
    for (;;) {
      VarDeclarator d;
      SourcePosition dstart = cur().pos;
      d.name = expect_ident();
      while (cur().is_punct("[") && peek().is_punct("]")) {
        advance();
        advance();
        ++d.extra_dims;
      }
      if (accept_punct("=")) d.init = parse_initializer();
      d.span = span_from(dstart);
      decl.declarators.push_back(std::move(d));
      if (accept_punct(",")) continue;
      expect_punct(";");
      break;
    }
    return decl;
  }

  ExprPtr parse_initializer() {
    if (cur().is_punct("{")) return parse_array_init();
    return parse_expression();
  }

  ExprPtr parse_array_init() {
    SourcePosition start = cur().pos;
    expect_punct("{");
    ArrayInitExpr init;
    while (!cur().is_punct("}")) {
      init.elements.push_back(parse_initializer());
      if (!accept_punct(",")) break;
    }
    expect_punct("}");
    return make_expr(start, std::move(init));
  }

  StmtPtr parse_if(SourcePosition start) {
    expect_kw("if");
    IfStmt s;
    expect_punct("(");
    s.cond = parse_expression();
    expect_punct(")");
    s.then_branch = as_block(parse_statement());
    if (accept_kw("else")) s.else_branch = as_block(parse_statement());
    return make_stmt(start, std::move(s));
  }

  StmtPtr parse_while(SourcePosition start) {
    expect_kw("while");
    WhileStmt s;
    expect_punct("(");
    s.cond = parse_expression();
    expect_punct(")");
    s.body = as_block(parse_statement());
    return make_stmt(start, std::move(s));
  }

  StmtPtr parse_do(SourcePosition start) {
    expect_kw("do");
    DoWhileStmt s;
    s.body = as_block(parse_statement());
    expect_kw("while");
    expect_punct("(");
    s.cond = parse_expression();
    expect_punct(")");
    expect_punct(";");
    return make_stmt(start, std::move(s));
  }

  StmtPtr parse_for(SourcePosition start) {
    expect_kw("for");
    expect_punct("(");
    auto foreach_head = speculate([&] {
      ForEachStmt fe;
      while (cur().is_punct("@")) parse_annotation();
      fe.is_final = accept_kw("final");
      while (cur().is_punct("@")) parse_annotation();
      fe.type = parse_type();
      fe.var_name = expect_ident();
      expect_punct(":");
      return fe;
    });
    if (foreach_head) {
      ForEachStmt fe = std::move(*foreach_head);
      fe.iterable = parse_expression();
      expect_punct(")");
      fe.body = as_block(parse_statement());
      return make_stmt(start, std::move(fe));
    }
    ForClassicStmt fc;
    if (!accept_punct(";")) {
      SourcePosition istart = cur().pos;
      bool is_final = false;
      std::vector<Annotation> annos;
      while (cur().is_punct("@")) annos.push_back(parse_annotation());
      if (cur().is_kw("final")) {
        is_final = true;
        advance();
      }
      auto local =
          speculate([&] { return parse_local_var_decl(is_final, annos); });
      if (local) {
        fc.init.push_back(make_stmt(istart, std::move(*local)));
      } else {
        do {
          SourcePosition estart = cur().pos;
          ExprStmt es;
          es.expr = parse_expression();
          fc.init.push_back(make_stmt(estart, std::move(es)));
        } while (accept_punct(","));
        expect_punct(";");
      }
    }
    if (!cur().is_punct(";")) fc.cond = parse_expression();
    expect_punct(";");
    if (!cur().is_punct(")")) {
      do {
        fc.update.push_back(parse_expression());
      } while (accept_punct(","));
    }
    expect_punct(")");
    fc.body = as_block(parse_statement());
    return make_stmt(start, std::move(fc));
  }

  StmtPtr parse_try(SourcePosition start) {
    expect_kw("try");
    TryStmt t;
    if (accept_punct("(")) {
      for (;;) {
        if (cur().is_punct(")")) break;
        TryResource r;
        SourcePosition rstart = cur().pos;
        auto declared = speculate([&] {
          TryResource res;
          while (cur().is_punct("@")) parse_annotation();
          res.is_final = accept_kw("final");
          res.type = parse_type();
          res.name = expect_ident();
          expect_punct("=");
          res.init = parse_expression();
          return res;
        });
        if (declared) {
          r = std::move(*declared);
        } else {
          // Effectively-final variable used directly as a resource; the
          // grammar allows only a name or field access here.
          ExprPtr e = parse_expression();
          std::string access = resource_access_text(*e);
          if (access.empty()) fail("expected a variable access resource");
          r.name = std::move(access);
          r.init = nullptr;
        }
        r.span = span_from(rstart);
        t.resources.push_back(std::move(r));
        if (!accept_punct(";")) break;
      }
      expect_punct(")");
    }
    t.body = parse_block();
    while (cur().is_kw("catch")) {
      advance();
      CatchClause c;
      SourcePosition cstart = cur().pos;
      expect_punct("(");
      while (cur().is_punct("@")) parse_annotation();
      accept_kw("final");
      c.types.push_back(parse_type());
      while (accept_punct("|")) c.types.push_back(parse_type());
      c.name = expect_ident();
      expect_punct(")");
      c.body = parse_block();
      c.span = span_from(cstart);
      t.catches.push_back(std::move(c));
    }
    if (accept_kw("finally")) {
      t.has_finally = true;
      t.finally_body = parse_block();
    }
    return make_stmt(start, std::move(t));
  }

  void parse_switch_body(ExprPtr& selector, std::vector<SwitchCase>& cases) {
    expect_kw("switch");
    expect_punct("(");
    selector = parse_expression();
    expect_punct(")");
    expect_punct("{");
    while (!cur().is_punct("}")) {
      if (at_end()) fail("unterminated switch");
      SwitchCase c;
      c.span.begin = cur().pos;
      if (accept_kw("default")) {
        c.is_default = true;
        while (accept_punct(",")) {  // `default, case ...` never valid, but
          if (accept_kw("default")) continue;  // tolerate `case null, default`
          expect_kw("case");
          c.labels.push_back(parse_ternary_expr());
        }
      } else {
        expect_kw("case");
        do {
          if (accept_kw("default")) {
            c.is_default = true;
            continue;
          }
          c.labels.push_back(parse_ternary_expr());
        } while (accept_punct(","));
      }
      if (accept_punct("->")) {
        c.arrow = true;
        SourcePosition bstart = cur().pos;
        if (cur().is_punct("{")) {
          BlockStmt b;
          b.stmts = parse_block();
          c.body.push_back(make_stmt(bstart, std::move(b)));
        } else if (cur().is_kw("throw")) {
          c.body.push_back(parse_statement());
        } else {
          ExprStmt es;
          es.expr = parse_expression();
          expect_punct(";");
          c.body.push_back(make_stmt(bstart, std::move(es)));
        }
      } else {
        expect_punct(":");
        while (!cur().is_punct("}") && !cur().is_kw("case") &&
               !cur().is_kw("default")) {
          if (at_end()) fail("unterminated switch");
          c.body.push_back(parse_statement());
        }
      }
      c.span.end = prev_end();
      cases.push_back(std::move(c));
    }
    expect_punct("}");
  }

  // -- expressions ------------------------------------------------------------

  ExprPtr make_expr(SourcePosition start, auto node) {
    auto e = std::make_unique<Expr>();
    e->span = span_from(start);
    e->node = std::move(node);
    return e;
  }

  static bool starts_expression(const Token& t) {
    switch (t.kind) {
      case TokenKind::Identifier:
      case TokenKind::IntLiteral:
      case TokenKind::FloatLiteral:
      case TokenKind::CharLiteral:
      case TokenKind::StringLiteral:
        return true;
      case TokenKind::Keyword:
        return t.text == "this" || t.text == "super" || t.text == "new" ||
               t.text == "switch" || t.text == "true" || t.text == "false" ||
               t.text == "null" || is_primitive_type_name(t.text) ||
               t.text == "void";
      case TokenKind::Punct:
        return t.text == "(" || t.text == "!" || t.text == "~" ||
               t.text == "+" || t.text == "-" || t.text == "++" ||
               t.text == "--";
      default:
        return false;
    }
  }

  ExprPtr parse_expression() { return parse_assignment(); }

  bool lambda_ahead() {
    if (cur().is_ident() && peek().is_punct("->")) return true;
    if (!cur().is_punct("(")) return false;
    int depth = 0;
    for (std::size_t k = pos_; k < toks_.size(); ++k) {
      const Token& t = toks_[k];
      if (t.kind == TokenKind::End) return false;
      if (t.is_punct("(")) ++depth;
      if (t.is_punct(")")) {
        --depth;
        if (depth == 0)
          return k + 1 < toks_.size() && toks_[k + 1].is_punct("->");
      }
    }
    return false;
  }

  ExprPtr parse_lambda() {
    SourcePosition start = cur().pos;
    LambdaExpr lam;
    if (cur().is_ident()) {
      Param p;
      p.name = expect_ident();
      lam.params.push_back(std::move(p));
    } else {
      lam.parenthesized = true;
      expect_punct("(");
      while (!cur().is_punct(")")) {
        Param p;
        SourcePosition pstart = cur().pos;
        while (cur().is_punct("@")) p.annotations.push_back(parse_annotation());
        if (cur().is_kw("final")) {
          p.is_final = true;
          advance();
        }
        auto typed = speculate([&] {
          TypeRef ty = parse_type();
          std::string name = expect_ident();
          if (!cur().is_punct(",") && !cur().is_punct(")"))
            fail("not a typed lambda parameter");
          return std::make_pair(ty, name);
        });
        if (typed) {
          p.type = std::move(typed->first);
          p.name = std::move(typed->second);
        } else {
          p.name = expect_ident();
        }
        p.span = span_from(pstart);
        lam.params.push_back(std::move(p));
        if (!accept_punct(",")) break;
      }
      expect_punct(")");
    }
    expect_punct("->");
    if (cur().is_punct("{")) {
      lam.has_block = true;
      lam.body_block = parse_block();
    } else {
      lam.body_expr = parse_expression();
    }
    return make_expr(start, std::move(lam));
  }

  ExprPtr parse_assignment() {
    if (lambda_ahead()) return parse_lambda();
    ExprPtr lhs = parse_ternary_expr();
    static const char* const ops[] = {"=",  "+=",  "-=",  "*=",  "/=",  "%=",
                                      "&=", "|=",  "^=",  "<<=", ">>=", ">>>="};
    for (const char* op : ops) {
      if (cur().is_punct(op)) {
        SourcePosition start = lhs->span.begin;
        advance();
        AssignExpr a;
        a.op = op;
        a.target = std::move(lhs);
        a.value = parse_assignment();
        return make_expr(start, std::move(a));
      }
    }
    return lhs;
  }

  ExprPtr parse_ternary_expr() {
    ExprPtr cond = parse_or();
    if (cur().is_punct("?")) {
      SourcePosition start = cond->span.begin;
      advance();
      TernaryExpr t;
      t.cond = std::move(cond);
      t.then_value = parse_expression();
      expect_punct(":");
      t.else_value = parse_assignment();
      return make_expr(start, std::move(t));
    }
    return cond;
  }

  ExprPtr binary(ExprPtr lhs, const char* op, ExprPtr rhs) {
    SourcePosition start = lhs->span.begin;
    BinaryExpr b;
    b.op = op;
    b.lhs = std::move(lhs);
    b.rhs = std::move(rhs);
    return make_expr(start, std::move(b));
  }

  ExprPtr parse_or() {
    ExprPtr e = parse_and();
    while (cur().is_punct("||")) {
      advance();
      e = binary(std::move(e), "||", parse_and());
    }
    return e;
  }
  ExprPtr parse_and() {
    ExprPtr e = parse_bit_or();
    while (cur().is_punct("&&")) {
      advance();
      e = binary(std::move(e), "&&", parse_bit_or());
    }
    return e;
  }
  ExprPtr parse_bit_or() {
    ExprPtr e = parse_bit_xor();
    while (cur().is_punct("|")) {
      advance();
      e = binary(std::move(e), "|", parse_bit_xor());
    }
    return e;
  }
  ExprPtr parse_bit_xor() {
    ExprPtr e = parse_bit_and();
    while (cur().is_punct("^")) {
      advance();
      e = binary(std::move(e), "^", parse_bit_and());
    }
    return e;
  }
  ExprPtr parse_bit_and() {
    ExprPtr e = parse_equality();
    while (cur().is_punct("&")) {
      advance();
      e = binary(std::move(e), "&", parse_equality());
    }
    return e;
  }
  ExprPtr parse_equality() {
    ExprPtr e = parse_relational();
    for (;;) {
      if (cur().is_punct("==")) {
        advance();
        e = binary(std::move(e), "==", parse_relational());
      } else if (cur().is_punct("!=")) {
        advance();
        e = binary(std::move(e), "!=", parse_relational());
      } else {
        break;
      }
    }
    return e;
  }

  ExprPtr parse_relational() {
    ExprPtr e = parse_shift();
    for (;;) {
      if (cur().is_kw("instanceof")) {
        SourcePosition start = e->span.begin;
        advance();
        accept_kw("final");
        InstanceOfExpr io;
        io.operand = std::move(e);
        io.type = parse_type();
        if (cur().is_ident()) io.binding = expect_ident();
        e = make_expr(start, std::move(io));
        continue;
      }
      const char* op = nullptr;
      if (cur().is_punct("<")) op = "<";
      else if (cur().is_punct("<=")) op = "<=";
      else if (cur().is_punct(">=")) op = ">=";
      else if (cur().is_punct(">") && !adjacent_gt()) op = ">";
      else if (gt_assembled_ge()) {
        // '>' immediately followed by '=' after an earlier token split
        consume_one_gt();
        advance();
        e = binary(std::move(e), ">=", parse_shift());
        continue;
      }
      if (!op) break;
      advance();
      e = binary(std::move(e), op, parse_shift());
    }
    return e;
  }

  bool adjacent(const Token& a, const Token& b) const {
    SourcePosition ae = token_end(a);
    return ae.line == b.pos.line && ae.column + 1 == b.pos.column;
  }
  bool adjacent_gt() const {
    return cur().is_punct(">") && peek().kind == TokenKind::Punct &&
           !peek().text.empty() && peek().text[0] == '>' &&
           adjacent(cur(), peek());
  }
  bool gt_assembled_ge() const {
    return cur().is_punct(">") && peek().is_punct("=") && adjacent(cur(), peek());
  }

  ExprPtr parse_shift() {
    ExprPtr e = parse_additive();
    for (;;) {
      if (cur().is_punct("<<")) {
        advance();
        e = binary(std::move(e), "<<", parse_additive());
      } else if (cur().is_punct(">>") || cur().is_punct(">>>")) {
        std::string op = cur().text;
        advance();
        e = binary(std::move(e), op == ">>" ? ">>" : ">>>", parse_additive());
      } else if (adjacent_gt()) {
        // Reassemble shifts from single '>' tokens left by type-argument
        // splits: ">" ">" (and ">" ">" ">").
        consume_one_gt();
        consume_one_gt();
        bool triple = at_gt() && cur().is_punct(">");
        if (triple && adjacent(toks_[pos_ - 1], cur())) consume_one_gt();
        e = binary(std::move(e), triple ? ">>>" : ">>", parse_additive());
      } else {
        break;
      }
    }
    return e;
  }

  ExprPtr parse_additive() {
    ExprPtr e = parse_multiplicative();
    for (;;) {
      if (cur().is_punct("+")) {
        advance();
        e = binary(std::move(e), "+", parse_multiplicative());
      } else if (cur().is_punct("-")) {
        advance();
        e = binary(std::move(e), "-", parse_multiplicative());
      } else {
        break;
      }
    }
    return e;
  }

  ExprPtr parse_multiplicative() {
    ExprPtr e = parse_unary();
    for (;;) {
      if (cur().is_punct("*")) {
        advance();
        e = binary(std::move(e), "*", parse_unary());
      } else if (cur().is_punct("/")) {
        advance();
        e = binary(std::move(e), "/", parse_unary());
      } else if (cur().is_punct("%")) {
        advance();
        e = binary(std::move(e), "%", parse_unary());
      } else {
        break;
      }
    }
    return e;
  }

  ExprPtr parse_unary() {
    if (lambda_ahead()) return parse_lambda();  // e.g. a cast operand
    SourcePosition start = cur().pos;
    for (const char* op : {"+", "-", "!", "~", "++", "--"}) {
      if (cur().is_punct(op)) {
        advance();
        UnaryExpr u;
        u.op = op;
        u.prefix = true;
        u.operand = parse_unary();
        return make_expr(start, std::move(u));
      }
    }
    if (cur().is_punct("(")) {
      if (auto cast = try_parse_cast()) return cast;
    }
    return parse_postfix();
  }

  ExprPtr try_parse_cast() {
    Mark m = mark();
    SourcePosition start = cur().pos;
    advance();  // '('
    auto ty = speculate([&] {
      TypeRef t = parse_type();
      while (accept_punct("&")) {  // intersection cast
        TypeRef extra = parse_type();
        t.text += " & " + extra.text;
      }
      return t;
    });
    if (!ty || !cur().is_punct(")")) {
      rewind(m);
      return nullptr;
    }
    advance();  // ')'
    bool primitive = ty->array_dims == 0 && is_primitive_type_name(ty->name);
    const Token& next = cur();
    bool castable =
        next.is_ident() || next.kind == TokenKind::IntLiteral ||
        next.kind == TokenKind::FloatLiteral ||
        next.kind == TokenKind::CharLiteral ||
        next.kind == TokenKind::StringLiteral || next.is_punct("(") ||
        next.is_punct("!") || next.is_punct("~") || next.is_kw("this") ||
        next.is_kw("super") || next.is_kw("new") || next.is_kw("switch") ||
        next.is_kw("true") || next.is_kw("false") || next.is_kw("null");
    if (!castable && primitive)
      castable = next.is_punct("+") || next.is_punct("-") ||
                 next.is_punct("++") || next.is_punct("--");
    if (!castable) {
      rewind(m);
      return nullptr;
    }
    CastExpr c;
    c.type = std::move(*ty);
    c.operand = parse_unary();
    return make_expr(start, std::move(c));
  }

  ExprPtr parse_postfix() {
    ExprPtr e = parse_primary();
    e = parse_selectors(std::move(e));
    for (;;) {
      if (cur().is_punct("++") || cur().is_punct("--")) {
        SourcePosition start = e->span.begin;
        UnaryExpr u;
        u.op = cur().text;
        u.prefix = false;
        advance();
        u.operand = std::move(e);
        e = make_expr(start, std::move(u));
        continue;
      }
      break;
    }
    return e;
  }

  void parse_args(std::vector<ExprPtr>& out) {
    expect_punct("(");
    if (!cur().is_punct(")")) {
      do {
        out.push_back(parse_expression());
      } while (accept_punct(","));
    }
    expect_punct(")");
  }

  // Dotted text of a name chain; empty when the expression is not a chain.
  static std::string name_chain_text(const Expr& e) {
    if (const auto* n = e.as<NameRefExpr>()) return n->name;
    if (const auto* f = e.as<FieldAccessExpr>()) {
      std::string base = name_chain_text(*f->target);
      if (base.empty()) return "";
      return base + "." + f->name;
    }
    return "";
  }

  // Variable access (ExpressionName or FieldAccess, possibly via this);
  // empty when the expression has any other shape.
  static std::string resource_access_text(const Expr& e) {
    if (const auto* n = e.as<NameRefExpr>()) return n->name;
    if (e.is<ThisExpr>() && e.as<ThisExpr>()->qualifier.empty()) return "this";
    if (const auto* f = e.as<FieldAccessExpr>()) {
      std::string base = resource_access_text(*f->target);
      if (base.empty()) return "";
      return base + "." + f->name;
    }
    return "";
  }

  ExprPtr parse_primary() {
    SourcePosition start = cur().pos;
    const Token& t = cur();
    switch (t.kind) {
      case TokenKind::IntLiteral: {
        LiteralExpr l{LiteralKind::Int, t.text};
        advance();
        return make_expr(start, std::move(l));
      }
      case TokenKind::FloatLiteral: {
        LiteralExpr l{LiteralKind::Float, t.text};
        advance();
        return make_expr(start, std::move(l));
      }
      case TokenKind::CharLiteral: {
        LiteralExpr l{LiteralKind::Char, t.text};
        advance();
        return make_expr(start, std::move(l));
      }
      case TokenKind::StringLiteral: {
        LiteralExpr l{t.text_block ? LiteralKind::TextBlock : LiteralKind::String,
                      t.text};
        advance();
        return make_expr(start, std::move(l));
      }
      default:
        break;
    }
    if (t.is_kw("true") || t.is_kw("false")) {
      LiteralExpr l{LiteralKind::Bool, t.text};
      advance();
      return make_expr(start, std::move(l));
    }
    if (t.is_kw("null")) {
      LiteralExpr l{LiteralKind::Null, "null"};
      advance();
      return make_expr(start, std::move(l));
    }
    if (t.is_kw("this")) {
      advance();
      if (cur().is_punct("(")) {  // constructor delegation this(...)
        MethodCallExpr call;
        call.name = "this";
        parse_args(call.args);
        return make_expr(start, std::move(call));
      }
      return make_expr(start, ThisExpr{});
    }
    if (t.is_kw("super")) {
      advance();
      if (cur().is_punct("(")) {  // super constructor call
        MethodCallExpr call;
        call.name = "super";
        parse_args(call.args);
        return make_expr(start, std::move(call));
      }
      return make_expr(start, SuperExpr{});
    }
    if (t.is_kw("new")) return parse_creation(start, nullptr);
    if (t.is_kw("switch")) {
      SwitchExprExpr sw;
      parse_switch_body(sw.selector, sw.cases);
      return make_expr(start, std::move(sw));
    }
    if (t.kind == TokenKind::Keyword &&
        (is_primitive_type_name(t.text) || t.text == "void")) {
      // Primitive class literal: int.class, int[].class, void.class.
      std::string text = t.text;
      advance();
      while (cur().is_punct("[") && peek().is_punct("]")) {
        advance();
        advance();
        text += "[]";
      }
      if (cur().is_punct("::")) {  // e.g. int[]::new
        advance();
        MethodRefExpr r;
        r.type_text = text;
        if (cur().is_kw("new")) {
          r.name = "new";
          advance();
        } else {
          r.name = expect_ident();
        }
        return make_expr(start, std::move(r));
      }
      expect_punct(".");
      expect_kw("class");
      return make_expr(start, ClassLiteralExpr{text + ".class"});
    }
    if (t.is_punct("(")) {
      advance();
      ParenExpr p;
      p.inner = parse_expression();
      expect_punct(")");
      return make_expr(start, std::move(p));
    }
    if (t.is_ident()) {
      NameRefExpr n{t.text};
      advance();
      return make_expr(start, std::move(n));
    }
    fail("expected expression");
  }

  ExprPtr parse_creation(SourcePosition start, ExprPtr outer) {
    expect_kw("new");
    if (cur().is_punct("<")) capture_type_args();  // constructor type witness
    TypeRef base = parse_type(/*allow_dims=*/false);
    if (cur().is_punct("(")) {
      ObjectCreationExpr oc;
      oc.outer = std::move(outer);
      oc.type = std::move(base);
      parse_args(oc.args);
      if (cur().is_punct("{")) {
        auto body = std::make_unique<TypeDecl>();
        body->kind = TypeKind::Class;
        SourcePosition bstart = cur().pos;
        parse_class_body(*body);
        body->span = span_from(bstart);
        oc.anon_body = std::move(body);
      }
      return make_expr(start, std::move(oc));
    }
    ArrayCreationExpr ac;
    ac.element_type = std::move(base);
    bool saw_empty = false;
    while (cur().is_punct("[")) {
      advance();
      if (cur().is_punct("]")) {
        advance();
        ++ac.extra_dims;
        saw_empty = true;
      } else {
        if (saw_empty) fail("sized dimension after empty dimension");
        ac.dim_exprs.push_back(parse_expression());
        expect_punct("]");
      }
    }
    if (ac.dim_exprs.empty() && ac.extra_dims == 0)
      fail("expected '(' or '[' after new");
    if (cur().is_punct("{")) ac.init = parse_array_init();
    return make_expr(start, std::move(ac));
  }

  ExprPtr parse_selectors(ExprPtr e) {
    for (;;) {
      SourcePosition start = e->span.begin;
      if (cur().is_punct(".")) {
        if (peek().is_kw("class")) {
          // Type.class via a name chain; dims were handled before.
          std::string text = name_chain_text(*e);
          if (text.empty()) fail("malformed class literal");
          advance();
          advance();
          e = make_expr(start, ClassLiteralExpr{text + ".class"});
          continue;
        }
        if (peek().is_kw("this")) {
          std::string q = name_chain_text(*e);
          advance();
          advance();
          e = make_expr(start, ThisExpr{q});
          continue;
        }
        if (peek().is_kw("new")) {
          advance();
          e = parse_creation(start, std::move(e));
          continue;
        }
        if (peek().is_kw("super")) {
          advance();
          advance();
          FieldAccessExpr fa;
          fa.target = std::move(e);
          fa.name = "super";
          e = make_expr(start, std::move(fa));
          continue;
        }
        if (peek().is_punct("<")) {
          advance();
          MethodCallExpr call;
          call.receiver = std::move(e);
          call.type_args_text = capture_type_args();
          call.name = expect_ident();
          parse_args(call.args);
          e = make_expr(start, std::move(call));
          continue;
        }
        if (peek().is_ident()) {
          advance();
          std::string name = expect_ident();
          if (cur().is_punct("(")) {
            MethodCallExpr call;
            call.receiver = std::move(e);
            call.name = std::move(name);
            parse_args(call.args);
            e = make_expr(start, std::move(call));
          } else {
            FieldAccessExpr fa;
            fa.target = std::move(e);
            fa.name = std::move(name);
            e = make_expr(start, std::move(fa));
          }
          continue;
        }
        fail("expected member name after '.'");
      }
      if (cur().is_punct("[")) {
        if (peek().is_punct("]")) {
          // Name[].class / Name[]::new forms.
          std::string text = name_chain_text(*e);
          if (text.empty()) fail("unexpected '[]'");
          while (cur().is_punct("[") && peek().is_punct("]")) {
            advance();
            advance();
            text += "[]";
          }
          if (cur().is_punct("::")) {
            advance();
            MethodRefExpr r;
            r.type_text = text;
            if (cur().is_kw("new")) {
              r.name = "new";
              advance();
            } else {
              r.name = expect_ident();
            }
            e = make_expr(start, std::move(r));
            continue;
          }
          expect_punct(".");
          expect_kw("class");
          e = make_expr(start, ClassLiteralExpr{text + ".class"});
          continue;
        }
        advance();
        ArrayAccessExpr a;
        a.array = std::move(e);
        a.index = parse_expression();
        expect_punct("]");
        e = make_expr(start, std::move(a));
        continue;
      }
      if (cur().is_punct("::")) {
        advance();
        MethodRefExpr r;
        if (cur().is_kw("new")) {
          r.name = "new";
          advance();
        } else {
          if (cur().is_punct("<")) capture_type_args();
          r.name = expect_ident();
        }
        r.qualifier = std::move(e);
        e = make_expr(start, std::move(r));
        continue;
      }
      if (cur().is_punct("(") && e->is<NameRefExpr>()) {
        MethodCallExpr call;
        call.name = e->as<NameRefExpr>()->name;
        SourcePosition s2 = e->span.begin;
        parse_args(call.args);
        e = make_expr(s2, std::move(call));
        continue;
      }
      return e;
    }
  }
};

// Counts physical lines: newline-separated, with a trailing partial line
// counting as one.
inline int count_lines(const std::string& text) {
  if (text.empty()) return 0;
  int lines = 0;
  for (char c : text)
    if (c == '\n') ++lines;
  if (text.back() != '\n') ++lines;
  return lines;
}

// Parses one Java source file. Never throws: syntactically invalid input
// yields a unit with Failed status carrying the first error position.
inline CompilationUnit parse_compilation_unit(const std::string& text,
                                              const std::string& path) {
  CompilationUnit unit;
  unit.path = path;
  std::string clean;
  if (!utf8_sanitize(text, clean))
    unit.warnings.push_back(path + ": invalid UTF-8 byte sequence replaced");
  unit.line_count = count_lines(clean);
  try {
    Lexer lexer(clean);
    Parser parser(lexer.lex(), path);
    parser.parse_into(unit);
    unit.status = UnitStatus::Parsed;
  } catch (const SyntaxError& e) {
    unit.types.clear();
    unit.status = UnitStatus::Failed;
    unit.error_message = e.what();
    unit.error_position = e.position;
  } catch (const std::exception& e) {
    unit.types.clear();
    unit.status = UnitStatus::Failed;
    unit.error_message = e.what();
    unit.error_position = {1, 1};
  }
  return unit;
}

}  // namespace perfume
