#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "perfume/source/position.hpp"

namespace perfume {

struct Expr;
struct Stmt;
struct TypeDecl;
using ExprPtr = std::unique_ptr<Expr>;
using StmtPtr = std::unique_ptr<Stmt>;
using TypeDeclPtr = std::unique_ptr<TypeDecl>;

// ---------------------------------------------------------------------------
// Shared pieces
// ---------------------------------------------------------------------------

enum class Modifier : std::uint32_t {
  Public = 1u << 0,
  Protected = 1u << 1,
  Private = 1u << 2,
  Static = 1u << 3,
  Final = 1u << 4,
  Abstract = 1u << 5,
  Synchronized = 1u << 6,
  Native = 1u << 7,
  Strictfp = 1u << 8,
  Transient = 1u << 9,
  Volatile = 1u << 10,
  Default = 1u << 11,
  Sealed = 1u << 12,
  NonSealed = 1u << 13,
};

struct Modifiers {
  std::uint32_t bits = 0;

  bool has(Modifier m) const { return bits & static_cast<std::uint32_t>(m); }
  void add(Modifier m) { bits |= static_cast<std::uint32_t>(m); }
  friend bool operator==(const Modifiers&, const Modifiers&) = default;
};

struct Annotation {
  std::string name;  // dotted name as written, e.g. "Override" or "org.junit.jupiter.api.Test"
  std::string args_text;  // raw argument text including parens, empty if absent
  SourceSpan span;

  std::string simple_name() const {
    auto dot = name.rfind('.');
    return dot == std::string::npos ? name : name.substr(dot + 1);
  }
};

// A type as written in source. `name` is the dotted raw name with type
// arguments stripped; `text` keeps arguments, so "EnumMap<Player, Pits>"
// has name "EnumMap". Array dimensions are held separately.
struct TypeRef {
  std::string name;
  std::string text;
  int array_dims = 0;
  SourceSpan span;

  std::string simple_name() const {
    auto dot = name.rfind('.');
    return dot == std::string::npos ? name : name.substr(dot + 1);
  }
  std::string display() const {
    std::string s = text;
    for (int k = 0; k < array_dims; ++k) s += "[]";
    return s;
  }
};

inline bool is_primitive_type_name(const std::string& n) {
  return n == "boolean" || n == "byte" || n == "short" || n == "int" ||
         n == "long" || n == "char" || n == "float" || n == "double";
}

struct Param {
  TypeRef type;  // for varargs this is the element type as declared
  bool is_varargs = false;
  bool is_final = false;
  std::vector<Annotation> annotations;
  std::string name;
  SourceSpan span;

  // Whether the declared base/element type is a Java primitive keyword.
  bool is_primitive() const {
    return type.array_dims == 0 && is_primitive_type_name(type.name);
  }
  std::string element_type_name() const { return type.name; }
  std::string display_type() const {
    return type.display() + (is_varargs ? "..." : "");
  }
};

// ---------------------------------------------------------------------------
// Expressions
// ---------------------------------------------------------------------------

enum class LiteralKind { Int, Float, Char, String, TextBlock, Bool, Null };

struct LiteralExpr {
  LiteralKind kind;
  std::string text;  // verbatim token text, "true"/"false"/"null" included

  bool is_null() const { return kind == LiteralKind::Null; }
  bool is_true() const { return kind == LiteralKind::Bool && text == "true"; }
};

struct NameRefExpr {
  std::string name;
};

struct ThisExpr {
  std::string qualifier;  // "Outer" for Outer.this, usually empty
};

struct SuperExpr {};

struct FieldAccessExpr {
  ExprPtr target;
  std::string name;
};

struct ClassLiteralExpr {
  std::string type_text;  // "Player", "int[]", ...
};

struct MethodCallExpr {
  ExprPtr receiver;  // null for unqualified calls
  std::string type_args_text;
  std::string name;
  std::vector<ExprPtr> args;
};

struct ObjectCreationExpr {
  ExprPtr outer;  // qualifier of outer.new Inner(), usually null
  TypeRef type;
  std::vector<ExprPtr> args;
  TypeDeclPtr anon_body;  // anonymous class body, null if absent
};

struct ArrayCreationExpr {
  TypeRef element_type;
  std::vector<ExprPtr> dim_exprs;  // sized dimensions, may be empty
  int extra_dims = 0;              // additional empty [] pairs
  ExprPtr init;                    // ArrayInitExpr or null
};

struct ArrayInitExpr {
  std::vector<ExprPtr> elements;
};

struct ArrayAccessExpr {
  ExprPtr array;
  ExprPtr index;
};

struct UnaryExpr {
  std::string op;
  bool prefix = true;
  ExprPtr operand;
};

struct BinaryExpr {
  std::string op;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct AssignExpr {
  std::string op;  // "=", "+=", ...
  ExprPtr target;
  ExprPtr value;
};

struct TernaryExpr {
  ExprPtr cond;
  ExprPtr then_value;
  ExprPtr else_value;
};

struct CastExpr {
  TypeRef type;
  ExprPtr operand;
};

struct InstanceOfExpr {
  ExprPtr operand;
  TypeRef type;
  std::string binding;  // pattern variable, empty when absent
};

struct LambdaExpr {
  std::vector<Param> params;  // untyped params carry empty type names
  bool parenthesized = false;
  ExprPtr body_expr;             // one of body_expr / body_block is set
  std::vector<StmtPtr> body_block;
  bool has_block = false;
};

struct MethodRefExpr {
  ExprPtr qualifier;      // expression form, or null
  std::string type_text;  // type form, e.g. "String[]" for String[]::new
  std::string name;       // method name or "new"
};

struct SwitchCase {
  bool is_default = false;       // true when labels include `default`
  std::vector<ExprPtr> labels;   // case label expressions
  bool arrow = false;
  std::vector<StmtPtr> body;
  SourceSpan span;
};

struct SwitchExprExpr {
  ExprPtr selector;
  std::vector<SwitchCase> cases;

  bool has_default() const;
};

struct ParenExpr {
  ExprPtr inner;
};

struct Expr {
  SourceSpan span;
  std::variant<LiteralExpr, NameRefExpr, ThisExpr, SuperExpr, FieldAccessExpr,
               ClassLiteralExpr, MethodCallExpr, ObjectCreationExpr,
               ArrayCreationExpr, ArrayInitExpr, ArrayAccessExpr, UnaryExpr,
               BinaryExpr, AssignExpr, TernaryExpr, CastExpr, InstanceOfExpr,
               LambdaExpr, MethodRefExpr, SwitchExprExpr, ParenExpr>
      node;

  template <typename T>
  const T* as() const {
    return std::get_if<T>(&node);
  }
  template <typename T>
  bool is() const {
    return std::holds_alternative<T>(node);
  }
};

// Unwraps redundant parentheses: ((x)) -> x.
inline const Expr& strip_parens(const Expr& e) {
  const Expr* p = &e;
  while (const auto* paren = p->as<ParenExpr>()) p = paren->inner.get();
  return *p;
}

inline bool SwitchExprExpr::has_default() const {
  for (const auto& c : cases)
    if (c.is_default) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Statements
// ---------------------------------------------------------------------------

struct VarDeclarator {
  std::string name;
  int extra_dims = 0;
  ExprPtr init;  // null when absent
  SourceSpan span;
};

struct LocalVarDeclStmt {
  bool is_final = false;
  std::vector<Annotation> annotations;
  TypeRef type;  // name "var" for inferred locals
  std::vector<VarDeclarator> declarators;
};

struct LocalTypeDeclStmt {
  TypeDeclPtr decl;
};

struct ExprStmt {
  ExprPtr expr;
};

struct BlockStmt {
  std::vector<StmtPtr> stmts;
};

struct IfStmt {
  ExprPtr cond;
  StmtPtr then_branch;
  StmtPtr else_branch;  // null when absent
};

struct WhileStmt {
  ExprPtr cond;
  StmtPtr body;
};

struct DoWhileStmt {
  StmtPtr body;
  ExprPtr cond;
};

struct ForClassicStmt {
  std::vector<StmtPtr> init;     // one LocalVarDeclStmt or ExprStmts
  ExprPtr cond;                  // null when absent
  std::vector<ExprPtr> update;
  StmtPtr body;
};

struct ForEachStmt {
  bool is_final = false;
  TypeRef type;
  std::string var_name;
  ExprPtr iterable;
  StmtPtr body;
};

struct SwitchStmt {
  ExprPtr selector;
  std::vector<SwitchCase> cases;

  bool has_default() const {
    for (const auto& c : cases)
      if (c.is_default) return true;
    return false;
  }
};

struct TryResource {
  bool is_final = false;
  TypeRef type;       // empty name for bare-identifier resources
  std::string name;   // variable name or the identifier text
  ExprPtr init;       // null for bare identifiers
  SourceSpan span;
};

struct CatchClause {
  std::vector<TypeRef> types;  // multi-catch alternatives
  std::string name;
  std::vector<StmtPtr> body;
  SourceSpan span;
};

struct TryStmt {
  std::vector<TryResource> resources;
  std::vector<StmtPtr> body;
  std::vector<CatchClause> catches;
  std::vector<StmtPtr> finally_body;
  bool has_finally = false;

  std::size_t resource_count() const { return resources.size(); }
};

struct ThrowStmt {
  ExprPtr expr;
};

struct ReturnStmt {
  ExprPtr expr;  // null for bare return
};

struct BreakStmt {
  std::string label;
};

struct ContinueStmt {
  std::string label;
};

struct YieldStmt {
  ExprPtr expr;
};

struct AssertStmt {
  ExprPtr condition;
  ExprPtr message;  // null when absent

  bool has_message() const { return message != nullptr; }
};

struct SynchronizedStmt {
  ExprPtr lock;
  std::vector<StmtPtr> body;
};

struct LabeledStmt {
  std::string label;
  StmtPtr stmt;
};

struct EmptyStmt {};

struct Stmt {
  SourceSpan span;
  std::variant<LocalVarDeclStmt, LocalTypeDeclStmt, ExprStmt, BlockStmt,
               IfStmt, WhileStmt, DoWhileStmt, ForClassicStmt, ForEachStmt,
               SwitchStmt, TryStmt, ThrowStmt, ReturnStmt, BreakStmt,
               ContinueStmt, YieldStmt, AssertStmt, SynchronizedStmt,
               LabeledStmt, EmptyStmt>
      node;

  template <typename T>
  const T* as() const {
    return std::get_if<T>(&node);
  }
  template <typename T>
  bool is() const {
    return std::holds_alternative<T>(node);
  }
};

// ---------------------------------------------------------------------------
// Declarations
// ---------------------------------------------------------------------------

struct FieldDecl {
  Modifiers modifiers;
  std::vector<Annotation> annotations;
  TypeRef type;
  std::string name;
  int extra_dims = 0;
  ExprPtr init;  // null when absent
  SourceSpan span;

  bool is_static() const { return modifiers.has(Modifier::Static); }
};

struct MethodDecl {
  Modifiers modifiers;
  std::vector<Annotation> annotations;
  std::string type_params_text;  // "<T>" etc., empty if absent
  TypeRef return_type;           // name "void" for void methods
  std::string name;
  std::vector<Param> params;
  int extra_dims = 0;  // legacy `int foo()[]` dimensions
  std::vector<TypeRef> throws_list;
  std::vector<StmtPtr> body;  // empty for abstract/native, see has_body
  bool has_body = false;
  std::string default_value_text;  // annotation member default, raw text
  SourceSpan span;

  bool is_private() const { return modifiers.has(Modifier::Private); }
  bool is_public() const { return modifiers.has(Modifier::Public); }
  bool is_static() const { return modifiers.has(Modifier::Static); }
  bool is_synchronized() const { return modifiers.has(Modifier::Synchronized); }
};

struct ConstructorDecl {
  Modifiers modifiers;
  std::vector<Annotation> annotations;
  std::string type_params_text;
  std::string name;  // equals the enclosing type name
  std::vector<Param> params;
  std::vector<TypeRef> throws_list;
  std::vector<StmtPtr> body;
  bool is_compact = false;  // record compact constructor
  SourceSpan span;

  bool is_private() const { return modifiers.has(Modifier::Private); }
};

struct InitializerBlock {
  bool is_static = false;
  std::vector<StmtPtr> body;
  SourceSpan span;
};

struct EnumConstant {
  std::vector<Annotation> annotations;
  std::string name;
  std::vector<ExprPtr> args;
  TypeDeclPtr body;  // anonymous constant body, null if absent
  SourceSpan span;
};

using Member = std::variant<FieldDecl, MethodDecl, ConstructorDecl,
                            InitializerBlock, TypeDeclPtr>;

enum class TypeKind { Class, Interface, Enum, Record, AnnotationType };

inline const char* to_string(TypeKind k) {
  switch (k) {
    case TypeKind::Class: return "class";
    case TypeKind::Interface: return "interface";
    case TypeKind::Enum: return "enum";
    case TypeKind::Record: return "record";
    case TypeKind::AnnotationType: return "@interface";
  }
  return "?";
}

struct TypeDecl {
  TypeKind kind = TypeKind::Class;
  Modifiers modifiers;
  std::vector<Annotation> annotations;
  std::string name;  // empty for anonymous class bodies
  std::string type_params_text;
  std::optional<TypeRef> extends_type;   // superclass (classes only)
  std::vector<TypeRef> implements_list;  // interface extends list for interfaces
  std::vector<TypeRef> permits_list;
  std::vector<Param> record_components;
  std::vector<EnumConstant> enum_constants;
  std::vector<Member> members;
  std::string enclosing_path;  // "Outer" or "Outer.Inner", empty at top level
  SourceSpan span;

  std::string path() const {
    return enclosing_path.empty() ? name : enclosing_path + "." + name;
  }
  bool is_public() const { return modifiers.has(Modifier::Public); }

  std::vector<const MethodDecl*> methods() const {
    std::vector<const MethodDecl*> out;
    for (const auto& m : members)
      if (const auto* md = std::get_if<MethodDecl>(&m)) out.push_back(md);
    return out;
  }
  std::vector<const ConstructorDecl*> constructors() const {
    std::vector<const ConstructorDecl*> out;
    for (const auto& m : members)
      if (const auto* cd = std::get_if<ConstructorDecl>(&m)) out.push_back(cd);
    return out;
  }
  std::vector<const FieldDecl*> fields() const {
    std::vector<const FieldDecl*> out;
    for (const auto& m : members)
      if (const auto* fd = std::get_if<FieldDecl>(&m)) out.push_back(fd);
    return out;
  }
  std::vector<const TypeDecl*> nested_types() const {
    std::vector<const TypeDecl*> out;
    for (const auto& m : members)
      if (const auto* td = std::get_if<TypeDeclPtr>(&m)) out.push_back(td->get());
    return out;
  }
};

// ---------------------------------------------------------------------------
// Compilation unit
// ---------------------------------------------------------------------------

struct ImportDecl {
  std::string name;  // dotted name without trailing ".*"
  bool is_static = false;
  bool is_wildcard = false;
  SourceSpan span;
};

enum class UnitStatus { Parsed, Failed };

struct CompilationUnit {
  std::string path;  // relative path with '/' separators
  UnitStatus status = UnitStatus::Parsed;
  std::string error_message;       // set when status == Failed
  SourcePosition error_position;   // set when status == Failed
  std::string package_name;        // empty for the default package
  std::vector<ImportDecl> imports;
  std::vector<TypeDeclPtr> types;
  int line_count = 0;
  std::vector<std::string> warnings;  // e.g. invalid UTF-8 replacement

  bool parsed() const { return status == UnitStatus::Parsed; }
};

}  // namespace perfume
