#pragma once

#include <functional>
#include <string>
#include <vector>

#include "perfume/source/ast.hpp"
#include "perfume/source/printer.hpp"

namespace perfume {

// Recursive traversal over statements and expressions. Lambda bodies are
// executable code of the enclosing member and are entered by default;
// anonymous class bodies declare members of their own, so entering them is
// the caller's choice.
class AstWalker {
 public:
  std::function<void(const Stmt&)> on_stmt;
  std::function<void(const Expr&)> on_expr;
  bool into_lambdas = true;
  bool into_anonymous = false;

  void walk(const std::vector<StmtPtr>& stmts) {
    for (const auto& s : stmts) walk_stmt(*s);
  }

  void walk_stmt(const Stmt& s) {
    if (on_stmt) on_stmt(s);
    std::visit(detail::overloaded{
                   [&](const LocalVarDeclStmt& d) {
                     for (const auto& v : d.declarators)
                       if (v.init) walk_expr(*v.init);
                   },
                   [&](const LocalTypeDeclStmt& d) { walk_type_bodies(*d.decl); },
                   [&](const ExprStmt& e) { walk_expr(*e.expr); },
                   [&](const BlockStmt& b) { walk(b.stmts); },
                   [&](const IfStmt& i) {
                     walk_expr(*i.cond);
                     walk_stmt(*i.then_branch);
                     if (i.else_branch) walk_stmt(*i.else_branch);
                   },
                   [&](const WhileStmt& w) {
                     walk_expr(*w.cond);
                     walk_stmt(*w.body);
                   },
                   [&](const DoWhileStmt& d) {
                     walk_stmt(*d.body);
                     walk_expr(*d.cond);
                   },
                   [&](const ForClassicStmt& f) {
                     walk(f.init);
                     if (f.cond) walk_expr(*f.cond);
                     for (const auto& u : f.update) walk_expr(*u);
                     walk_stmt(*f.body);
                   },
                   [&](const ForEachStmt& f) {
                     walk_expr(*f.iterable);
                     walk_stmt(*f.body);
                   },
                   [&](const SwitchStmt& sw) {
                     walk_expr(*sw.selector);
                     walk_cases(sw.cases);
                   },
                   [&](const TryStmt& t) {
                     for (const auto& r : t.resources)
                       if (r.init) walk_expr(*r.init);
                     walk(t.body);
                     for (const auto& c : t.catches) walk(c.body);
                     walk(t.finally_body);
                   },
                   [&](const ThrowStmt& t) { walk_expr(*t.expr); },
                   [&](const ReturnStmt& r) {
                     if (r.expr) walk_expr(*r.expr);
                   },
                   [&](const BreakStmt&) {},
                   [&](const ContinueStmt&) {},
                   [&](const YieldStmt& y) { walk_expr(*y.expr); },
                   [&](const AssertStmt& a) {
                     walk_expr(*a.condition);
                     if (a.message) walk_expr(*a.message);
                   },
                   [&](const SynchronizedStmt& sy) {
                     walk_expr(*sy.lock);
                     walk(sy.body);
                   },
                   [&](const LabeledStmt& l) { walk_stmt(*l.stmt); },
                   [&](const EmptyStmt&) {},
               },
               s.node);
  }

  void walk_expr(const Expr& e) {
    if (on_expr) on_expr(e);
    std::visit(detail::overloaded{
                   [&](const LiteralExpr&) {},
                   [&](const NameRefExpr&) {},
                   [&](const ThisExpr&) {},
                   [&](const SuperExpr&) {},
                   [&](const FieldAccessExpr& f) { walk_expr(*f.target); },
                   [&](const ClassLiteralExpr&) {},
                   [&](const MethodCallExpr& m) {
                     if (m.receiver) walk_expr(*m.receiver);
                     for (const auto& a : m.args) walk_expr(*a);
                   },
                   [&](const ObjectCreationExpr& oc) {
                     if (oc.outer) walk_expr(*oc.outer);
                     for (const auto& a : oc.args) walk_expr(*a);
                     if (oc.anon_body && into_anonymous)
                       walk_type_bodies(*oc.anon_body);
                   },
                   [&](const ArrayCreationExpr& a) {
                     for (const auto& d : a.dim_exprs) walk_expr(*d);
                     if (a.init) walk_expr(*a.init);
                   },
                   [&](const ArrayInitExpr& a) {
                     for (const auto& el : a.elements) walk_expr(*el);
                   },
                   [&](const ArrayAccessExpr& a) {
                     walk_expr(*a.array);
                     walk_expr(*a.index);
                   },
                   [&](const UnaryExpr& u) { walk_expr(*u.operand); },
                   [&](const BinaryExpr& b) {
                     walk_expr(*b.lhs);
                     walk_expr(*b.rhs);
                   },
                   [&](const AssignExpr& a) {
                     walk_expr(*a.target);
                     walk_expr(*a.value);
                   },
                   [&](const TernaryExpr& t) {
                     walk_expr(*t.cond);
                     walk_expr(*t.then_value);
                     walk_expr(*t.else_value);
                   },
                   [&](const CastExpr& c) { walk_expr(*c.operand); },
                   [&](const InstanceOfExpr& io) { walk_expr(*io.operand); },
                   [&](const LambdaExpr& l) {
                     if (!into_lambdas) return;
                     if (l.has_block) walk(l.body_block);
                     else walk_expr(*l.body_expr);
                   },
                   [&](const MethodRefExpr& r) {
                     if (r.qualifier) walk_expr(*r.qualifier);
                   },
                   [&](const SwitchExprExpr& sw) {
                     walk_expr(*sw.selector);
                     walk_cases(sw.cases);
                   },
                   [&](const ParenExpr& p) { walk_expr(*p.inner); },
               },
               e.node);
  }

 private:
  void walk_cases(const std::vector<SwitchCase>& cases) {
    for (const auto& c : cases) {
      for (const auto& l : c.labels) walk_expr(*l);
      walk(c.body);
    }
  }

  // Executable bodies of a nested declaration (anonymous classes, local
  // classes, enum constant bodies).
  void walk_type_bodies(const TypeDecl& t) {
    for (const auto& m : t.members) {
      std::visit(detail::overloaded{
                     [&](const FieldDecl& f) {
                       if (f.init) walk_expr(*f.init);
                     },
                     [&](const MethodDecl& md) { walk(md.body); },
                     [&](const ConstructorDecl& c) { walk(c.body); },
                     [&](const InitializerBlock& b) { walk(b.body); },
                     [&](const TypeDeclPtr& nested) { walk_type_bodies(*nested); },
                 },
                 m);
    }
    for (const auto& c : t.enum_constants) {
      for (const auto& a : c.args) walk_expr(*a);
      if (c.body) walk_type_bodies(*c.body);
    }
  }
};

// All named type declarations of a unit, nested ones included.
inline void collect_named_types(const TypeDecl& decl,
                                std::vector<const TypeDecl*>& out) {
  if (!decl.name.empty()) out.push_back(&decl);
  for (const auto* nested : decl.nested_types()) collect_named_types(*nested, out);
}

inline std::vector<const TypeDecl*> named_types(const CompilationUnit& unit) {
  std::vector<const TypeDecl*> out;
  for (const auto& t : unit.types) collect_named_types(*t, out);
  return out;
}

// Element path strings for findings.
inline std::string element_of(const TypeDecl& type) { return type.path(); }

inline std::string params_signature(const std::vector<Param>& params) {
  std::string s = "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) s += ",";
    s += params[i].type.name;
    for (int k = 0; k < params[i].type.array_dims; ++k) s += "[]";
    if (params[i].is_varargs) s += "...";
  }
  return s + ")";
}

inline std::string element_of(const TypeDecl& type, const MethodDecl& m) {
  return type.path() + "#" + m.name + params_signature(m.params);
}

inline std::string element_of(const TypeDecl& type, const ConstructorDecl& c) {
  return type.path() + "#" + c.name + params_signature(c.params);
}

// One executable region with its element path: a member body or a field
// initializer expression.
struct ExecutableBody {
  std::string element;
  const std::vector<StmtPtr>* stmts = nullptr;
  const Expr* init_expr = nullptr;
};

inline void collect_executable_bodies(const TypeDecl& type,
                                      std::vector<ExecutableBody>& out) {
  for (const auto& m : type.members) {
    std::visit(detail::overloaded{
                   [&](const FieldDecl& f) {
                     if (f.init)
                       out.push_back({type.path() + "#" + f.name, nullptr,
                                      f.init.get()});
                   },
                   [&](const MethodDecl& md) {
                     if (md.has_body)
                       out.push_back({element_of(type, md), &md.body, nullptr});
                   },
                   [&](const ConstructorDecl& c) {
                     out.push_back({element_of(type, c), &c.body, nullptr});
                   },
                   [&](const InitializerBlock& b) {
                     out.push_back({type.path() + "#<initializer>", &b.body,
                                    nullptr});
                   },
                   [&](const TypeDeclPtr&) {},  // named nested types visited separately
               },
               m);
  }
  for (const auto& c : type.enum_constants) {
    if (!c.body) continue;
    for (const auto& m : c.body->members) {
      if (const auto* md = std::get_if<MethodDecl>(&m)) {
        if (md->has_body)
          out.push_back({type.path() + "." + c.name + "#" + md->name +
                             params_signature(md->params),
                         &md->body, nullptr});
      }
    }
  }
}

}  // namespace perfume
