#pragma once

#include <sstream>
#include <string>

#include "perfume/source/ast.hpp"
#include "perfume/source/printer.hpp"

namespace perfume {

// S-expression dump of a parsed unit. With spans disabled, two dumps are
// equal iff the trees are structurally identical, which is what the
// parse/print round-trip and purity checks compare.
class StructureDump {
 public:
  explicit StructureDump(bool with_spans = false) : spans_(with_spans) {}

  std::string dump(const CompilationUnit& unit) {
    out_.str("");
    out_ << "(unit";
    if (unit.status == UnitStatus::Failed) {
      out_ << " failed \"" << unit.error_message << "\")";
      return out_.str();
    }
    if (!unit.package_name.empty()) out_ << " pkg=" << unit.package_name;
    for (const auto& imp : unit.imports) {
      out_ << " (import";
      if (imp.is_static) out_ << " static";
      out_ << " " << imp.name;
      if (imp.is_wildcard) out_ << ".*";
      out_ << ")";
    }
    for (const auto& t : unit.types) type(*t);
    out_ << ")";
    return out_.str();
  }

 private:
  std::ostringstream out_;
  bool spans_;

  void span(const SourceSpan& s) {
    if (spans_)
      out_ << "@" << s.begin.line << ":" << s.begin.column << "-" << s.end.line
           << ":" << s.end.column;
  }

  void mods(const Modifiers& m) {
    if (m.bits) out_ << " mods=" << m.bits;
  }

  void annos(const std::vector<Annotation>& as) {
    for (const auto& a : as) {
      out_ << " (anno " << a.name;
      if (!a.args_text.empty()) out_ << " " << a.args_text;
      out_ << ")";
    }
  }

  void type_ref(const TypeRef& t) {
    out_ << t.text;
    for (int i = 0; i < t.array_dims; ++i) out_ << "[]";
  }

  void param(const Param& p) {
    out_ << " (param ";
    annos(p.annotations);
    if (p.is_final) out_ << "final ";
    type_ref(p.type);
    if (p.is_varargs) out_ << "...";
    out_ << " " << p.name << ")";
  }

  void type(const TypeDecl& t) {
    out_ << " (" << to_string(t.kind) << " " << (t.name.empty() ? "<anon>" : t.name);
    span(t.span);
    mods(t.modifiers);
    annos(t.annotations);
    if (!t.type_params_text.empty()) out_ << " tp=" << t.type_params_text;
    if (t.extends_type) {
      out_ << " extends=";
      type_ref(*t.extends_type);
    }
    if (!t.implements_list.empty()) {
      out_ << " impl=[";
      for (const auto& i : t.implements_list) {
        type_ref(i);
        out_ << ";";
      }
      out_ << "]";
    }
    for (const auto& rc : t.record_components) param(rc);
    for (const auto& c : t.enum_constants) {
      out_ << " (const " << c.name;
      annos(c.annotations);
      for (const auto& a : c.args) expr(*a);
      if (c.body) type(*c.body);
      out_ << ")";
    }
    for (const auto& m : t.members) member(m);
    out_ << ")";
  }

  void member(const Member& m) {
    std::visit(detail::overloaded{
                   [&](const FieldDecl& f) {
                     out_ << " (field " << f.name;
                     span(f.span);
                     mods(f.modifiers);
                     annos(f.annotations);
                     out_ << " type=";
                     type_ref(f.type);
                     for (int i = 0; i < f.extra_dims; ++i) out_ << "[]";
                     if (f.init) expr(*f.init);
                     out_ << ")";
                   },
                   [&](const MethodDecl& md) {
                     out_ << " (method " << md.name;
                     span(md.span);
                     mods(md.modifiers);
                     annos(md.annotations);
                     if (!md.type_params_text.empty())
                       out_ << " tp=" << md.type_params_text;
                     out_ << " ret=";
                     type_ref(md.return_type);
                     for (const auto& p : md.params) param(p);
                     for (const auto& th : md.throws_list) {
                       out_ << " throws=";
                       type_ref(th);
                     }
                     if (!md.default_value_text.empty())
                       out_ << " default=" << md.default_value_text;
                     if (md.has_body) {
                       out_ << " (body";
                       for (const auto& s : md.body) stmt(*s);
                       out_ << ")";
                     }
                     out_ << ")";
                   },
                   [&](const ConstructorDecl& c) {
                     out_ << " (ctor " << c.name;
                     span(c.span);
                     mods(c.modifiers);
                     annos(c.annotations);
                     if (c.is_compact) out_ << " compact";
                     for (const auto& p : c.params) param(p);
                     out_ << " (body";
                     for (const auto& s : c.body) stmt(*s);
                     out_ << "))";
                   },
                   [&](const InitializerBlock& b) {
                     out_ << " (init" << (b.is_static ? " static" : "");
                     for (const auto& s : b.body) stmt(*s);
                     out_ << ")";
                   },
                   [&](const TypeDeclPtr& t) { type(*t); },
               },
               m);
  }

  void stmts(const std::vector<StmtPtr>& list) {
    for (const auto& s : list) stmt(*s);
  }

  void stmt(const Stmt& s) {
    std::visit(
        detail::overloaded{
            [&](const LocalVarDeclStmt& d) {
              out_ << " (local";
              if (d.is_final) out_ << " final";
              annos(d.annotations);
              out_ << " type=";
              type_ref(d.type);
              for (const auto& v : d.declarators) {
                out_ << " (var " << v.name;
                for (int i = 0; i < v.extra_dims; ++i) out_ << "[]";
                if (v.init) expr(*v.init);
                out_ << ")";
              }
              out_ << ")";
            },
            [&](const LocalTypeDeclStmt& d) { type(*d.decl); },
            [&](const ExprStmt& e) {
              out_ << " (expr";
              expr(*e.expr);
              out_ << ")";
            },
            [&](const BlockStmt& b) {
              out_ << " (block";
              stmts(b.stmts);
              out_ << ")";
            },
            [&](const IfStmt& i) {
              out_ << " (if";
              expr(*i.cond);
              stmt(*i.then_branch);
              if (i.else_branch) {
                out_ << " else";
                stmt(*i.else_branch);
              }
              out_ << ")";
            },
            [&](const WhileStmt& w) {
              out_ << " (while";
              expr(*w.cond);
              stmt(*w.body);
              out_ << ")";
            },
            [&](const DoWhileStmt& d) {
              out_ << " (do";
              stmt(*d.body);
              expr(*d.cond);
              out_ << ")";
            },
            [&](const ForClassicStmt& f) {
              out_ << " (for";
              stmts(f.init);
              out_ << " cond=";
              if (f.cond) expr(*f.cond);
              out_ << " update=";
              for (const auto& u : f.update) expr(*u);
              stmt(*f.body);
              out_ << ")";
            },
            [&](const ForEachStmt& f) {
              out_ << " (foreach";
              if (f.is_final) out_ << " final";
              out_ << " type=";
              type_ref(f.type);
              out_ << " " << f.var_name;
              expr(*f.iterable);
              stmt(*f.body);
              out_ << ")";
            },
            [&](const SwitchStmt& sw) {
              out_ << " (switch";
              expr(*sw.selector);
              cases(sw.cases);
              out_ << ")";
            },
            [&](const TryStmt& t) {
              out_ << " (try";
              for (const auto& r : t.resources) {
                out_ << " (res";
                if (r.is_final) out_ << " final";
                if (!r.type.name.empty()) {
                  out_ << " type=";
                  type_ref(r.type);
                }
                out_ << " " << r.name;
                if (r.init) expr(*r.init);
                out_ << ")";
              }
              out_ << " (body";
              stmts(t.body);
              out_ << ")";
              for (const auto& c : t.catches) {
                out_ << " (catch";
                for (const auto& ct : c.types) {
                  out_ << " ";
                  type_ref(ct);
                }
                out_ << " " << c.name;
                stmts(c.body);
                out_ << ")";
              }
              if (t.has_finally) {
                out_ << " (finally";
                stmts(t.finally_body);
                out_ << ")";
              }
              out_ << ")";
            },
            [&](const ThrowStmt& t) {
              out_ << " (throw";
              expr(*t.expr);
              out_ << ")";
            },
            [&](const ReturnStmt& r) {
              out_ << " (return";
              if (r.expr) expr(*r.expr);
              out_ << ")";
            },
            [&](const BreakStmt& b) {
              out_ << " (break " << b.label << ")";
            },
            [&](const ContinueStmt& c) {
              out_ << " (continue " << c.label << ")";
            },
            [&](const YieldStmt& y) {
              out_ << " (yield";
              expr(*y.expr);
              out_ << ")";
            },
            [&](const AssertStmt& a) {
              out_ << " (assert";
              expr(*a.condition);
              if (a.message) {
                out_ << " msg=";
                expr(*a.message);
              }
              out_ << ")";
            },
            [&](const SynchronizedStmt& sy) {
              out_ << " (sync";
              expr(*sy.lock);
              stmts(sy.body);
              out_ << ")";
            },
            [&](const LabeledStmt& l) {
              out_ << " (label " << l.label;
              stmt(*l.stmt);
              out_ << ")";
            },
            [&](const EmptyStmt&) { out_ << " (empty)"; },
        },
        s.node);
    if (spans_) span(s.span);
  }

  void cases(const std::vector<SwitchCase>& cs) {
    for (const auto& c : cs) {
      out_ << " (case";
      if (c.is_default) out_ << " default";
      if (c.arrow) out_ << " arrow";
      for (const auto& l : c.labels) expr(*l);
      stmts(c.body);
      out_ << ")";
    }
  }

  void expr(const Expr& e) {
    std::visit(
        detail::overloaded{
            [&](const LiteralExpr& l) {
              out_ << " (lit " << static_cast<int>(l.kind) << " " << l.text << ")";
            },
            [&](const NameRefExpr& n) { out_ << " (name " << n.name << ")"; },
            [&](const ThisExpr& t) {
              out_ << " (this" << (t.qualifier.empty() ? "" : " " + t.qualifier)
                   << ")";
            },
            [&](const SuperExpr&) { out_ << " (super)"; },
            [&](const FieldAccessExpr& f) {
              out_ << " (fld " << f.name;
              expr(*f.target);
              out_ << ")";
            },
            [&](const ClassLiteralExpr& c) {
              out_ << " (classlit " << c.type_text << ")";
            },
            [&](const MethodCallExpr& m) {
              out_ << " (call " << m.name;
              if (!m.type_args_text.empty()) out_ << " ta=" << m.type_args_text;
              if (m.receiver) {
                out_ << " recv=";
                expr(*m.receiver);
              }
              for (const auto& a : m.args) expr(*a);
              out_ << ")";
            },
            [&](const ObjectCreationExpr& oc) {
              out_ << " (new " << oc.type.text;
              if (oc.outer) {
                out_ << " outer=";
                expr(*oc.outer);
              }
              for (const auto& a : oc.args) expr(*a);
              if (oc.anon_body) type(*oc.anon_body);
              out_ << ")";
            },
            [&](const ArrayCreationExpr& a) {
              out_ << " (newarr ";
              type_ref(a.element_type);
              out_ << " dims=" << a.extra_dims;
              for (const auto& d : a.dim_exprs) expr(*d);
              if (a.init) expr(*a.init);
              out_ << ")";
            },
            [&](const ArrayInitExpr& a) {
              out_ << " (arrinit";
              for (const auto& el : a.elements) expr(*el);
              out_ << ")";
            },
            [&](const ArrayAccessExpr& a) {
              out_ << " (idx";
              expr(*a.array);
              expr(*a.index);
              out_ << ")";
            },
            [&](const UnaryExpr& u) {
              out_ << " (un " << u.op << (u.prefix ? " pre" : " post");
              expr(*u.operand);
              out_ << ")";
            },
            [&](const BinaryExpr& b) {
              out_ << " (bin " << b.op;
              expr(*b.lhs);
              expr(*b.rhs);
              out_ << ")";
            },
            [&](const AssignExpr& a) {
              out_ << " (asg " << a.op;
              expr(*a.target);
              expr(*a.value);
              out_ << ")";
            },
            [&](const TernaryExpr& t) {
              out_ << " (cond";
              expr(*t.cond);
              expr(*t.then_value);
              expr(*t.else_value);
              out_ << ")";
            },
            [&](const CastExpr& c) {
              out_ << " (cast ";
              type_ref(c.type);
              expr(*c.operand);
              out_ << ")";
            },
            [&](const InstanceOfExpr& io) {
              out_ << " (iof ";
              type_ref(io.type);
              if (!io.binding.empty()) out_ << " bind=" << io.binding;
              expr(*io.operand);
              out_ << ")";
            },
            [&](const LambdaExpr& l) {
              out_ << " (lambda";
              for (const auto& p : l.params) param(p);
              if (l.has_block) {
                out_ << " (block";
                stmts(l.body_block);
                out_ << ")";
              } else {
                expr(*l.body_expr);
              }
              out_ << ")";
            },
            [&](const MethodRefExpr& r) {
              out_ << " (mref " << r.name;
              if (r.qualifier) {
                expr(*r.qualifier);
              } else {
                out_ << " " << r.type_text;
              }
              out_ << ")";
            },
            [&](const SwitchExprExpr& sw) {
              out_ << " (switchx";
              expr(*sw.selector);
              cases(sw.cases);
              out_ << ")";
            },
            [&](const ParenExpr& p) {
              out_ << " (paren";
              expr(*p.inner);
              out_ << ")";
            },
        },
        e.node);
  }
};

inline std::string structure_string(const CompilationUnit& unit,
                                    bool with_spans = false) {
  return StructureDump(with_spans).dump(unit);
}

}  // namespace perfume
