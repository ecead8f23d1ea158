#pragma once

#include <sstream>
#include <string>

#include "perfume/source/ast.hpp"

namespace perfume {

namespace detail {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace detail

// Prints an AST back to compilable Java. Formatting is canonical (two-space
// indent, one declaration per line); spans are not preserved, structure is.
class JavaPrinter {
 public:
  std::string print(const CompilationUnit& unit) {
    out_.str("");
    indent_ = 0;
    if (!unit.package_name.empty())
      line("package " + unit.package_name + ";");
    for (const auto& imp : unit.imports) {
      std::string s = "import ";
      if (imp.is_static) s += "static ";
      s += imp.name;
      if (imp.is_wildcard) s += ".*";
      line(s + ";");
    }
    for (const auto& t : unit.types) print_type(*t);
    return out_.str();
  }

 private:
  std::ostringstream out_;
  int indent_ = 0;

  void line(const std::string& s) {
    for (int i = 0; i < indent_; ++i) out_ << "  ";
    out_ << s << "\n";
  }
  void open(const std::string& s) {
    line(s + " {");
    ++indent_;
  }
  void close(const std::string& suffix = "") {
    --indent_;
    line("}" + suffix);
  }

  static std::string modifiers_text(const Modifiers& m) {
    std::string s;
    auto add = [&](Modifier mod, const char* word) {
      if (m.has(mod)) s += std::string(word) + " ";
    };
    add(Modifier::Public, "public");
    add(Modifier::Protected, "protected");
    add(Modifier::Private, "private");
    add(Modifier::Abstract, "abstract");
    add(Modifier::Default, "default");
    add(Modifier::Static, "static");
    add(Modifier::Final, "final");
    add(Modifier::Sealed, "sealed");
    add(Modifier::NonSealed, "non-sealed");
    add(Modifier::Synchronized, "synchronized");
    add(Modifier::Native, "native");
    add(Modifier::Strictfp, "strictfp");
    add(Modifier::Transient, "transient");
    add(Modifier::Volatile, "volatile");
    return s;
  }

  std::string annotations_text(const std::vector<Annotation>& annos) {
    std::string s;
    for (const auto& a : annos) {
      s += "@" + a.name;
      if (!a.args_text.empty()) s += a.args_text;
      s += " ";
    }
    return s;
  }

  static std::string type_text(const TypeRef& t) {
    std::string s = t.text;
    for (int i = 0; i < t.array_dims; ++i) s += "[]";
    return s;
  }

  std::string param_text(const Param& p) {
    std::string s = annotations_text(p.annotations);
    if (p.is_final) s += "final ";
    if (!p.type.name.empty()) {
      s += type_text(p.type);
      if (p.is_varargs) s += "...";
      s += " ";
    }
    s += p.name;
    return s;
  }

  std::string params_text(const std::vector<Param>& params) {
    std::string s = "(";
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i) s += ", ";
      s += param_text(params[i]);
    }
    return s + ")";
  }

  std::string throws_text(const std::vector<TypeRef>& throws_list) {
    if (throws_list.empty()) return "";
    std::string s = " throws ";
    for (std::size_t i = 0; i < throws_list.size(); ++i) {
      if (i) s += ", ";
      s += type_text(throws_list[i]);
    }
    return s;
  }

  void print_type(const TypeDecl& t) {
    std::string head = annotations_text(t.annotations) + modifiers_text(t.modifiers);
    switch (t.kind) {
      case TypeKind::Class: head += "class " + t.name; break;
      case TypeKind::Interface: head += "interface " + t.name; break;
      case TypeKind::Enum: head += "enum " + t.name; break;
      case TypeKind::Record: head += "record " + t.name; break;
      case TypeKind::AnnotationType: head += "@interface " + t.name; break;
    }
    head += t.type_params_text;
    if (t.kind == TypeKind::Record) {
      head += "(";
      for (std::size_t i = 0; i < t.record_components.size(); ++i) {
        if (i) head += ", ";
        head += param_text(t.record_components[i]);
      }
      head += ")";
    }
    if (t.extends_type) head += " extends " + type_text(*t.extends_type);
    if (!t.implements_list.empty()) {
      head += t.kind == TypeKind::Interface ? " extends " : " implements ";
      for (std::size_t i = 0; i < t.implements_list.size(); ++i) {
        if (i) head += ", ";
        head += type_text(t.implements_list[i]);
      }
    }
    if (!t.permits_list.empty()) {
      head += " permits ";
      for (std::size_t i = 0; i < t.permits_list.size(); ++i) {
        if (i) head += ", ";
        head += type_text(t.permits_list[i]);
      }
    }
    open(head);
    if (t.kind == TypeKind::Enum || !t.enum_constants.empty()) {
      std::string consts;
      for (std::size_t i = 0; i < t.enum_constants.size(); ++i) {
        const auto& c = t.enum_constants[i];
        if (i) consts += ", ";
        consts += annotations_text(c.annotations) + c.name;
        if (!c.args.empty()) consts += args_text(c.args);
        if (c.body) {
          line(consts + " {");
          ++indent_;
          for (const auto& m : c.body->members) print_member(m);
          --indent_;
          consts = "}";
        }
      }
      line(consts + ";");
    }
    for (const auto& m : t.members) print_member(m);
    close();
  }

  void print_member(const Member& m) {
    std::visit(detail::overloaded{
                   [&](const FieldDecl& f) { print_field(f); },
                   [&](const MethodDecl& md) { print_method(md); },
                   [&](const ConstructorDecl& c) { print_ctor(c); },
                   [&](const InitializerBlock& b) { print_init_block(b); },
                   [&](const TypeDeclPtr& t) { print_type(*t); },
               },
               m);
  }

  void print_field(const FieldDecl& f) {
    std::string s = annotations_text(f.annotations) + modifiers_text(f.modifiers);
    s += type_text(f.type) + " " + f.name;
    for (int i = 0; i < f.extra_dims; ++i) s += "[]";
    if (f.init) s += " = " + expr(*f.init);
    line(s + ";");
  }

  void print_method(const MethodDecl& m) {
    std::string s = annotations_text(m.annotations) + modifiers_text(m.modifiers);
    if (!m.type_params_text.empty()) s += m.type_params_text + " ";
    s += type_text(m.return_type) + " " + m.name + params_text(m.params);
    for (int i = 0; i < m.extra_dims; ++i) s += "[]";
    s += throws_text(m.throws_list);
    if (!m.default_value_text.empty()) s += " default " + m.default_value_text;
    if (!m.has_body) {
      line(s + ";");
      return;
    }
    open(s);
    for (const auto& st : m.body) print_stmt(*st);
    close();
  }

  void print_ctor(const ConstructorDecl& c) {
    std::string s = annotations_text(c.annotations) + modifiers_text(c.modifiers);
    if (!c.type_params_text.empty()) s += c.type_params_text + " ";
    s += c.name;
    if (!c.is_compact) s += params_text(c.params);
    s += throws_text(c.throws_list);
    open(s);
    for (const auto& st : c.body) print_stmt(*st);
    close();
  }

  void print_init_block(const InitializerBlock& b) {
    open(b.is_static ? "static" : "");
    for (const auto& st : b.body) print_stmt(*st);
    close();
  }

  // -- statements ------------------------------------------------------------

  void print_stmt(const Stmt& s) {
    std::visit(
        detail::overloaded{
            [&](const LocalVarDeclStmt& d) { line(local_var_text(d) + ";"); },
            [&](const LocalTypeDeclStmt& d) { print_type(*d.decl); },
            [&](const ExprStmt& e) { line(expr(*e.expr) + ";"); },
            [&](const BlockStmt& b) {
              open("");
              for (const auto& st : b.stmts) print_stmt(*st);
              close();
            },
            [&](const IfStmt& i) {
              open("if (" + expr(*i.cond) + ")");
              print_branch(*i.then_branch);
              if (i.else_branch) {
                --indent_;
                line("} else {");
                ++indent_;
                print_branch(*i.else_branch);
              }
              close();
            },
            [&](const WhileStmt& w) {
              open("while (" + expr(*w.cond) + ")");
              print_branch(*w.body);
              close();
            },
            [&](const DoWhileStmt& d) {
              open("do");
              print_branch(*d.body);
              close(" while (" + expr(*d.cond) + ");");
            },
            [&](const ForClassicStmt& f) { print_for(f); },
            [&](const ForEachStmt& f) {
              std::string head = "for (";
              if (f.is_final) head += "final ";
              head += type_text(f.type) + " " + f.var_name + " : " +
                      expr(*f.iterable) + ")";
              open(head);
              print_branch(*f.body);
              close();
            },
            [&](const SwitchStmt& sw) {
              open("switch (" + expr(*sw.selector) + ")");
              print_cases(sw.cases);
              close();
            },
            [&](const TryStmt& t) { print_try(t); },
            [&](const ThrowStmt& t) { line("throw " + expr(*t.expr) + ";"); },
            [&](const ReturnStmt& r) {
              line(r.expr ? "return " + expr(*r.expr) + ";" : "return;");
            },
            [&](const BreakStmt& b) {
              line(b.label.empty() ? "break;" : "break " + b.label + ";");
            },
            [&](const ContinueStmt& c) {
              line(c.label.empty() ? "continue;" : "continue " + c.label + ";");
            },
            [&](const YieldStmt& y) { line("yield " + expr(*y.expr) + ";"); },
            [&](const AssertStmt& a) {
              std::string s2 = "assert " + expr(*a.condition);
              if (a.message) s2 += " : " + expr(*a.message);
              line(s2 + ";");
            },
            [&](const SynchronizedStmt& sy) {
              open("synchronized (" + expr(*sy.lock) + ")");
              for (const auto& st : sy.body) print_stmt(*st);
              close();
            },
            [&](const LabeledStmt& l) {
              line(l.label + ":");
              print_stmt(*l.stmt);
            },
            [&](const EmptyStmt&) { line(";"); },
        },
        s.node);
  }

  // Wraps non-block branches so `if (x) stmt;` prints inside braces.
  void print_branch(const Stmt& s) {
    if (const auto* b = s.as<BlockStmt>()) {
      for (const auto& st : b->stmts) print_stmt(*st);
    } else {
      print_stmt(s);
    }
  }

  std::string local_var_text(const LocalVarDeclStmt& d) {
    std::string s = annotations_text(d.annotations);
    if (d.is_final) s += "final ";
    s += type_text(d.type) + " ";
    for (std::size_t i = 0; i < d.declarators.size(); ++i) {
      const auto& v = d.declarators[i];
      if (i) s += ", ";
      s += v.name;
      for (int k = 0; k < v.extra_dims; ++k) s += "[]";
      if (v.init) s += " = " + expr(*v.init);
    }
    return s;
  }

  void print_for(const ForClassicStmt& f) {
    std::string head = "for (";
    for (std::size_t i = 0; i < f.init.size(); ++i) {
      if (i) head += ", ";
      if (const auto* d = f.init[i]->as<LocalVarDeclStmt>())
        head += local_var_text(*d);
      else if (const auto* e = f.init[i]->as<ExprStmt>())
        head += expr(*e->expr);
    }
    head += "; ";
    if (f.cond) head += expr(*f.cond);
    head += "; ";
    for (std::size_t i = 0; i < f.update.size(); ++i) {
      if (i) head += ", ";
      head += expr(*f.update[i]);
    }
    head += ")";
    open(head);
    print_branch(*f.body);
    close();
  }

  void print_try(const TryStmt& t) {
    std::string head = "try";
    if (!t.resources.empty()) {
      head += " (";
      for (std::size_t i = 0; i < t.resources.size(); ++i) {
        const auto& r = t.resources[i];
        if (i) head += "; ";
        if (r.init) {
          if (r.is_final) head += "final ";
          head += type_text(r.type) + " " + r.name + " = " + expr(*r.init);
        } else {
          head += r.name;
        }
      }
      head += ")";
    }
    open(head);
    for (const auto& st : t.body) print_stmt(*st);
    for (const auto& c : t.catches) {
      std::string types;
      for (std::size_t i = 0; i < c.types.size(); ++i) {
        if (i) types += " | ";
        types += type_text(c.types[i]);
      }
      --indent_;
      line("} catch (" + types + " " + c.name + ") {");
      ++indent_;
      for (const auto& st : c.body) print_stmt(*st);
    }
    if (t.has_finally) {
      --indent_;
      line("} finally {");
      ++indent_;
      for (const auto& st : t.finally_body) print_stmt(*st);
    }
    close();
  }

  void print_cases(const std::vector<SwitchCase>& cases) {
    for (const auto& c : cases) {
      std::string label;
      if (!c.labels.empty()) {
        label = "case ";
        for (std::size_t i = 0; i < c.labels.size(); ++i) {
          if (i) label += ", ";
          label += expr(*c.labels[i]);
        }
        if (c.is_default) label += ", default";
      } else {
        label = "default";
      }
      if (c.arrow) {
        if (!c.body.empty() && c.body.front()->is<BlockStmt>()) {
          open(label + " ->");
          for (const auto& st : c.body.front()->as<BlockStmt>()->stmts)
            print_stmt(*st);
          close();
        } else if (!c.body.empty()) {
          if (const auto* es = c.body.front()->as<ExprStmt>())
            line(label + " -> " + expr(*es->expr) + ";");
          else if (const auto* th = c.body.front()->as<ThrowStmt>())
            line(label + " -> throw " + expr(*th->expr) + ";");
        }
      } else {
        line(label + ":");
        ++indent_;
        for (const auto& st : c.body) print_stmt(*st);
        --indent_;
      }
    }
  }

  // -- expressions -------------------------------------------------------------

  std::string args_text(const std::vector<ExprPtr>& args) {
    std::string s = "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) s += ", ";
      s += expr(*args[i]);
    }
    return s + ")";
  }

  std::string expr(const Expr& e) {
    return std::visit(
        detail::overloaded{
            [&](const LiteralExpr& l) { return l.text; },
            [&](const NameRefExpr& n) { return n.name; },
            [&](const ThisExpr& t) {
              return t.qualifier.empty() ? std::string("this")
                                         : t.qualifier + ".this";
            },
            [&](const SuperExpr&) { return std::string("super"); },
            [&](const FieldAccessExpr& f) {
              return expr(*f.target) + "." + f.name;
            },
            [&](const ClassLiteralExpr& c) { return c.type_text; },
            [&](const MethodCallExpr& m) {
              std::string s;
              if (m.receiver) s += expr(*m.receiver) + ".";
              s += m.type_args_text + m.name + args_text(m.args);
              return s;
            },
            [&](const ObjectCreationExpr& oc) { return creation_text(oc); },
            [&](const ArrayCreationExpr& a) {
              std::string s = "new " + type_text(a.element_type);
              for (const auto& d : a.dim_exprs) s += "[" + expr(*d) + "]";
              for (int i = 0; i < a.extra_dims; ++i) s += "[]";
              if (a.init) s += " " + expr(*a.init);
              return s;
            },
            [&](const ArrayInitExpr& a) {
              std::string s = "{ ";
              for (std::size_t i = 0; i < a.elements.size(); ++i) {
                if (i) s += ", ";
                s += expr(*a.elements[i]);
              }
              return s + " }";
            },
            [&](const ArrayAccessExpr& a) {
              return expr(*a.array) + "[" + expr(*a.index) + "]";
            },
            [&](const UnaryExpr& u) {
              if (!u.prefix) return expr(*u.operand) + u.op;
              std::string inner = expr(*u.operand);
              bool pad = !inner.empty() && !u.op.empty() &&
                         inner.front() == u.op.back();
              return u.op + (pad ? " " : "") + inner;
            },
            [&](const BinaryExpr& b) {
              return expr(*b.lhs) + " " + b.op + " " + expr(*b.rhs);
            },
            [&](const AssignExpr& a) {
              return expr(*a.target) + " " + a.op + " " + expr(*a.value);
            },
            [&](const TernaryExpr& t) {
              return expr(*t.cond) + " ? " + expr(*t.then_value) + " : " +
                     expr(*t.else_value);
            },
            [&](const CastExpr& c) {
              return "(" + type_text(c.type) + ") " + expr(*c.operand);
            },
            [&](const InstanceOfExpr& io) {
              std::string s = expr(*io.operand) + " instanceof " +
                              type_text(io.type);
              if (!io.binding.empty()) s += " " + io.binding;
              return s;
            },
            [&](const LambdaExpr& l) { return lambda_text(l); },
            [&](const MethodRefExpr& r) {
              std::string q =
                  r.qualifier ? expr(*r.qualifier) : r.type_text;
              return q + "::" + r.name;
            },
            [&](const SwitchExprExpr& sw) { return switch_expr_text(sw); },
            [&](const ParenExpr& p) { return "(" + expr(*p.inner) + ")"; },
        },
        e.node);
  }

  std::string creation_text(const ObjectCreationExpr& oc) {
    std::string s;
    if (oc.outer) s += expr(*oc.outer) + ".";
    s += "new " + oc.type.text + args_text(oc.args);
    if (oc.anon_body) {
      // Render the anonymous body inline; statements inside keep structure.
      std::ostringstream saved;
      saved.swap(out_);
      int saved_indent = indent_;
      ++indent_;
      out_ << "{\n";
      for (const auto& m : oc.anon_body->members) print_member(m);
      indent_ = saved_indent;
      for (int i = 0; i < indent_; ++i) out_ << "  ";
      out_ << "}";
      std::string body = out_.str();
      out_.swap(saved);
      s += " " + body;
    }
    return s;
  }

  std::string lambda_text(const LambdaExpr& l) {
    std::string s;
    if (!l.parenthesized && l.params.size() == 1 &&
        l.params[0].type.name.empty()) {
      s = l.params[0].name;
    } else {
      s = "(";
      for (std::size_t i = 0; i < l.params.size(); ++i) {
        if (i) s += ", ";
        s += param_text(l.params[i]);
      }
      s += ")";
    }
    s += " -> ";
    if (l.has_block) {
      std::ostringstream saved;
      saved.swap(out_);
      int saved_indent = indent_;
      ++indent_;
      out_ << "{\n";
      for (const auto& st : l.body_block) print_stmt(*st);
      indent_ = saved_indent;
      for (int i = 0; i < indent_; ++i) out_ << "  ";
      out_ << "}";
      std::string body = out_.str();
      out_.swap(saved);
      s += body;
    } else {
      s += expr(*l.body_expr);
    }
    return s;
  }

  std::string switch_expr_text(const SwitchExprExpr& sw) {
    std::ostringstream saved;
    saved.swap(out_);
    int saved_indent = indent_;
    out_ << "switch (" << expr(*sw.selector) << ") {\n";
    ++indent_;
    print_cases(sw.cases);
    indent_ = saved_indent;
    for (int i = 0; i < indent_; ++i) out_ << "  ";
    out_ << "}";
    std::string body = out_.str();
    out_.swap(saved);
    return body;
  }
};

inline std::string print_java(const CompilationUnit& unit) {
  return JavaPrinter().print(unit);
}

}  // namespace perfume
