#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "perfume/detect/finding.hpp"
#include "perfume/detect/walk.hpp"
#include "perfume/source/ast.hpp"
#include "perfume/source/index.hpp"

namespace perfume {

namespace detect {

// -- shared predicates --------------------------------------------------------

inline std::string erased_simple(const std::string& name) {
  auto dot = name.rfind('.');
  return dot == std::string::npos ? name : name.substr(dot + 1);
}

inline bool is_object_param(const Param& p) {
  return !p.is_varargs && p.type.array_dims == 0 &&
         (p.type.name == "Object" || p.type.name == "java.lang.Object");
}

inline bool is_equals_object(const MethodDecl& m) {
  return m.name == "equals" && m.params.size() == 1 && is_object_param(m.params[0]);
}

inline bool is_hashcode(const MethodDecl& m) {
  return m.name == "hashCode" && m.params.empty();
}

// Subtype query with the structural fallback: when the index cannot decide,
// a direct extends/implements clause naming the target's simple name counts.
inline bool extends_or_implements(const CompilationUnit& unit,
                                  const TypeDecl& type,
                                  const std::string& target_qualified,
                                  const ProjectIndex& index,
                                  bool clause_fallback) {
  std::string qualified = qualified_name_of(unit, type);
  if (const TypeSummary* s = index.lookup_qualified(qualified)) {
    Ternary t = index.is_subtype_of(*s, target_qualified);
    if (t == Ternary::Yes) return true;
    if (t == Ternary::No) return false;
  }
  if (!clause_fallback) return false;
  std::string simple = erased_simple(target_qualified);
  if (type.extends_type && type.extends_type->simple_name() == simple) return true;
  for (const auto& impl : type.implements_list)
    if (impl.simple_name() == simple) return true;
  return false;
}

// Dotted text of a pure name chain, "" otherwise.
inline std::string chain_text(const Expr& e) {
  const Expr& x = strip_parens(e);
  if (const auto* n = x.as<NameRefExpr>()) return n->name;
  if (const auto* f = x.as<FieldAccessExpr>()) {
    std::string base = chain_text(*f->target);
    if (base.empty()) return "";
    return base + "." + f->name;
  }
  return "";
}

inline bool is_null_literal(const Expr& e) {
  const auto* l = strip_parens(e).as<LiteralExpr>();
  return l && l->is_null();
}

inline bool is_name(const Expr& e, const std::string& name) {
  const auto* n = strip_parens(e).as<NameRefExpr>();
  return n && n->name == name;
}

inline bool returns_true(const Stmt& s) {
  const Stmt* target = &s;
  if (const auto* b = s.as<BlockStmt>()) {
    if (b->stmts.empty()) return false;
    target = b->stmts.front().get();
  }
  const auto* r = target->as<ReturnStmt>();
  if (!r || !r->expr) return false;
  const auto* lit = strip_parens(*r->expr).as<LiteralExpr>();
  return lit && lit->is_true();
}

// -- individual detectors -----------------------------------------------------

// id 1: clone() in a Cloneable type delegating to super.clone().
inline std::vector<Finding> detect_clone_blueprint(const CompilationUnit& unit,
                                                   const ProjectIndex& index) {
  std::vector<Finding> out;
  if (!unit.parsed()) return out;
  for (const auto* type : named_types(unit)) {
    if (!extends_or_implements(unit, *type, "java.lang.Cloneable", index, true))
      continue;
    for (const auto* m : type->methods()) {
      if (m->name != "clone" || !m->params.empty() || !m->has_body) continue;
      bool calls_super_clone = false;
      AstWalker walker;
      walker.on_expr = [&](const Expr& e) {
        const auto* call = e.as<MethodCallExpr>();
        if (call && call->name == "clone" && call->receiver &&
            strip_parens(*call->receiver).is<SuperExpr>())
          calls_super_clone = true;
      };
      walker.walk(m->body);
      if (!calls_super_clone) continue;
      Finding f;
      f.perfume_id = 1;
      f.file = unit.path;
      f.span = m->span;
      f.element = element_of(*type, *m);
      out.push_back(std::move(f));
    }
  }
  return out;
}

// id 2: equals(Object) opening with reference and type checks.
inline std::vector<Finding> detect_equals_blueprint(const CompilationUnit& unit,
                                                    const ProjectIndex& index) {
  (void)index;
  std::vector<Finding> out;
  if (!unit.parsed()) return out;
  for (const auto* type : named_types(unit)) {
    for (const auto* m : type->methods()) {
      if (!is_equals_object(*m) || !m->has_body) continue;
      if (m->return_type.name != "boolean") continue;
      const std::string& param = m->params[0].name;

      bool reference_check = false;
      bool type_check = false;
      AstWalker walker;
      walker.on_stmt = [&](const Stmt& s) {
        const auto* ifs = s.as<IfStmt>();
        if (!ifs) return;
        const auto* bin = strip_parens(*ifs->cond).as<BinaryExpr>();
        if (!bin || bin->op != "==") return;
        bool this_and_param =
            (strip_parens(*bin->lhs).is<ThisExpr>() && is_name(*bin->rhs, param)) ||
            (strip_parens(*bin->rhs).is<ThisExpr>() && is_name(*bin->lhs, param));
        if (this_and_param && returns_true(*ifs->then_branch))
          reference_check = true;
      };
      walker.on_expr = [&](const Expr& e) {
        if (const auto* io = e.as<InstanceOfExpr>()) {
          if (is_name(*io->operand, param)) type_check = true;
          return;
        }
        const auto* bin = e.as<BinaryExpr>();
        if (!bin || (bin->op != "==" && bin->op != "!=")) return;
        auto class_identity = [](const Expr& side) {
          const Expr& x = strip_parens(side);
          if (x.is<ClassLiteralExpr>()) return true;
          const auto* call = x.as<MethodCallExpr>();
          return call && call->name == "getClass";
        };
        if (class_identity(*bin->lhs) && class_identity(*bin->rhs))
          type_check = true;
      };
      walker.walk(m->body);

      if (!reference_check || !type_check) continue;
      Finding f;
      f.perfume_id = 2;
      f.file = unit.path;
      f.span = m->span;
      f.element = element_of(*type, *m);
      out.push_back(std::move(f));
    }
  }
  return out;
}

// id 3: next() throwing NoSuchElementException in an Iterator.
inline std::vector<Finding> detect_iterator_next_contract(
    const CompilationUnit& unit, const ProjectIndex& index) {
  std::vector<Finding> out;
  if (!unit.parsed()) return out;
  for (const auto* type : named_types(unit)) {
    if (!extends_or_implements(unit, *type, "java.util.Iterator", index, true))
      continue;
    for (const auto* m : type->methods()) {
      if (m->name != "next" || !m->params.empty() || !m->has_body) continue;
      bool throws_nsee = false;
      AstWalker walker;
      walker.on_stmt = [&](const Stmt& s) {
        const auto* th = s.as<ThrowStmt>();
        if (!th) return;
        const auto* oc = strip_parens(*th->expr).as<ObjectCreationExpr>();
        if (oc && oc->type.simple_name() == "NoSuchElementException")
          throws_nsee = true;
      };
      walker.walk(m->body);
      if (!throws_nsee) continue;
      Finding f;
      f.perfume_id = 3;
      f.file = unit.path;
      f.span = m->span;
      f.element = element_of(*type, *m);
      out.push_back(std::move(f));
    }
  }
  return out;
}

// id 4: Comparable type declaring compareTo and equals(Object).
inline std::vector<Finding> detect_compareto_with_equals(
    const CompilationUnit& unit, const ProjectIndex& index) {
  std::vector<Finding> out;
  if (!unit.parsed()) return out;
  for (const auto* type : named_types(unit)) {
    if (!extends_or_implements(unit, *type, "java.lang.Comparable", index, true))
      continue;
    bool has_compare_to = false;
    bool has_equals = false;
    for (const auto* m : type->methods()) {
      if (m->name == "compareTo" && m->params.size() == 1) has_compare_to = true;
      if (is_equals_object(*m)) has_equals = true;
    }
    if (!has_compare_to || !has_equals) continue;
    Finding f;
    f.perfume_id = 4;
    f.file = unit.path;
    f.span = type->span;
    f.element = element_of(*type);
    out.push_back(std::move(f));
  }
  return out;
}

// id 5: subclass with own instance fields re-overriding an inherited equals.
inline std::vector<Finding> detect_override_equals_of_superclass(
    const CompilationUnit& unit, const ProjectIndex& index) {
  std::vector<Finding> out;
  if (!unit.parsed()) return out;
  for (const auto* type : named_types(unit)) {
    const MethodDecl* own_equals = nullptr;
    for (const auto* m : type->methods())
      if (is_equals_object(*m)) own_equals = m;
    if (!own_equals) continue;

    int instance_fields = 0;
    for (const auto* fd : type->fields())
      if (!fd->is_static()) ++instance_fields;
    if (instance_fields == 0) continue;

    bool ancestor_declares_equals = false;
    const TypeSummary* current =
        index.lookup_qualified(qualified_name_of(unit, *type));
    std::set<std::string> seen;
    while (current) {
      const SupertypeRef* up = current->extends_edge();
      if (!up || up->qualified.empty()) break;
      if (!seen.insert(up->qualified).second) break;
      const TypeSummary* parent = index.lookup_qualified(up->qualified);
      if (!parent || parent->origin == TypeOrigin::WellKnown) break;
      if (parent->declares_equals_object()) {
        ancestor_declares_equals = true;
        break;
      }
      current = parent;
    }
    if (!ancestor_declares_equals) continue;

    Finding f;
    f.perfume_id = 5;
    f.file = unit.path;
    f.span = own_equals->span;
    f.element = element_of(*type, *own_equals);
    out.push_back(std::move(f));
  }
  return out;
}

// id 6: equals(Object) and hashCode() declared together.
inline std::vector<Finding> detect_paired_equals_hashcode(
    const CompilationUnit& unit, const ProjectIndex& index) {
  (void)index;
  std::vector<Finding> out;
  if (!unit.parsed()) return out;
  for (const auto* type : named_types(unit)) {
    bool has_equals = false;
    bool has_hash = false;
    for (const auto* m : type->methods()) {
      if (is_equals_object(*m)) has_equals = true;
      if (is_hashcode(*m)) has_hash = true;
    }
    if (!has_equals || !has_hash) continue;
    Finding f;
    f.perfume_id = 6;
    f.file = unit.path;
    f.span = type->span;
    f.element = element_of(*type);
    out.push_back(std::move(f));
  }
  return out;
}

// id 7: EnumMap construction or EnumSet factory calls.
inline std::vector<Finding> detect_enum_collections(const CompilationUnit& unit,
                                                    const ProjectIndex& index) {
  std::vector<Finding> out;
  if (!unit.parsed()) return out;
  static const std::set<std::string> enum_set_factories = {
      "of", "noneOf", "allOf", "range", "complementOf", "copyOf"};
  for (const auto* type : named_types(unit)) {
    std::vector<ExecutableBody> bodies;
    collect_executable_bodies(*type, bodies);
    for (const auto& body : bodies) {
      AstWalker walker;
      walker.into_anonymous = true;
      walker.on_expr = [&](const Expr& e) {
        if (const auto* oc = e.as<ObjectCreationExpr>()) {
          Resolution r = index.resolve(oc->type.name, unit);
          if (r.qualified_name == "java.util.EnumMap") {
            Finding f;
            f.perfume_id = 7;
            f.file = unit.path;
            f.span = e.span;
            f.element = body.element;
            f.detail("kind", "EnumMap");
            out.push_back(std::move(f));
          }
          return;
        }
        const auto* call = e.as<MethodCallExpr>();
        if (!call || !call->receiver || !enum_set_factories.count(call->name))
          return;
        std::string chain = chain_text(*call->receiver);
        if (chain.empty()) return;
        Resolution r = index.resolve(chain, unit);
        if (r.qualified_name != "java.util.EnumSet") return;
        Finding f;
        f.perfume_id = 7;
        f.file = unit.path;
        f.span = e.span;
        f.element = body.element;
        f.detail("kind", "EnumSet");
        f.detail("factory", call->name);
        out.push_back(std::move(f));
      };
      if (body.stmts) walker.walk(*body.stmts);
      if (body.init_expr) walker.walk_expr(*body.init_expr);
    }
  }
  return out;
}

// id 8: assert statements inside private methods.
inline std::vector<Finding> detect_assert_in_private_method(
    const CompilationUnit& unit, const ProjectIndex& index) {
  (void)index;
  std::vector<Finding> out;
  if (!unit.parsed()) return out;
  for (const auto* type : named_types(unit)) {
    for (const auto* m : type->methods()) {
      if (!m->is_private() || !m->has_body) continue;
      AstWalker walker;
      walker.on_stmt = [&](const Stmt& s) {
        const auto* a = s.as<AssertStmt>();
        if (!a) return;
        Finding f;
        f.perfume_id = 8;
        f.file = unit.path;
        f.span = s.span;
        f.element = element_of(*type, *m);
        f.detail("has_message", a->has_message() ? "true" : "false");
        out.push_back(std::move(f));
      };
      walker.walk(m->body);
    }
  }
  return out;
}

// id 9: fixed parameter of the varargs element type right before the varargs.
inline std::vector<Finding> detect_at_least_x_varargs(const CompilationUnit& unit,
                                                      const ProjectIndex& index) {
  (void)index;
  std::vector<Finding> out;
  if (!unit.parsed()) return out;
  for (const auto* type : named_types(unit)) {
    for (const auto* m : type->methods()) {
      if (m->params.size() < 2) continue;
      const Param& last = m->params.back();
      const Param& before = m->params[m->params.size() - 2];
      if (!last.is_varargs || before.is_varargs) continue;
      if (before.type.name != last.type.name ||
          before.type.array_dims != last.type.array_dims)
        continue;
      Finding f;
      f.perfume_id = 9;
      f.file = unit.path;
      f.span = m->span;
      f.element = element_of(*type, *m);
      f.detail("element_type", last.element_type_name());
      out.push_back(std::move(f));
    }
  }
  return out;
}

// id 10: switch statement or expression with a default label.
inline std::vector<Finding> detect_defensive_default_case(
    const CompilationUnit& unit, const ProjectIndex& index) {
  (void)index;
  std::vector<Finding> out;
  if (!unit.parsed()) return out;
  for (const auto* type : named_types(unit)) {
    std::vector<ExecutableBody> bodies;
    collect_executable_bodies(*type, bodies);
    for (const auto& body : bodies) {
      AstWalker walker;
      walker.into_anonymous = true;
      auto emit = [&](const SourceSpan& span, bool is_expression) {
        Finding f;
        f.perfume_id = 10;
        f.file = unit.path;
        f.span = span;
        f.element = body.element;
        f.detail("form", is_expression ? "expression" : "statement");
        out.push_back(std::move(f));
      };
      walker.on_stmt = [&](const Stmt& s) {
        const auto* sw = s.as<SwitchStmt>();
        if (sw && sw->has_default()) emit(s.span, false);
      };
      walker.on_expr = [&](const Expr& e) {
        const auto* sw = e.as<SwitchExprExpr>();
        if (sw && sw->has_default()) emit(e.span, true);
      };
      if (body.stmts) walker.walk(*body.stmts);
      if (body.init_expr) walker.walk_expr(*body.init_expr);
    }
  }
  return out;
}

// id 11: instanceof with a pattern binding variable.
inline std::vector<Finding> detect_instanceof_pattern(const CompilationUnit& unit,
                                                      const ProjectIndex& index) {
  (void)index;
  std::vector<Finding> out;
  if (!unit.parsed()) return out;
  for (const auto* type : named_types(unit)) {
    std::vector<ExecutableBody> bodies;
    collect_executable_bodies(*type, bodies);
    for (const auto& body : bodies) {
      AstWalker walker;
      walker.into_anonymous = true;
      walker.on_expr = [&](const Expr& e) {
        const auto* io = e.as<InstanceOfExpr>();
        if (!io || io->binding.empty()) return;
        Finding f;
        f.perfume_id = 11;
        f.file = unit.path;
        f.span = e.span;
        f.element = body.element;
        f.detail("binding", io->binding);
        out.push_back(std::move(f));
      };
      if (body.stmts) walker.walk(*body.stmts);
      if (body.init_expr) walker.walk_expr(*body.init_expr);
    }
  }
  return out;
}

// id 12: try statement with at least one resource declaration.
inline std::vector<Finding> detect_try_with_resources(const CompilationUnit& unit,
                                                      const ProjectIndex& index) {
  (void)index;
  std::vector<Finding> out;
  if (!unit.parsed()) return out;
  for (const auto* type : named_types(unit)) {
    std::vector<ExecutableBody> bodies;
    collect_executable_bodies(*type, bodies);
    for (const auto& body : bodies) {
      AstWalker walker;
      walker.into_anonymous = true;
      walker.on_stmt = [&](const Stmt& s) {
        const auto* t = s.as<TryStmt>();
        if (!t || t->resource_count() == 0) return;
        Finding f;
        f.perfume_id = 12;
        f.file = unit.path;
        f.span = s.span;
        f.element = body.element;
        f.detail("resource_count", std::to_string(t->resource_count()));
        out.push_back(std::move(f));
      };
      if (body.stmts) walker.walk(*body.stmts);
    }
  }
  return out;
}

// id 13: getX/setX pairs where both accessors are synchronized.
inline std::vector<Finding> detect_synchronized_accessor_pairs(
    const CompilationUnit& unit, const ProjectIndex& index) {
  (void)index;
  std::vector<Finding> out;
  if (!unit.parsed()) return out;
  for (const auto* type : named_types(unit)) {
    std::map<std::string, std::pair<bool, bool>> pairs;  // suffix -> (get, set)
    for (const auto* m : type->methods()) {
      if (!m->is_synchronized()) continue;
      if (m->name.size() > 3 && m->name.rfind("get", 0) == 0)
        pairs[m->name.substr(3)].first = true;
      else if (m->name.size() > 3 && m->name.rfind("set", 0) == 0)
        pairs[m->name.substr(3)].second = true;
    }
    for (const auto& [suffix, flags] : pairs) {
      if (!flags.first || !flags.second) continue;
      Finding f;
      f.perfume_id = 13;
      f.file = unit.path;
      f.span = type->span;
      f.element = element_of(*type);
      f.detail("pair", suffix);
      out.push_back(std::move(f));
    }
  }
  return out;
}

// id 14: package-private JUnit 5 test classes with package-private tests.
inline std::vector<Finding> detect_package_private_junit5(
    const CompilationUnit& unit, const ProjectIndex& index) {
  std::vector<Finding> out;
  if (!unit.parsed()) return out;
  bool jupiter_import = false;
  for (const auto& imp : unit.imports)
    if (imp.name.rfind("org.junit.jupiter", 0) == 0) jupiter_import = true;

  auto is_jupiter_test = [&](const Annotation& a) {
    if (a.simple_name() != "Test") return false;
    if (a.name.find('.') != std::string::npos)
      return a.name == "org.junit.jupiter.api.Test";
    Resolution r = index.resolve(a.name, unit);
    if (!r.qualified_name.empty())
      return r.qualified_name == "org.junit.jupiter.api.Test";
    return jupiter_import;
  };

  for (const auto* type : named_types(unit)) {
    std::vector<const MethodDecl*> test_methods;
    for (const auto* m : type->methods())
      for (const auto& a : m->annotations)
        if (is_jupiter_test(a)) {
          test_methods.push_back(m);
          break;
        }
    if (test_methods.empty()) continue;
    if (type->is_public()) continue;
    bool all_package_private = true;
    for (const auto* m : test_methods) {
      if (m->modifiers.has(Modifier::Public) ||
          m->modifiers.has(Modifier::Protected) ||
          m->modifiers.has(Modifier::Private))
        all_package_private = false;
    }
    if (!all_package_private) continue;
    Finding f;
    f.perfume_id = 14;
    f.file = unit.path;
    f.span = type->span;
    f.element = element_of(*type);
    f.detail("test_methods", std::to_string(test_methods.size()));
    out.push_back(std::move(f));
  }
  return out;
}

// id 15: assertThrows/assertThatThrownBy whose lambda makes exactly one call.
inline std::vector<Finding> detect_single_call_exception_test(
    const CompilationUnit& unit, const ProjectIndex& index) {
  (void)index;
  std::vector<Finding> out;
  if (!unit.parsed()) return out;
  for (const auto* type : named_types(unit)) {
    std::vector<ExecutableBody> bodies;
    collect_executable_bodies(*type, bodies);
    for (const auto& body : bodies) {
      AstWalker walker;
      walker.into_anonymous = true;
      walker.on_expr = [&](const Expr& e) {
        const auto* call = e.as<MethodCallExpr>();
        if (!call ||
            (call->name != "assertThrows" && call->name != "assertThatThrownBy"))
          return;
        const LambdaExpr* lambda = nullptr;
        for (const auto& arg : call->args) {
          if (const auto* l = strip_parens(*arg).as<LambdaExpr>()) {
            lambda = l;
            break;
          }
        }
        if (!lambda) return;
        int call_count = 0;
        AstWalker counter;
        counter.on_expr = [&](const Expr& inner) {
          if (inner.is<MethodCallExpr>()) ++call_count;
        };
        if (lambda->has_block) counter.walk(lambda->body_block);
        else counter.walk_expr(*lambda->body_expr);
        if (call_count != 1) return;
        Finding f;
        f.perfume_id = 15;
        f.file = unit.path;
        f.span = e.span;
        f.element = body.element;
        f.detail("assertion", call->name);
        out.push_back(std::move(f));
      };
      if (body.stmts) walker.walk(*body.stmts);
      if (body.init_expr) walker.walk_expr(*body.init_expr);
    }
  }
  return out;
}

// id 16: static nested builder with build() plus a private Builder-taking
// constructor on the enclosing type.
inline std::vector<Finding> detect_builder_pattern(const CompilationUnit& unit,
                                                   const ProjectIndex& index) {
  (void)index;
  std::vector<Finding> out;
  if (!unit.parsed()) return out;
  for (const auto* type : named_types(unit)) {
    for (const auto* nested : type->nested_types()) {
      if (nested->name.empty() || nested->kind != TypeKind::Class) continue;
      if (!nested->modifiers.has(Modifier::Static)) continue;
      bool has_build = false;
      for (const auto* m : nested->methods())
        if (m->name == "build" && m->params.empty() &&
            m->return_type.simple_name() == type->name)
          has_build = true;
      if (!has_build) continue;
      bool ctor_takes_builder = false;
      for (const auto* c : type->constructors()) {
        if (c->params.size() != 1 || !c->is_private() || c->is_compact) continue;
        if (erased_simple(c->params[0].type.name) == nested->name &&
            !c->params[0].is_varargs && c->params[0].type.array_dims == 0)
          ctor_takes_builder = true;
      }
      if (!ctor_takes_builder) continue;
      Finding f;
      f.perfume_id = 16;
      f.file = unit.path;
      f.span = nested->span;
      f.element = element_of(*nested);
      f.detail("builds", type->name);
      out.push_back(std::move(f));
    }
  }
  return out;
}

// id 17: singleton, with variant precedence field > factory > enum.
inline std::vector<Finding> detect_singleton_pattern(const CompilationUnit& unit,
                                                     const ProjectIndex& index) {
  (void)index;
  std::vector<Finding> out;
  if (!unit.parsed()) return out;
  for (const auto* type : named_types(unit)) {
    auto ctors = type->constructors();
    bool all_ctors_private =
        !ctors.empty() && std::all_of(ctors.begin(), ctors.end(),
                                      [](const ConstructorDecl* c) {
                                        return c->is_private();
                                      });
    bool public_static_final_self_field = false;
    bool static_self_field = false;
    for (const auto* fd : type->fields()) {
      if (fd->type.simple_name() != type->name || fd->type.array_dims != 0)
        continue;
      if (fd->is_static()) static_self_field = true;
      if (fd->is_static() && fd->modifiers.has(Modifier::Public) &&
          fd->modifiers.has(Modifier::Final))
        public_static_final_self_field = true;
    }
    bool public_static_factory = false;
    for (const auto* m : type->methods()) {
      if (m->params.empty() && m->is_static() &&
          m->modifiers.has(Modifier::Public) &&
          m->return_type.simple_name() == type->name &&
          m->return_type.array_dims == 0)
        public_static_factory = true;
    }

    const char* variant = nullptr;
    if (all_ctors_private && public_static_final_self_field) variant = "field";
    else if (all_ctors_private && static_self_field && public_static_factory)
      variant = "factory";
    else if (type->kind == TypeKind::Enum && type->enum_constants.size() == 1)
      variant = "enum";
    if (!variant) continue;

    Finding f;
    f.perfume_id = 17;
    f.file = unit.path;
    f.span = type->span;
    f.element = element_of(*type);
    f.detail("variant", variant);
    out.push_back(std::move(f));
  }
  return out;
}

// id 18: constructor taking a single instance of its own class.
inline std::vector<Finding> detect_copy_constructor(const CompilationUnit& unit,
                                                    const ProjectIndex& index) {
  (void)index;
  std::vector<Finding> out;
  if (!unit.parsed()) return out;
  for (const auto* type : named_types(unit)) {
    for (const auto* c : type->constructors()) {
      if (c->is_compact || c->params.size() != 1) continue;
      const Param& p = c->params[0];
      if (p.is_varargs || p.type.array_dims != 0) continue;
      if (erased_simple(p.type.name) != type->name) continue;
      Finding f;
      f.perfume_id = 18;
      f.file = unit.path;
      f.span = c->span;
      f.element = element_of(*type, *c);
      out.push_back(std::move(f));
    }
  }
  return out;
}

// id 19: public method guarding non-primitive parameters against null.
inline std::vector<Finding> detect_defensive_null_check(
    const CompilationUnit& unit, const ProjectIndex& index) {
  (void)index;
  std::vector<Finding> out;
  if (!unit.parsed()) return out;
  static const std::set<std::string> null_annotations = {"NotNull", "Nonnull",
                                                         "NonNull"};
  for (const auto* type : named_types(unit)) {
    for (const auto* m : type->methods()) {
      bool effectively_public =
          m->is_public() || (type->kind == TypeKind::Interface &&
                             !m->modifiers.has(Modifier::Private));
      if (!effectively_public) continue;

      std::vector<const Param*> reference_params;
      for (const auto& p : m->params)
        if (!p.is_primitive()) reference_params.push_back(&p);
      if (reference_params.empty()) continue;

      // Names compared against null or passed to Objects.requireNonNull.
      std::set<std::string> null_compared;
      std::set<std::string> require_checked;
      if (m->has_body) {
        AstWalker walker;
        walker.on_expr = [&](const Expr& e) {
          if (const auto* bin = e.as<BinaryExpr>()) {
            if (bin->op != "==" && bin->op != "!=") return;
            if (is_null_literal(*bin->rhs)) {
              if (const auto* n = strip_parens(*bin->lhs).as<NameRefExpr>())
                null_compared.insert(n->name);
            } else if (is_null_literal(*bin->lhs)) {
              if (const auto* n = strip_parens(*bin->rhs).as<NameRefExpr>())
                null_compared.insert(n->name);
            }
            return;
          }
          const auto* call = e.as<MethodCallExpr>();
          if (!call || call->name != "requireNonNull" || call->args.empty())
            return;
          if (call->receiver) {
            std::string chain = chain_text(*call->receiver);
            if (erased_simple(chain) != "Objects") return;
          }
          if (const auto* n = strip_parens(*call->args[0]).as<NameRefExpr>())
            require_checked.insert(n->name);
        };
        walker.walk(m->body);
      }

      std::string mechanism;
      std::vector<std::string> checked;
      for (const Param* p : reference_params) {
        std::string this_mechanism;
        if (null_compared.count(p->name)) {
          this_mechanism = "comparison";
        } else if (require_checked.count(p->name)) {
          this_mechanism = "requireNonNull";
        } else {
          for (const auto& a : p->annotations)
            if (null_annotations.count(a.simple_name())) {
              this_mechanism = "annotation";
              break;
            }
        }
        if (this_mechanism.empty()) continue;
        if (mechanism.empty()) mechanism = this_mechanism;
        checked.push_back(p->name);
      }
      if (checked.empty()) continue;

      Finding f;
      f.perfume_id = 19;
      f.file = unit.path;
      f.span = m->span;
      f.element = element_of(*type, *m);
      f.detail("mechanism", mechanism);
      std::string joined;
      for (std::size_t i = 0; i < checked.size(); ++i) {
        if (i) joined += ",";
        joined += checked[i];
      }
      f.detail("parameters", joined);
      out.push_back(std::move(f));
    }
  }
  return out;
}

// id 20: all-static class whose only constructor is private and empty.
inline std::vector<Finding> detect_no_utility_instantiation(
    const CompilationUnit& unit, const ProjectIndex& index) {
  (void)index;
  std::vector<Finding> out;
  if (!unit.parsed()) return out;
  for (const auto* type : named_types(unit)) {
    if (type->kind != TypeKind::Class) continue;
    auto methods = type->methods();
    if (methods.empty()) continue;
    if (!std::all_of(methods.begin(), methods.end(),
                     [](const MethodDecl* m) { return m->is_static(); }))
      continue;
    auto fields = type->fields();
    if (!std::all_of(fields.begin(), fields.end(),
                     [](const FieldDecl* fd) { return fd->is_static(); }))
      continue;
    auto ctors = type->constructors();
    if (ctors.size() != 1) continue;
    const ConstructorDecl* c = ctors.front();
    if (!c->is_private() || !c->params.empty() || c->is_compact) continue;
    bool body_ok = c->body.empty() ||
                   (c->body.size() == 1 && c->body.front()->is<ThrowStmt>());
    if (!body_ok) continue;
    Finding f;
    f.perfume_id = 20;
    f.file = unit.path;
    f.span = type->span;
    f.element = element_of(*type);
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace detect

// -- registry -----------------------------------------------------------------

using DetectorFn = std::vector<Finding> (*)(const CompilationUnit&,
                                            const ProjectIndex&);

struct DetectorEntry {
  int id;
  DetectorFn fn;
};

inline const std::array<DetectorEntry, 20>& all_detectors() {
  static const std::array<DetectorEntry, 20> entries = {{
      {1, detect::detect_clone_blueprint},
      {2, detect::detect_equals_blueprint},
      {3, detect::detect_iterator_next_contract},
      {4, detect::detect_compareto_with_equals},
      {5, detect::detect_override_equals_of_superclass},
      {6, detect::detect_paired_equals_hashcode},
      {7, detect::detect_enum_collections},
      {8, detect::detect_assert_in_private_method},
      {9, detect::detect_at_least_x_varargs},
      {10, detect::detect_defensive_default_case},
      {11, detect::detect_instanceof_pattern},
      {12, detect::detect_try_with_resources},
      {13, detect::detect_synchronized_accessor_pairs},
      {14, detect::detect_package_private_junit5},
      {15, detect::detect_single_call_exception_test},
      {16, detect::detect_builder_pattern},
      {17, detect::detect_singleton_pattern},
      {18, detect::detect_copy_constructor},
      {19, detect::detect_defensive_null_check},
      {20, detect::detect_no_utility_instantiation},
  }};
  return entries;
}

// Runs every detector over one parsed unit; findings arrive sorted by
// position, then perfume id.
inline std::vector<Finding> run_all_detectors(const CompilationUnit& unit,
                                              const ProjectIndex& index) {
  std::vector<Finding> out;
  if (!unit.parsed()) return out;
  for (const auto& entry : all_detectors()) {
    auto found = entry.fn(unit, index);
    out.insert(out.end(), std::make_move_iterator(found.begin()),
               std::make_move_iterator(found.end()));
  }
  std::stable_sort(out.begin(), out.end(), finding_order);
  return out;
}

}  // namespace perfume
