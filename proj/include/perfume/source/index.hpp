#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "perfume/source/ast.hpp"

namespace perfume {

enum class TypeOrigin { Corpus, Dependency, WellKnown };

inline const char* to_string(TypeOrigin o) {
  switch (o) {
    case TypeOrigin::Corpus: return "corpus";
    case TypeOrigin::Dependency: return "dependency";
    case TypeOrigin::WellKnown: return "well-known";
  }
  return "?";
}

struct MethodSig {
  std::string name;
  std::vector<std::string> param_types;  // erased display names
  bool is_static = false;
};

struct FieldSig {
  std::string name;
  bool is_static = false;
};

struct SupertypeRef {
  std::string raw_name;    // erased name as written, e.g. "Iterator"
  std::string qualified;   // resolved qualified name, empty when unresolved
  bool is_extends = false;  // superclass edge rather than interface edge
};

struct TypeSummary {
  std::string qualified_name;
  std::string simple_name;
  std::string package_name;
  TypeKind kind = TypeKind::Class;
  TypeOrigin origin = TypeOrigin::Corpus;
  bool is_member = false;  // static member entry such as Objects.requireNonNull
  std::vector<SupertypeRef> supertypes;
  std::vector<MethodSig> methods;
  std::vector<FieldSig> fields;
  int instance_field_count = 0;

  static std::string last_segment(const std::string& n) {
    auto dot = n.rfind('.');
    return dot == std::string::npos ? n : n.substr(dot + 1);
  }

  bool declares_equals_object() const {
    for (const auto& m : methods)
      if (m.name == "equals" && m.param_types.size() == 1 &&
          last_segment(m.param_types[0]) == "Object")
        return true;
    return false;
  }
  const SupertypeRef* extends_edge() const {
    for (const auto& sup : supertypes)
      if (sup.is_extends) return &sup;
    return nullptr;
  }

  bool declares_hashcode() const {
    for (const auto& m : methods)
      if (m.name == "hashCode" && m.param_types.empty()) return true;
    return false;
  }
};

enum class ResolutionKind { Corpus, Dependency, WellKnown, Unknown };

inline const char* to_string(ResolutionKind k) {
  switch (k) {
    case ResolutionKind::Corpus: return "corpus";
    case ResolutionKind::Dependency: return "dependency";
    case ResolutionKind::WellKnown: return "well-known";
    case ResolutionKind::Unknown: return "unknown";
  }
  return "?";
}

struct Resolution {
  ResolutionKind kind = ResolutionKind::Unknown;
  std::string qualified_name;  // may carry the import-derived name when unknown
};

enum class Ternary { Yes, No, Unknown };

// The slice of a compilation unit that name resolution needs; cheap to
// keep after the tree itself is released.
struct ImportContext {
  std::string package_name;
  std::vector<ImportDecl> imports;
};

inline ImportContext context_of(const CompilationUnit& unit) {
  return {unit.package_name, unit.imports};
}

// Cross-file name index. Built once over all parsed units (plus dependency
// source roots), then shared read-only.
class ProjectIndex {
 public:
  std::vector<std::string> warnings;

  const TypeSummary* lookup_qualified(const std::string& qualified) const {
    auto it = by_qualified_.find(qualified);
    return it == by_qualified_.end() ? nullptr : &it->second;
  }

  // Deterministic simple-name lookup: lexicographically smallest qualified
  // name wins among the given origins.
  const TypeSummary* lookup_simple(const std::string& simple,
                                   TypeOrigin origin) const {
    auto it = by_simple_.find(simple);
    if (it == by_simple_.end()) return nullptr;
    for (const auto& q : it->second) {
      const TypeSummary* s = lookup_qualified(q);
      if (s && s->origin == origin) return s;
    }
    return nullptr;
  }

  Resolution resolve(const std::string& name, const CompilationUnit& unit) const {
    return resolve(name, context_of(unit));
  }

  Resolution resolve(const std::string& name, const ImportContext& ctx) const {
    if (name.empty()) return {};
    if (name.find('.') != std::string::npos) return resolve_qualified(name, ctx);

    // 1. Explicit import.
    for (const auto& imp : ctx.imports) {
      if (imp.is_wildcard || imp.is_static) continue;
      if (TypeSummary::last_segment(imp.name) == name)
        return classify(imp.name);
    }
    // 2. Same-package corpus type (includes the unit's own declarations).
    {
      auto it = by_simple_.find(name);
      if (it != by_simple_.end()) {
        for (const auto& q : it->second) {
          const TypeSummary* s = lookup_qualified(q);
          if (s && s->origin == TypeOrigin::Corpus &&
              s->package_name == ctx.package_name)
            return {ResolutionKind::Corpus, s->qualified_name};
        }
      }
    }
    // 3. Wildcard import.
    {
      std::vector<std::string> hits;
      for (const auto& imp : ctx.imports) {
        if (!imp.is_wildcard || imp.is_static) continue;
        std::string candidate = imp.name + "." + name;
        if (by_qualified_.count(candidate)) hits.push_back(candidate);
      }
      if (!hits.empty()) {
        std::sort(hits.begin(), hits.end());
        return classify(hits.front());
      }
    }
    // 4. Well-known table (covers the implicit java.lang import).
    if (const TypeSummary* s = lookup_simple(name, TypeOrigin::WellKnown))
      return {ResolutionKind::WellKnown, s->qualified_name};
    return {};
  }

  Ternary is_subtype_of(const TypeSummary& type, const std::string& target) const {
    std::set<std::string> visited;
    bool unknown_seen = false;
    if (walk_supertypes(type, target, visited, unknown_seen)) return Ternary::Yes;
    return unknown_seen ? Ternary::Unknown : Ternary::No;
  }

  // Mutation API used by build_project_index only.
  void insert(TypeSummary summary) {
    const std::string qualified = summary.qualified_name;
    auto it = by_qualified_.find(qualified);
    if (it != by_qualified_.end()) {
      if (it->second.origin == TypeOrigin::WellKnown &&
          summary.origin != TypeOrigin::WellKnown) {
        // corpus/dependency entries shadow well-known ones silently
      } else if (summary.origin != TypeOrigin::WellKnown) {
        warnings.push_back("duplicate type " + qualified +
                           ", keeping the last definition");
      }
      it->second = std::move(summary);
      return;
    }
    by_qualified_.emplace(qualified, std::move(summary));
    auto& simple_list = by_simple_[TypeSummary::last_segment(qualified)];
    simple_list.push_back(qualified);
    std::sort(simple_list.begin(), simple_list.end());
  }

  TypeSummary* find_mutable(const std::string& qualified) {
    auto it = by_qualified_.find(qualified);
    return it == by_qualified_.end() ? nullptr : &it->second;
  }

  void note_same_package_collisions() {
    for (const auto& [simple, quals] : by_simple_) {
      std::map<std::string, int> per_package;
      for (const auto& q : quals) {
        const TypeSummary* s = lookup_qualified(q);
        if (s && s->origin == TypeOrigin::Corpus) ++per_package[s->package_name];
      }
      for (const auto& [pkg, n] : per_package) {
        if (n > 1)
          warnings.push_back("simple name '" + simple + "' is ambiguous in package '" +
                             pkg + "', resolving to the lexicographically smallest");
      }
    }
  }

  void note_supertype_cycles() {
    for (const auto& [qualified, summary] : by_qualified_) {
      std::set<std::string> visited;
      if (on_cycle(summary, qualified, visited))
        warnings.push_back("supertype cycle involving " + qualified);
    }
  }

 private:
  std::map<std::string, TypeSummary> by_qualified_;
  std::map<std::string, std::vector<std::string>> by_simple_;

  Resolution classify(const std::string& qualified) const {
    const TypeSummary* s = lookup_qualified(qualified);
    if (!s) return {ResolutionKind::Unknown, qualified};
    switch (s->origin) {
      case TypeOrigin::Corpus: return {ResolutionKind::Corpus, qualified};
      case TypeOrigin::Dependency: return {ResolutionKind::Dependency, qualified};
      case TypeOrigin::WellKnown: return {ResolutionKind::WellKnown, qualified};
    }
    return {};
  }

  Resolution resolve_qualified(const std::string& name,
                               const ImportContext& ctx) const {
    if (by_qualified_.count(name)) return classify(name);
    // "Outer.Inner" relative to an importable or same-package Outer.
    auto dot = name.find('.');
    Resolution base = resolve(name.substr(0, dot), ctx);
    if (!base.qualified_name.empty()) {
      std::string full = base.qualified_name + name.substr(dot);
      if (by_qualified_.count(full)) return classify(full);
      return {ResolutionKind::Unknown, full};
    }
    return {ResolutionKind::Unknown, name};
  }

  bool walk_supertypes(const TypeSummary& type, const std::string& target,
                       std::set<std::string>& visited, bool& unknown_seen) const {
    if (!visited.insert(type.qualified_name).second) return false;
    for (const auto& sup : type.supertypes) {
      if (sup.qualified.empty()) {
        unknown_seen = true;
        continue;
      }
      if (sup.qualified == target) return true;
      const TypeSummary* s = lookup_qualified(sup.qualified);
      if (!s) {
        unknown_seen = true;
        continue;
      }
      if (walk_supertypes(*s, target, visited, unknown_seen)) return true;
    }
    return false;
  }

  bool on_cycle(const TypeSummary& type, const std::string& root,
                std::set<std::string>& visited) const {
    for (const auto& sup : type.supertypes) {
      if (sup.qualified.empty()) continue;
      if (sup.qualified == root) return true;
      if (!visited.insert(sup.qualified).second) continue;
      const TypeSummary* s = lookup_qualified(sup.qualified);
      if (s && on_cycle(*s, root, visited)) return true;
    }
    return false;
  }
};

namespace detail {

inline void add_well_known(ProjectIndex& index, const std::string& qualified,
                           TypeKind kind, bool is_member = false) {
  TypeSummary s;
  s.qualified_name = qualified;
  s.simple_name = TypeSummary::last_segment(qualified);
  auto dot = qualified.rfind('.');
  s.package_name = dot == std::string::npos ? "" : qualified.substr(0, dot);
  s.kind = kind;
  s.origin = TypeOrigin::WellKnown;
  s.is_member = is_member;
  index.insert(std::move(s));
}

inline void preload_well_known(ProjectIndex& index) {
  add_well_known(index, "java.lang.Object", TypeKind::Class);
  add_well_known(index, "java.lang.Cloneable", TypeKind::Interface);
  add_well_known(index, "java.lang.Comparable", TypeKind::Interface);
  add_well_known(index, "java.lang.CloneNotSupportedException", TypeKind::Class);
  add_well_known(index, "java.util.Iterator", TypeKind::Interface);
  add_well_known(index, "java.util.NoSuchElementException", TypeKind::Class);
  add_well_known(index, "java.util.EnumMap", TypeKind::Class);
  add_well_known(index, "java.util.EnumSet", TypeKind::Class);
  add_well_known(index, "java.util.Objects", TypeKind::Class);
  add_well_known(index, "java.util.Objects.requireNonNull", TypeKind::Class, true);
  add_well_known(index, "org.junit.jupiter.api.Test", TypeKind::AnnotationType);
  add_well_known(index, "org.junit.jupiter.api.Assertions", TypeKind::Class);
  add_well_known(index, "org.junit.jupiter.api.Assertions.assertThrows",
                 TypeKind::Class, true);
  add_well_known(index, "org.assertj.core.api.Assertions", TypeKind::Class);
  add_well_known(index, "org.assertj.core.api.Assertions.assertThatThrownBy",
                 TypeKind::Class, true);
  add_well_known(index, "javax.annotation.Nonnull", TypeKind::AnnotationType);
  add_well_known(index, "jakarta.annotation.Nonnull", TypeKind::AnnotationType);
  add_well_known(index, "javax.validation.constraints.NotNull", TypeKind::AnnotationType);
  add_well_known(index, "jakarta.validation.constraints.NotNull", TypeKind::AnnotationType);
  add_well_known(index, "org.jetbrains.annotations.NotNull", TypeKind::AnnotationType);
}

inline void summarize_type(const CompilationUnit& unit, const TypeDecl& decl,
                           TypeOrigin origin, std::vector<TypeSummary>& out) {
  if (decl.name.empty()) return;
  TypeSummary s;
  s.package_name = unit.package_name;
  s.qualified_name = unit.package_name.empty()
                         ? decl.path()
                         : unit.package_name + "." + decl.path();
  s.simple_name = decl.name;
  s.kind = decl.kind;
  s.origin = origin;
  if (decl.extends_type)
    s.supertypes.push_back({decl.extends_type->name, "", true});
  for (const auto& impl : decl.implements_list)
    s.supertypes.push_back({impl.name, "", false});
  for (const auto* m : decl.methods()) {
    MethodSig sig;
    sig.name = m->name;
    sig.is_static = m->is_static();
    for (const auto& p : m->params) sig.param_types.push_back(p.display_type());
    s.methods.push_back(std::move(sig));
  }
  for (const auto* f : decl.fields()) {
    s.fields.push_back({f->name, f->is_static()});
    if (!f->is_static()) ++s.instance_field_count;
  }
  out.push_back(std::move(s));
  for (const auto* nested : decl.nested_types())
    summarize_type(unit, *nested, origin, out);
}

}  // namespace detail

// Incremental index construction: units are summarized and may be released
// immediately; only their import contexts are retained for the final
// supertype-resolution pass.
class IndexBuilder {
 public:
  IndexBuilder() { detail::preload_well_known(index_); }

  void add_unit(const CompilationUnit& unit, TypeOrigin origin) {
    if (!unit.parsed()) return;
    auto ctx = std::make_shared<ImportContext>(context_of(unit));
    std::vector<TypeSummary> summaries;
    for (const auto& t : unit.types)
      detail::summarize_type(unit, *t, origin, summaries);
    for (auto& summary : summaries) {
      pending_.push_back({summary.qualified_name, ctx});
      index_.insert(std::move(summary));
    }
  }

  ProjectIndex finish() {
    for (const auto& p : pending_) {
      TypeSummary* s = index_.find_mutable(p.qualified);
      if (!s) continue;
      for (auto& sup : s->supertypes) {
        Resolution r = index_.resolve(sup.raw_name, *p.ctx);
        if (r.kind != ResolutionKind::Unknown) sup.qualified = r.qualified_name;
      }
    }
    index_.note_same_package_collisions();
    index_.note_supertype_cycles();
    pending_.clear();
    return std::move(index_);
  }

 private:
  struct Pending {
    std::string qualified;
    std::shared_ptr<ImportContext> ctx;
  };
  ProjectIndex index_;
  std::vector<Pending> pending_;
};

// Dependency units first, corpus units second: corpus entries shadow both
// dependency and well-known entries of the same qualified name.
inline ProjectIndex build_project_index(
    const std::vector<const CompilationUnit*>& units,
    const std::vector<const CompilationUnit*>& dependency_units = {}) {
  IndexBuilder builder;
  for (const CompilationUnit* u : dependency_units)
    if (u) builder.add_unit(*u, TypeOrigin::Dependency);
  for (const CompilationUnit* u : units)
    if (u) builder.add_unit(*u, TypeOrigin::Corpus);
  return builder.finish();
}

// Convenience form used by tests.
inline ProjectIndex build_project_index(const std::vector<CompilationUnit>& units) {
  std::vector<const CompilationUnit*> ptrs;
  for (const auto& u : units) ptrs.push_back(&u);
  return build_project_index(ptrs);
}

// Resolution order: explicit import, same-package corpus type, wildcard
// import, well-known table; anything else is unknown.
inline Resolution resolve_type_name(const std::string& name,
                                    const CompilationUnit& unit,
                                    const ProjectIndex& index) {
  return index.resolve(name, unit);
}

inline Ternary is_subtype_of(const TypeSummary& type, const std::string& target,
                             const ProjectIndex& index) {
  return index.is_subtype_of(type, target);
}

// Qualified name of a declaration inside its unit.
inline std::string qualified_name_of(const CompilationUnit& unit,
                                     const TypeDecl& decl) {
  return unit.package_name.empty() ? decl.path()
                                   : unit.package_name + "." + decl.path();
}

}  // namespace perfume
