#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "perfume/catalog/catalog.hpp"

namespace perfume {

struct LocalizedText {
  std::string name;
  std::string description;
};

// One locale's display strings, keyed by descriptor i18n key. The "en"
// bundle is complete; any other bundle may be partial and falls back.
struct LocaleBundle {
  std::string tag;  // BCP-47 style, lower-cased for lookup
  std::map<std::string, LocalizedText> entries;
};

namespace detail {

inline std::string lower_tag(std::string tag) {
  std::transform(tag.begin(), tag.end(), tag.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return tag;
}

inline std::string language_of(const std::string& tag) {
  auto dash = tag.find('-');
  return dash == std::string::npos ? tag : tag.substr(0, dash);
}

inline LocaleBundle builtin_en() {
  LocaleBundle b;
  b.tag = "en";
  const char* texts[kPerfumeCount] = {
      "Cloneable implementation whose clone() delegates to super.clone().",
      "equals(Object) opening with a reference check and a type check.",
      "Iterator whose next() throws NoSuchElementException when exhausted.",
      "Comparable type declaring both compareTo and equals.",
      "Subclass with own fields overriding equals of an equals-defining superclass.",
      "Type overriding equals(Object) and hashCode() together.",
      "EnumMap or EnumSet used for enum-keyed collections.",
      "assert statement validating state inside a private method.",
      "Fixed parameter of the element type declared before a varargs parameter.",
      "switch carrying a default case as a safety net.",
      "instanceof with a pattern binding instead of a separate cast.",
      "try-with-resources managing closeable resources.",
      "Getter and setter pair that is synchronized on both sides.",
      "JUnit 5 test class and methods kept package-private.",
      "Exception assertion whose lambda performs exactly one call.",
      "Static nested builder constructing its enclosing type.",
      "Singleton via private constructors or a single-constant enum.",
      "Constructor taking an instance of its own class to copy.",
      "Public method guarding its reference parameters against null.",
      "All-static utility class with a lone private constructor.",
  };
  for (const auto& d : catalog())
    b.entries[d.i18n_key] = {d.name, texts[d.id - 1]};
  return b;
}

inline LocaleBundle builtin_de() {
  LocaleBundle b;
  b.tag = "de";
  struct Row {
    const char* name;
    const char* text;
  };
  const Row rows[kPerfumeCount] = {
      {"Clone-Bauplan",
       "Cloneable-Implementierung, deren clone() an super.clone() delegiert."},
      {"Equals-Bauplan",
       "equals(Object) beginnt mit Referenz- und Typprüfung."},
      {"Iterator next() hält den Vertrag ein",
       "next() wirft NoSuchElementException, wenn nichts mehr übrig ist."},
      {"compareTo zusammen mit equals überschrieben",
       "Comparable-Typ deklariert compareTo und equals."},
      {"equals der Oberklasse überschrieben",
       "Unterklasse mit eigenen Feldern überschreibt equals der Oberklasse."},
      {"equals und hashCode im Paar",
       "Typ überschreibt equals(Object) und hashCode() gemeinsam."},
      {"Optimierte Collections für Enums",
       "EnumMap oder EnumSet für enum-basierte Collections."},
      {"‘assert’ in privater Methode",
       "assert-Anweisung prüft Zustand in einer privaten Methode."},
      {"Mindestens X Varargs",
       "Fester Parameter des Elementtyps vor dem Varargs-Parameter."},
      {"Defensiver default-Fall",
       "switch mit default-Fall als Sicherheitsnetz."},
      {"Pattern Matching mit ‘instanceof’",
       "instanceof mit Musterbindung statt separatem Cast."},
      {"Ressourcenverwaltung mit try",
       "try-with-resources verwaltet schließbare Ressourcen."},
      {"Zugriffsmethoden paarweise synchronisiert",
       "Getter und Setter sind beide synchronized."},
      {"JUnit-5-Tests paketprivat",
       "JUnit-5-Testklasse und -Methoden bleiben paketprivat."},
      {"Ein Aufruf im Ausnahme-Test",
       "Ausnahme-Assertion, deren Lambda genau einen Aufruf enthält."},
      {"Builder-Muster",
       "Statische innere Builder-Klasse erzeugt die äußere Klasse."},
      {"Singleton-Muster",
       "Singleton über private Konstruktoren oder ein Enum mit einer Konstante."},
      {"Kopierkonstruktor",
       "Konstruktor übernimmt eine Instanz der eigenen Klasse als Vorlage."},
      {"Defensive null-Prüfung",
       "Öffentliche Methode sichert Referenzparameter gegen null ab."},
      {"Keine Instanziierung von Utility-Klassen",
       "Rein statische Klasse mit einem einzigen privaten Konstruktor."},
  };
  for (const auto& d : catalog())
    b.entries[d.i18n_key] = {rows[d.id - 1].name, rows[d.id - 1].text};
  return b;
}

}  // namespace detail

// Holds the compiled-in bundles plus any bundles loaded from override
// files. Lookup: exact tag, then bare language, then "en".
class LocaleRegistry {
 public:
  LocaleRegistry() {
    add_bundle(detail::builtin_en());
    add_bundle(detail::builtin_de());
  }

  void add_bundle(LocaleBundle bundle) {
    bundle.tag = detail::lower_tag(bundle.tag);
    auto& slot = bundles_[bundle.tag];
    if (slot.tag.empty()) slot.tag = bundle.tag;
    for (auto& [key, text] : bundle.entries) slot.entries[key] = std::move(text);
  }

  bool has_locale(const std::string& tag) const {
    return bundles_.count(detail::lower_tag(tag)) > 0;
  }

  LocalizedText localized(int id, const std::string& locale) const {
    const PerfumeDescriptor& d = descriptor(id);  // validates the id
    std::string tag = detail::lower_tag(locale);
    for (const std::string& candidate :
         {tag, detail::language_of(tag), std::string("en")}) {
      auto bit = bundles_.find(candidate);
      if (bit == bundles_.end()) continue;
      auto eit = bit->second.entries.find(d.i18n_key);
      if (eit != bit->second.entries.end()) return eit->second;
    }
    return {d.name, ""};
  }

 private:
  std::map<std::string, LocaleBundle> bundles_;
};

inline const LocaleRegistry& default_locales() {
  static const LocaleRegistry instance;
  return instance;
}

inline LocalizedText localized(int id, const std::string& locale) {
  return default_locales().localized(id, locale);
}

// Parses an override bundle: UTF-8 key=value lines with keys of form
// perfume.<id>.name / perfume.<id>.description. '#' starts a comment line.
inline LocaleBundle parse_locale_bundle(const std::string& text, std::string tag,
                                        std::vector<std::string>* warnings = nullptr) {
  LocaleBundle bundle;
  bundle.tag = std::move(tag);
  std::size_t start = 0;
  int line_no = 0;
  auto warn = [&](const std::string& msg) {
    if (warnings)
      warnings->push_back("locale bundle line " + std::to_string(line_no) + ": " + msg);
  };
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string line = text.substr(
        start, end == std::string::npos ? std::string::npos : end - start);
    ++line_no;
    start = end == std::string::npos ? text.size() + 1 : end + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      warn("missing '='");
      continue;
    }
    std::string key = line.substr(first, eq - first);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
    std::string value = line.substr(eq + 1);
    if (key.rfind("perfume.", 0) != 0) {
      warn("unknown key '" + key + "'");
      continue;
    }
    auto second_dot = key.find('.', 8);
    if (second_dot == std::string::npos) {
      warn("malformed key '" + key + "'");
      continue;
    }
    std::string id_part = key.substr(8, second_dot - 8);
    std::string field = key.substr(second_dot + 1);
    int id = 0;
    try {
      id = std::stoi(id_part);
    } catch (...) {
      warn("bad perfume id '" + id_part + "'");
      continue;
    }
    if (id < 1 || id > kPerfumeCount) {
      warn("perfume id out of range '" + id_part + "'");
      continue;
    }
    auto& entry = bundle.entries["perfume." + id_part];
    if (field == "name") entry.name = value;
    else if (field == "description") entry.description = value;
    else warn("unknown field '" + field + "'");
  }
  return bundle;
}

}  // namespace perfume
