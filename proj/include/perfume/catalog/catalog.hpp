#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace perfume {

enum class Category {
  JavaStandardLibrary,
  LanguageFeature,
  UnitTesting,
  DesignPattern,
  Other,
};

// Display strings used in reports and the CLI listing.
inline const char* to_string(Category c) {
  switch (c) {
    case Category::JavaStandardLibrary: return "Java Standard Library";
    case Category::LanguageFeature: return "Java language features";
    case Category::UnitTesting: return "Unit Testing Practices";
    case Category::DesignPattern: return "Design Patterns";
    case Category::Other: return "Others";
  }
  return "?";
}

enum class PerfumeKind { SolutionPattern, BestPractice, ContractOrConvention };

inline const char* to_string(PerfumeKind k) {
  switch (k) {
    case PerfumeKind::SolutionPattern: return "solution pattern";
    case PerfumeKind::BestPractice: return "best practice";
    case PerfumeKind::ContractOrConvention: return "contract or convention";
  }
  return "?";
}

struct PerfumeDescriptor {
  int id;
  std::string name;
  Category category;
  std::vector<PerfumeKind> kinds;    // ordered, non-empty
  std::vector<std::string> sources;  // rule provenance tags, informational
  std::string i18n_key;

  std::string kinds_display() const {
    std::string s;
    for (std::size_t i = 0; i < kinds.size(); ++i) {
      if (i) s += ", ";
      s += to_string(kinds[i]);
    }
    return s;
  }
};

inline constexpr int kPerfumeCount = 20;

namespace detail {

inline std::vector<PerfumeDescriptor> make_catalog() {
  using K = PerfumeKind;
  using C = Category;
  auto d = [](int id, std::string name, C cat, std::vector<K> kinds,
              std::vector<std::string> sources) {
    return PerfumeDescriptor{id,
                             std::move(name),
                             cat,
                             std::move(kinds),
                             std::move(sources),
                             "perfume." + std::to_string(id)};
  };
  std::vector<PerfumeDescriptor> all;
  all.push_back(d(1, "Clone blueprint", C::JavaStandardLibrary,
                  {K::SolutionPattern, K::ContractOrConvention},
                  {"RSPEC-1182", "CWE-580"}));
  all.push_back(d(2, "Equals blueprint", C::JavaStandardLibrary,
                  {K::ContractOrConvention, K::BestPractice},
                  {"Effective Java"}));
  all.push_back(d(3, "Iterator next() follows the contract",
                  C::JavaStandardLibrary, {K::ContractOrConvention},
                  {"RSPEC-2272"}));
  all.push_back(d(4, "Override compareTo with equals", C::JavaStandardLibrary,
                  {K::SolutionPattern, K::BestPractice}, {"RSPEC-1210"}));
  all.push_back(d(5, "Override equals of superclass", C::JavaStandardLibrary,
                  {K::SolutionPattern}, {"RSPEC-2160"}));
  all.push_back(d(6, "Paired equals and hashCode", C::JavaStandardLibrary,
                  {K::ContractOrConvention, K::SolutionPattern},
                  {"RSPEC-1206", "CWE-581"}));
  all.push_back(d(7, "Use optimized collections for Enums",
                  C::JavaStandardLibrary, {K::BestPractice, K::SolutionPattern},
                  {"RSPEC-1640", "RSPEC-1641", "Effective Java"}));
  all.push_back(d(8, "‘assert’ in private method", C::LanguageFeature,
                  {K::SolutionPattern, K::BestPractice},
                  {"RSPEC-4274", "Effective Java"}));
  all.push_back(d(9, "At least X varargs", C::LanguageFeature,
                  {K::SolutionPattern}, {"Effective Java"}));
  all.push_back(d(10, "Defensive default case", C::LanguageFeature,
                  {K::SolutionPattern}, {"RSPEC-131", "CWE-478"}));
  all.push_back(d(11, "Pattern matching with ‘instanceof’",
                  C::LanguageFeature, {K::SolutionPattern}, {"RSPEC-6201"}));
  all.push_back(d(12, "Resource management in try-catch", C::LanguageFeature,
                  {K::BestPractice, K::SolutionPattern}, {"RSPEC-2093"}));
  all.push_back(d(13, "Synchronize accessors in pairs", C::LanguageFeature,
                  {K::SolutionPattern}, {"RSPEC-2886"}));
  all.push_back(d(14, "JUnit 5 tests can be package-private", C::UnitTesting,
                  {K::SolutionPattern}, {"RSPEC-5786"}));
  all.push_back(d(15, "Single method call when testing for runtime exceptions",
                  C::UnitTesting, {K::SolutionPattern}, {"RSPEC-5778"}));
  all.push_back(d(16, "Builder pattern", C::DesignPattern, {K::BestPractice},
                  {"Effective Java"}));
  all.push_back(d(17, "Singleton pattern", C::DesignPattern, {K::BestPractice},
                  {"Effective Java"}));
  all.push_back(d(18, "Copy constructor", C::Other, {K::BestPractice},
                  {"Effective Java"}));
  all.push_back(d(19, "Defensive null check", C::Other,
                  {K::BestPractice, K::SolutionPattern}, {"Effective Java"}));
  all.push_back(d(20, "No utility instantiation", C::Other,
                  {K::SolutionPattern, K::BestPractice}, {"RSPEC-1118"}));

  // Compiled-in data is validated once on first use.
  if (all.size() != kPerfumeCount)
    throw std::logic_error("perfume catalog must hold 20 descriptors");
  for (int i = 0; i < kPerfumeCount; ++i) {
    if (all[i].id != i + 1) throw std::logic_error("catalog ids must be 1..20");
    if (all[i].kinds.empty()) throw std::logic_error("descriptor without kinds");
    for (int j = 0; j < i; ++j) {
      if (all[j].name == all[i].name || all[j].i18n_key == all[i].i18n_key)
        throw std::logic_error("duplicate descriptor name or i18n key");
    }
  }
  return all;
}

}  // namespace detail

// All 20 descriptors sorted by id; built once, immutable afterwards.
inline const std::vector<PerfumeDescriptor>& catalog() {
  static const std::vector<PerfumeDescriptor> instance = detail::make_catalog();
  return instance;
}

inline const PerfumeDescriptor& descriptor(int id) {
  if (id < 1 || id > kPerfumeCount)
    throw std::out_of_range("perfume id out of range: " + std::to_string(id));
  return catalog()[static_cast<std::size_t>(id - 1)];
}

}  // namespace perfume
