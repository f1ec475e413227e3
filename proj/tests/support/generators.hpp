#pragma once

// Seeded generators for property tests. Each test owns a Rng built from a
// fixed seed so failures reproduce.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "wht/corpus_model.hpp"
#include "wht/terminology.hpp"

namespace gen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n) {
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_);
  }
  int between(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(engine_); }

  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[below(items.size())];
  }

 private:
  std::mt19937_64 engine_;
};

// Components drawn from {0, 1, 2, Many}; zero is weighted up so that every
// class and the unclassified region are reached often.
inline oracle::Vec hallmark_vec(Rng& rng) {
  oracle::Vec v{};
  for (auto& c : v) {
    const auto r = rng.below(8);
    c = r < 4 ? 0 : r < 6 ? 1 : r < 7 ? 2 : oracle::kMany;
  }
  return v;
}

inline oracle::Vec exact_vec(Rng& rng, int max_component = 9) {
  oracle::Vec v{};
  for (auto& c : v) c = rng.chance(0.4) ? 0 : rng.between(0, max_component);
  return v;
}

// Printable ASCII including the characters the DSL has to escape, plus
// some multi-byte UTF-8 and the two escaped control characters.
inline std::string text(Rng& rng, std::size_t min_len = 1, std::size_t max_len = 16) {
  static const std::vector<std::string> kExtra = {"\"", "\\", "#", "{", "}", ":", ",", "\n",
                                                  "\t", "é", "ß", "×", "日本", "🙂", " "};
  const std::size_t len = min_len + rng.below(max_len - min_len + 1);
  std::string out;
  for (std::size_t i = 0; i < len; ++i) {
    if (rng.chance(0.15)) {
      out += rng.pick(kExtra);
    } else {
      out += static_cast<char>(rng.between(0x20, 0x7E));
    }
  }
  return out;
}

inline std::string lower_ascii(std::string s) {
  for (char& c : s) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return s;
}

inline std::string trimmed(const std::string& s) {
  const char* space = " \t\n\v\f\r";
  const auto first = s.find_first_not_of(space);
  if (first == std::string::npos) return {};
  return s.substr(first, s.find_last_not_of(space) - first + 1);
}

// Names must hold something besides whitespace.
inline std::string name(Rng& rng) {
  for (;;) {
    std::string out = text(rng);
    if (!trimmed(out).empty()) return out;
  }
}

inline wht::Entity entity(Rng& rng) {
  wht::Entity e;
  e.name = name(rng);
  e.role = static_cast<wht::Role>(rng.below(wht::kRoleCount));
  e.tangibility = static_cast<wht::Tangibility>(rng.below(wht::kTangibilityCount));
  const auto r = rng.below(10);
  e.count = r < 6 ? wht::Count::exact(1) : r < 9 ? wht::Count::exact(1 + rng.below(50)) : wht::Count::many();
  if (rng.chance(0.2)) e.note = text(rng, 0, 24);
  return e;
}

// A corpus that passes validate(): positive unique ids, names unique
// without regard to ASCII case or surrounding whitespace, every count
// positive.
inline wht::Corpus corpus(Rng& rng, std::size_t max_apps = 6) {
  wht::Corpus c;
  std::set<std::int64_t> ids;
  std::set<std::string> names;
  const std::size_t n = rng.below(max_apps + 1);
  while (c.applications.size() < n) {
    wht::Application app;
    app.id = static_cast<std::int64_t>(1 + rng.below(rng.chance(0.1) ? 4'000'000'000ULL : 200));
    app.name = name(rng);
    const std::string key = lower_ascii(trimmed(app.name));
    if (ids.count(app.id) || names.count(key)) continue;
    ids.insert(app.id);
    names.insert(key);
    if (rng.chance(0.7)) app.year = rng.between(1960, 2030);
    if (rng.chance(0.6)) app.genre = text(rng, 0, 12);
    if (rng.chance(0.5)) app.subgenre = text(rng, 0, 12);
    const std::size_t refs = rng.below(4);
    for (std::size_t i = 0; i < refs; ++i) app.refs.push_back(text(rng, 0, 10));
    const std::size_t entities = rng.below(7);
    for (std::size_t i = 0; i < entities; ++i) app.entities.push_back(entity(rng));
    c.applications.push_back(std::move(app));
  }
  return c;
}

}  // namespace gen
