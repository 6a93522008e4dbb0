#pragma once
// Instance configuration: a sectioned key = value text format describing
// group, ring, action, and budgets, resolved into a ring-with-action plus
// enumeration limits. Named presets are stored as config text and run
// through the same parser, so there is exactly one construction path.
// Every rejection carries the 1-based line and column of the offender.

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hofix/gring.hpp"

namespace hofix {

struct ConfigFile {
  struct Item {
    std::string value;
    int line = 0, col = 0;  // of the value
    int key_col = 0;
  };
  struct Section {
    int line = 0, col = 0;  // of the header
    std::map<std::string, Item> items;
  };
  std::map<std::string, Section> sections;
};

namespace detail {

inline std::string cfg_trim(const std::string& s, int* first_col = nullptr) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  if (first_col) *first_col = static_cast<int>(a) + 1;
  return s.substr(a, b - a);
}

inline ConfigError cfg_error(int line, int col, const std::string& msg) {
  return ConfigError("config error at line " + std::to_string(line) +
                     ", column " + std::to_string(col) + ": " + msg);
}

}  // namespace detail

inline ConfigFile parse_config_text(const std::string& text) {
  ConfigFile cf;
  std::string current;
  int lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string raw = text.substr(pos, nl == std::string::npos ? nl : nl - pos);
    pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    int col0 = 1;
    std::string line = detail::cfg_trim(raw, &col0);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw detail::cfg_error(lineno, col0 + static_cast<int>(line.size()) - 1,
                                "section header is missing the closing bracket");
      std::string name = detail::cfg_trim(line.substr(1, line.size() - 2));
      if (name.empty())
        throw detail::cfg_error(lineno, col0, "empty section name");
      if (cf.sections.count(name))
        throw detail::cfg_error(lineno, col0, "duplicate section [" + name + "]");
      cf.sections[name] = {lineno, col0, {}};
      current = name;
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw detail::cfg_error(lineno, col0, "expected key = value or [section]");
    if (current.empty())
      throw detail::cfg_error(lineno, col0, "key outside of any section");
    int key_rel = 0, val_rel = 0;
    std::string key = detail::cfg_trim(line.substr(0, eq), &key_rel);
    std::string value = detail::cfg_trim(line.substr(eq + 1), &val_rel);
    int key_col = col0 + key_rel - 1;
    int val_col = col0 + static_cast<int>(eq) + 1 + val_rel - 1;
    if (key.empty()) throw detail::cfg_error(lineno, key_col, "empty key");
    if (value.empty())
      throw detail::cfg_error(lineno, val_col, "empty value for key '" + key + "'");
    auto& sec = cf.sections[current];
    if (sec.items.count(key))
      throw detail::cfg_error(lineno, key_col,
                              "duplicate key '" + key + "' in [" + current + "]");
    sec.items[key] = {value, lineno, val_col, key_col};
  }
  return cf;
}

// A resolved instance: the ring with its group action, plus budget limits.
struct InstanceSpec {
  std::string name;
  GRing gr;
  Budget budget;
};

namespace detail {

inline long long cfg_int(const ConfigFile::Item& it, const std::string& key) {
  if (it.value.empty() ||
      !std::all_of(it.value.begin(), it.value.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw cfg_error(it.line, it.col,
                    "value of '" + key + "' must be a nonnegative integer, got '" +
                        it.value + "'");
  long long v = 0;
  for (char c : it.value) {
    v = v * 10 + (c - '0');
    if (v > 4'000'000'000'000LL)
      throw cfg_error(it.line, it.col, "value of '" + key + "' is out of range");
  }
  return v;
}

struct SectionView {
  const ConfigFile::Section* sec = nullptr;
  std::string name;
  std::vector<std::string> seen;

  const ConfigFile::Item& require(const std::string& key) {
    auto it = sec->items.find(key);
    if (it == sec->items.end())
      throw cfg_error(sec->line, sec->col,
                      "section [" + name + "] is missing required key '" + key + "'");
    seen.push_back(key);
    return it->second;
  }
  const ConfigFile::Item* optional(const std::string& key) {
    auto it = sec->items.find(key);
    if (it == sec->items.end()) return nullptr;
    seen.push_back(key);
    return &it->second;
  }
  void reject_unknown() {
    for (const auto& [key, item] : sec->items)
      if (std::find(seen.begin(), seen.end(), key) == seen.end())
        throw cfg_error(item.line, item.key_col,
                        "unknown key '" + key + "' in section [" + name + "]");
  }
};

}  // namespace detail

inline InstanceSpec resolve_config(const ConfigFile& cf,
                                   const std::string& name = "config") {
  for (const auto& [sname, sec] : cf.sections)
    if (sname != "group" && sname != "ring" && sname != "action" &&
        sname != "budgets")
      throw detail::cfg_error(sec.line, sec.col, "unknown section [" + sname + "]");
  auto view = [&](const std::string& sname) {
    auto it = cf.sections.find(sname);
    if (it == cf.sections.end())
      throw ConfigError("config error: missing required section [" + sname + "]");
    return detail::SectionView{&it->second, sname, {}};
  };

  InstanceSpec spec;
  spec.name = name;

  auto group_sec = view("group");
  const auto& gkind = group_sec.require("kind");
  FiniteGroup G;
  if (gkind.value == "cyclic") {
    long long order = detail::cfg_int(group_sec.require("order"), "order");
    if (order < 1 || order > 64)
      throw detail::cfg_error(gkind.line, gkind.col,
                              "cyclic group order must be between 1 and 64");
    G = make_cyclic_group(static_cast<int>(order));
  } else if (gkind.value == "symmetric3") {
    G = make_symmetric3();
  } else {
    throw detail::cfg_error(gkind.line, gkind.col,
                            "unknown group kind '" + gkind.value +
                                "' (expected cyclic or symmetric3)");
  }
  group_sec.reject_unknown();

  auto ring_sec = view("ring");
  const auto& rkind = ring_sec.require("kind");
  const auto& pitem = ring_sec.require("p");
  long long p = detail::cfg_int(pitem, "p");
  long long degree = 1;
  if (const auto* d = ring_sec.optional("degree")) degree = detail::cfg_int(*d, "degree");
  if (p < 2 || p > 97)
    throw detail::cfg_error(pitem.line, pitem.col,
                            "p must be a prime between 2 and 97");
  if (degree < 1 || degree > 6)
    throw detail::cfg_error(rkind.line, rkind.col, "degree must be between 1 and 6");
  bool ring_is_product = false;
  FiniteRing R;
  if (rkind.value == "field") {
    try {
      if (degree == 1) {
        R = make_prime_field(static_cast<int>(p));
      } else {
        auto mod = default_modulus(static_cast<int>(p), static_cast<int>(degree));
        if (!mod)
          throw detail::cfg_error(rkind.line, rkind.col,
                                  "no built-in modulus for p=" + std::to_string(p) +
                                      " degree=" + std::to_string(degree));
        R = make_finite_field(static_cast<int>(p), static_cast<int>(degree), *mod);
      }
    } catch (const ValidationError& e) {
      throw detail::cfg_error(pitem.line, pitem.col, e.what());
    }
  } else if (rkind.value == "product") {
    if (degree != 1)
      throw detail::cfg_error(rkind.line, rkind.col,
                              "product rings are built from prime fields; drop degree");
    try {
      R = make_prime_field(static_cast<int>(p));
    } catch (const ValidationError& e) {
      throw detail::cfg_error(pitem.line, pitem.col, e.what());
    }
    ring_is_product = true;
  } else {
    throw detail::cfg_error(rkind.line, rkind.col,
                            "unknown ring kind '" + rkind.value +
                                "' (expected field or product)");
  }
  ring_sec.reject_unknown();

  auto action_sec = view("action");
  const auto& akind = action_sec.require("kind");
  if (akind.value == "trivial") {
    if (ring_is_product)
      throw detail::cfg_error(akind.line, akind.col,
                              "trivial action on a product ring is not wired up; "
                              "use a field ring");
    spec.gr = make_trivial_gring(R, G);
  } else if (akind.value == "galois") {
    if (ring_is_product)
      throw detail::cfg_error(akind.line, akind.col,
                              "galois action requires a field ring");
    long long dsub = detail::cfg_int(action_sec.require("subfield_degree"),
                                     "subfield_degree");
    if (dsub < 1 || degree % dsub != 0)
      throw detail::cfg_error(akind.line, akind.col,
                              "subfield_degree must divide the ring degree");
    long long expected_order = degree / dsub;
    if (gkind.value != "cyclic" || G.n != expected_order)
      throw detail::cfg_error(akind.line, akind.col,
                              "galois action needs a cyclic group of order " +
                                  std::to_string(expected_order) +
                                  " for this ring and subfield");
    spec.gr = make_galois_gring(static_cast<int>(p), static_cast<int>(degree),
                                static_cast<int>(dsub));
  } else if (akind.value == "swap") {
    if (!ring_is_product)
      throw detail::cfg_error(akind.line, akind.col,
                              "swap action requires a product ring");
    if (gkind.value != "cyclic" || G.n != 2)
      throw detail::cfg_error(akind.line, akind.col,
                              "swap action needs a cyclic group of order 2");
    spec.gr = make_swap_gring(R);
  } else {
    throw detail::cfg_error(akind.line, akind.col,
                            "unknown action kind '" + akind.value +
                                "' (expected trivial, galois, or swap)");
  }
  action_sec.reject_unknown();

  if (cf.sections.count("budgets")) {
    auto bud_sec = view("budgets");
    if (const auto* o = bud_sec.optional("max_objects"))
      spec.budget.max_objects = detail::cfg_int(*o, "max_objects");
    if (const auto* o = bud_sec.optional("max_ops"))
      spec.budget.max_ops = detail::cfg_int(*o, "max_ops");
    bud_sec.reject_unknown();
  }
  return spec;
}

// ---- named presets, stored as config text ----

inline const std::vector<std::pair<std::string, std::string>>& preset_texts() {
  static const std::vector<std::pair<std::string, std::string>> presets = {
      {"f2-c1",
       "[group]\nkind = cyclic\norder = 1\n"
       "[ring]\nkind = field\np = 2\n"
       "[action]\nkind = trivial\n"
       "[budgets]\nmax_objects = 10000000\nmax_ops = 4000000000\n"},
      {"f2-c2-trivial",
       "[group]\nkind = cyclic\norder = 2\n"
       "[ring]\nkind = field\np = 2\n"
       "[action]\nkind = trivial\n"
       "[budgets]\nmax_objects = 10000000\nmax_ops = 4000000000\n"},
      {"f3-c2-trivial",
       "[group]\nkind = cyclic\norder = 2\n"
       "[ring]\nkind = field\np = 3\n"
       "[action]\nkind = trivial\n"
       "[budgets]\nmax_objects = 10000000\nmax_ops = 4000000000\n"},
      {"f4-c2",
       "[group]\nkind = cyclic\norder = 2\n"
       "[ring]\nkind = field\np = 2\ndegree = 2\n"
       "[action]\nkind = galois\nsubfield_degree = 1\n"
       "[budgets]\nmax_objects = 10000000\nmax_ops = 4000000000\n"},
      {"f9-c2",
       "[group]\nkind = cyclic\norder = 2\n"
       "[ring]\nkind = field\np = 3\ndegree = 2\n"
       "[action]\nkind = galois\nsubfield_degree = 1\n"
       "[budgets]\nmax_objects = 10000000\nmax_ops = 4000000000\n"},
      {"f8-c3",
       "[group]\nkind = cyclic\norder = 3\n"
       "[ring]\nkind = field\np = 2\ndegree = 3\n"
       "[action]\nkind = galois\nsubfield_degree = 1\n"
       "[budgets]\nmax_objects = 10000000\nmax_ops = 4000000000\n"},
      {"f2x2-c2-swap",
       "[group]\nkind = cyclic\norder = 2\n"
       "[ring]\nkind = product\np = 2\n"
       "[action]\nkind = swap\n"
       "[budgets]\nmax_objects = 10000000\nmax_ops = 4000000000\n"},
  };
  return presets;
}

inline std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& [n, t] : preset_texts()) names.push_back(n);
  return names;
}

inline InstanceSpec make_preset(const std::string& name) {
  for (const auto& [n, text] : preset_texts())
    if (n == name) return resolve_config(parse_config_text(text), name);
  std::string known;
  for (const auto& [n, t] : preset_texts()) known += (known.empty() ? "" : ", ") + n;
  throw ConfigError("unknown preset '" + name + "' (known: " + known + ")");
}

}  // namespace hofix
