#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Core vocabulary for auditing observed choice behavior: a finite universe of
// alternatives, menus as bit masks over that universe, observed choice data,
// strict preference relations, and interpretation operators (menu -> menu maps).
namespace choiceaudit {

using AltId = int;
using MenuMask = std::uint32_t;

constexpr MenuMask mask_for(int universe_size) {
  return (universe_size >= 32) ? ~MenuMask{0} : ((MenuMask{1} << universe_size) - 1u);
}

// Finite set of named alternatives. Labels are distinct, nonempty, and at most
// kMaxSize of them so any menu fits in one machine word.
class Universe {
 public:
  static constexpr int kMaxSize = 24;

  explicit Universe(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(AltId i) const { return labels_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& labels() const { return labels_; }
  MenuMask full_mask() const { return mask_for(size()); }

  AltId index_of(std::string_view name) const;           // throws on unknown name
  std::optional<AltId> find(std::string_view name) const;

  bool operator==(const Universe&) const = default;

 private:
  std::vector<std::string> labels_;
};

// Nonempty subset of a universe, as a bit mask. Emptiness is checked where
// menus enter the system (constructors, parsers), not on every operation.
struct Menu {
  MenuMask bits = 0;

  Menu() = default;
  constexpr explicit Menu(MenuMask m) : bits(m) {}

  int size() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }
  bool contains(AltId i) const { return ((bits >> i) & 1u) != 0; }
  bool subset_of(Menu other) const { return (bits & ~other.bits) == 0; }
  bool strict_subset_of(Menu other) const { return subset_of(other) && bits != other.bits; }

  Menu with(AltId i) const { return Menu(bits | (MenuMask{1} << i)); }
  Menu without(AltId i) const { return Menu(bits & ~(MenuMask{1} << i)); }

  auto operator<=>(const Menu&) const = default;
};

Menu menu_of(std::initializer_list<AltId> alts);
std::vector<AltId> menu_members(Menu m);                    // ascending indices
std::string menu_to_string(const Universe& u, Menu m);      // "{x,y}"

// Canonical menu order everywhere is ascending mask value; a strict subset
// always has a smaller mask than its superset.
std::vector<Menu> all_menus(const Universe& u);             // 2^n - 1 menus, ascending
std::vector<Menu> proper_subsets(Menu m);                   // nonempty strict subsets, ascending

// Visits every nonempty submask of m in ascending order.
template <typename F>
void for_each_nonempty_submask(MenuMask m, F&& f) {
  if (m == 0) return;
  for (MenuMask s = (0u - m) & m;; s = (s - m) & m) {
    f(s);
    if (s == m) break;
  }
}

// Visits every superset of s inside full (including s itself) in ascending order.
template <typename F>
void for_each_superset_within(MenuMask s, MenuMask full, F&& f) {
  const MenuMask comp = full & ~s;
  f(s);
  if (comp == 0) return;
  for (MenuMask c = (0u - comp) & comp;; c = (c - comp) & comp) {
    f(s | c);
    if (c == comp) break;
  }
}

struct PreferenceProperties {
  bool asymmetric = false;
  bool transitive = false;
  bool complete = false;
  bool acyclic = false;

  bool operator==(const PreferenceProperties&) const = default;
};

// Strict binary preference over alternative indices [0, n). Immutable;
// structural properties are computed at construction.
class StrictPreference {
 public:
  StrictPreference() = default;  // empty relation over an empty universe
  StrictPreference(int universe_size, const std::vector<std::pair<AltId, AltId>>& pairs);
  static StrictPreference from_ranking(std::span<const AltId> best_to_worst);
  static StrictPreference from_rows(int universe_size, std::vector<MenuMask> rows);

  int universe_size() const { return n_; }
  bool prefers(AltId a, AltId b) const { return ((rows_[static_cast<std::size_t>(a)] >> b) & 1u) != 0; }
  MenuMask row(AltId a) const { return rows_[static_cast<std::size_t>(a)]; }

  std::vector<std::pair<AltId, AltId>> pairs() const;  // ascending (a, b)
  std::size_t pair_count() const;
  const PreferenceProperties& properties() const { return props_; }
  bool is_linear_order() const {
    return props_.asymmetric && props_.transitive && props_.complete;
  }

  // Unique element of m preferred to every other element of m, if one exists.
  std::optional<AltId> best_of(Menu m) const;
  // Best-to-worst ranking; requires a linear order.
  std::vector<AltId> ranking() const;

  bool operator==(const StrictPreference&) const = default;

 private:
  int n_ = 0;
  std::vector<MenuMask> rows_;  // bit b of rows_[a] means a is preferred to b
  PreferenceProperties props_;

  void compute_properties();
};

enum class ModelClass { Aic, Raic, Graic, Gaic, Gmaic, Unclassified };

std::string_view to_string(ModelClass c);
std::optional<ModelClass> model_class_from_string(std::string_view name);  // "aic", "raic", ...

// Total map from menus to nonempty menus, stored as a table indexed by mask.
class InterpretationOperator {
 public:
  InterpretationOperator(int universe_size, std::vector<MenuMask> images_by_mask);

  static InterpretationOperator identity(int universe_size);
  static InterpretationOperator relabelling(int universe_size, std::span<const AltId> perm);

  int universe_size() const { return n_; }
  MenuMask image_mask(MenuMask m) const { return images_[m]; }
  Menu image(Menu m) const { return Menu(images_[m.bits]); }
  std::span<const MenuMask> table() const { return images_; }

  bool operator==(const InterpretationOperator&) const = default;

 private:
  int n_ = 0;
  std::vector<MenuMask> images_;  // size 2^n, slot 0 unused and kept 0
};

// Decision maker model: a strict linear order over alternatives plus an
// interpretation operator, optionally tagged with the model class it was
// built or verified under.
struct AgentSpec {
  StrictPreference preference;
  InterpretationOperator op;
  ModelClass tag = ModelClass::Unclassified;

  AgentSpec(StrictPreference preference, InterpretationOperator op,
            ModelClass tag = ModelClass::Unclassified);
};

// Observed choices: a partial map from menus to chosen alternatives. The
// chosen alternative need not belong to the menu (choices may be ungrounded).
class ChoiceDataset {
 public:
  ChoiceDataset(Universe universe, std::vector<std::pair<MenuMask, AltId>> observations);

  const Universe& universe() const { return universe_; }
  std::span<const std::pair<MenuMask, AltId>> observations() const { return obs_; }
  std::size_t observation_count() const { return obs_.size(); }
  bool is_total() const { return total_; }

  std::optional<AltId> choice(MenuMask m) const;
  std::optional<AltId> choice(Menu m) const { return choice(m.bits); }
  bool observed(MenuMask m) const { return choice(m).has_value(); }

 private:
  Universe universe_;
  std::vector<std::pair<MenuMask, AltId>> obs_;  // ascending by mask
  bool total_ = false;
};

}  // namespace choiceaudit
