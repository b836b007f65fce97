#include "choiceaudit/core.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_set>

namespace choiceaudit {

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw std::invalid_argument("universe: label list is empty");
  if (labels_.size() > static_cast<std::size_t>(kMaxSize))
    throw std::invalid_argument("universe: more than " + std::to_string(kMaxSize) + " labels");
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw std::invalid_argument("universe: empty label");
    if (!seen.insert(l).second)
      throw std::invalid_argument("universe: duplicate label \"" + l + "\"");
  }
}

AltId Universe::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw std::invalid_argument("universe: unknown alternative \"" + std::string(name) + "\"");
}

std::optional<AltId> Universe::find(std::string_view name) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == name) return static_cast<AltId>(i);
  return std::nullopt;
}

Menu menu_of(std::initializer_list<AltId> alts) {
  MenuMask m = 0;
  for (AltId a : alts) m |= MenuMask{1} << a;
  return Menu(m);
}

std::vector<AltId> menu_members(Menu m) {
  std::vector<AltId> out;
  out.reserve(static_cast<std::size_t>(m.size()));
  for (MenuMask b = m.bits; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::string menu_to_string(const Universe& u, Menu m) {
  std::string out = "{";
  bool first = true;
  for (AltId a : menu_members(m)) {
    if (!first) out += ",";
    out += u.label(a);
    first = false;
  }
  out += "}";
  return out;
}

std::vector<Menu> all_menus(const Universe& u) {
  std::vector<Menu> out;
  const MenuMask full = u.full_mask();
  out.reserve(full);
  for (MenuMask m = 1; m <= full; ++m) out.push_back(Menu(m));
  return out;
}

std::vector<Menu> proper_subsets(Menu m) {
  std::vector<Menu> out;
  if (m.size() <= 1) return out;
  out.reserve((MenuMask{1} << m.size()) - 2);
  for_each_nonempty_submask(m.bits, [&](MenuMask s) {
    if (s != m.bits) out.push_back(Menu(s));
  });
  return out;
}

StrictPreference::StrictPreference(int universe_size,
                                   const std::vector<std::pair<AltId, AltId>>& pairs)
    : n_(universe_size), rows_(static_cast<std::size_t>(universe_size), 0) {
  if (universe_size < 1 || universe_size > Universe::kMaxSize)
    throw std::invalid_argument("preference: universe size out of range");
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= n_ || b < 0 || b >= n_)
      throw std::invalid_argument("preference: alternative index out of range");
    if (a == b) throw std::invalid_argument("preference: reflexive pair");
    rows_[static_cast<std::size_t>(a)] |= MenuMask{1} << b;
  }
  compute_properties();
}

StrictPreference StrictPreference::from_ranking(std::span<const AltId> best_to_worst) {
  const int n = static_cast<int>(best_to_worst.size());
  std::vector<std::pair<AltId, AltId>> pairs;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    AltId a = best_to_worst[static_cast<std::size_t>(i)];
    if (a < 0 || a >= n || seen[static_cast<std::size_t>(a)])
      throw std::invalid_argument("preference: ranking is not a permutation");
    seen[static_cast<std::size_t>(a)] = true;
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(a, best_to_worst[static_cast<std::size_t>(j)]);
  }
  return StrictPreference(n, pairs);
}

StrictPreference StrictPreference::from_rows(int universe_size, std::vector<MenuMask> rows) {
  StrictPreference p(universe_size, {});
  if (rows.size() != static_cast<std::size_t>(universe_size))
    throw std::invalid_argument("preference: row count mismatch");
  for (int a = 0; a < universe_size; ++a) {
    if ((rows[static_cast<std::size_t>(a)] >> a) & 1u)
      throw std::invalid_argument("preference: reflexive pair");
    if (rows[static_cast<std::size_t>(a)] & ~mask_for(universe_size))
      throw std::invalid_argument("preference: alternative index out of range");
  }
  p.rows_ = std::move(rows);
  p.compute_properties();
  return p;
}

void StrictPreference::compute_properties() {
  props_.asymmetric = true;
  props_.complete = true;
  props_.transitive = true;
  for (int a = 0; a < n_; ++a) {
    for (int b = a + 1; b < n_; ++b) {
      const bool ab = prefers(a, b), ba = prefers(b, a);
      if (ab && ba) props_.asymmetric = false;
      if (!ab && !ba) props_.complete = false;
    }
  }
  for (int a = 0; a < n_ && props_.transitive; ++a) {
    for (MenuMask bs = rows_[static_cast<std::size_t>(a)]; bs != 0; bs &= bs - 1) {
      const int b = std::countr_zero(bs);
      if (rows_[static_cast<std::size_t>(b)] & ~rows_[static_cast<std::size_t>(a)]) {
        props_.transitive = false;
        break;
      }
    }
  }
  // Warshall reachability; a cycle shows up on the diagonal.
  std::vector<MenuMask> reach = rows_;
  for (int k = 0; k < n_; ++k)
    for (int i = 0; i < n_; ++i)
      if ((reach[static_cast<std::size_t>(i)] >> k) & 1u)
        reach[static_cast<std::size_t>(i)] |= reach[static_cast<std::size_t>(k)];
  props_.acyclic = true;
  for (int i = 0; i < n_; ++i)
    if ((reach[static_cast<std::size_t>(i)] >> i) & 1u) props_.acyclic = false;
}

std::vector<std::pair<AltId, AltId>> StrictPreference::pairs() const {
  std::vector<std::pair<AltId, AltId>> out;
  for (int a = 0; a < n_; ++a)
    for (MenuMask bs = rows_[static_cast<std::size_t>(a)]; bs != 0; bs &= bs - 1)
      out.emplace_back(a, std::countr_zero(bs));
  return out;
}

std::size_t StrictPreference::pair_count() const {
  std::size_t c = 0;
  for (MenuMask r : rows_) c += static_cast<std::size_t>(std::popcount(r));
  return c;
}

std::optional<AltId> StrictPreference::best_of(Menu m) const {
  for (MenuMask b = m.bits; b != 0; b &= b - 1) {
    const int a = std::countr_zero(b);
    const MenuMask rest = m.bits & ~(MenuMask{1} << a);
    if ((rows_[static_cast<std::size_t>(a)] & rest) == rest) return a;
  }
  return std::nullopt;
}

std::vector<AltId> StrictPreference::ranking() const {
  if (!is_linear_order())
    throw std::invalid_argument("preference: ranking requires a linear order");
  std::vector<AltId> out(static_cast<std::size_t>(n_));
  for (int a = 0; a < n_; ++a) {
    // (n - 1 - beaten) alternatives rank above a.
    const int beaten = std::popcount(rows_[static_cast<std::size_t>(a)]);
    out[static_cast<std::size_t>(n_ - 1 - beaten)] = a;
  }
  return out;
}

std::string_view to_string(ModelClass c) {
  switch (c) {
    case ModelClass::Aic: return "aic";
    case ModelClass::Raic: return "raic";
    case ModelClass::Graic: return "graic";
    case ModelClass::Gaic: return "gaic";
    case ModelClass::Gmaic: return "gmaic";
    case ModelClass::Unclassified: return "unclassified";
  }
  return "unclassified";
}

std::optional<ModelClass> model_class_from_string(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "aic") return ModelClass::Aic;
  if (lower == "raic") return ModelClass::Raic;
  if (lower == "graic") return ModelClass::Graic;
  if (lower == "gaic") return ModelClass::Gaic;
  if (lower == "gmaic") return ModelClass::Gmaic;
  return std::nullopt;
}

InterpretationOperator::InterpretationOperator(int universe_size,
                                               std::vector<MenuMask> images_by_mask)
    : n_(universe_size), images_(std::move(images_by_mask)) {
  if (n_ < 1 || n_ > Universe::kMaxSize)
    throw std::invalid_argument("operator: universe size out of range");
  const MenuMask full = mask_for(n_);
  if (images_.size() != static_cast<std::size_t>(full) + 1)
    throw std::invalid_argument("operator: table must cover every menu");
  images_[0] = 0;
  for (MenuMask m = 1; m <= full; ++m) {
    if (images_[m] == 0) throw std::invalid_argument("operator: empty image");
    if (images_[m] & ~full) throw std::invalid_argument("operator: image outside universe");
  }
}

InterpretationOperator InterpretationOperator::identity(int universe_size) {
  const MenuMask full = mask_for(universe_size);
  std::vector<MenuMask> t(static_cast<std::size_t>(full) + 1);
  for (MenuMask m = 0; m <= full; ++m) t[m] = m;
  return InterpretationOperator(universe_size, std::move(t));
}

InterpretationOperator InterpretationOperator::relabelling(int universe_size,
                                                           std::span<const AltId> perm) {
  if (perm.size() != static_cast<std::size_t>(universe_size))
    throw std::invalid_argument("operator: permutation size mismatch");
  std::vector<bool> seen(static_cast<std::size_t>(universe_size), false);
  for (AltId p : perm) {
    if (p < 0 || p >= universe_size || seen[static_cast<std::size_t>(p)])
      throw std::invalid_argument("operator: not a permutation");
    seen[static_cast<std::size_t>(p)] = true;
  }
  const MenuMask full = mask_for(universe_size);
  std::vector<MenuMask> t(static_cast<std::size_t>(full) + 1, 0);
  for (MenuMask m = 1; m <= full; ++m)
    for (MenuMask b = m; b != 0; b &= b - 1)
      t[m] |= MenuMask{1} << perm[static_cast<std::size_t>(std::countr_zero(b))];
  return InterpretationOperator(universe_size, std::move(t));
}

AgentSpec::AgentSpec(StrictPreference preference_in, InterpretationOperator op_in, ModelClass tag_in)
    : preference(std::move(preference_in)), op(std::move(op_in)), tag(tag_in) {
  if (preference.universe_size() != op.universe_size())
    throw std::invalid_argument("agent: preference and operator sizes differ");
  if (!preference.is_linear_order())
    throw std::invalid_argument("agent: preference must be a strict linear order");
}

ChoiceDataset::ChoiceDataset(Universe universe, std::vector<std::pair<MenuMask, AltId>> observations)
    : universe_(std::move(universe)), obs_(std::move(observations)) {
  const MenuMask full = universe_.full_mask();
  std::sort(obs_.begin(), obs_.end());
  for (std::size_t i = 0; i < obs_.size(); ++i) {
    auto [menu, alt] = obs_[i];
    if (menu == 0) throw std::invalid_argument("dataset: empty menu");
    if (menu & ~full) throw std::invalid_argument("dataset: menu outside universe");
    if (alt < 0 || alt >= universe_.size())
      throw std::invalid_argument("dataset: choice outside universe");
    if (i > 0 && obs_[i - 1].first == menu)
      throw std::invalid_argument("dataset: duplicate menu");
  }
  total_ = obs_.size() == static_cast<std::size_t>(full);
}

std::optional<AltId> ChoiceDataset::choice(MenuMask m) const {
  auto it = std::lower_bound(obs_.begin(), obs_.end(), m,
                             [](const auto& e, MenuMask v) { return e.first < v; });
  if (it != obs_.end() && it->first == m) return it->second;
  return std::nullopt;
}

}  // namespace choiceaudit
