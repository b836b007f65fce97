#include "choiceaudit/operators.hpp"

#include <stdexcept>

namespace choiceaudit {
namespace detail {

namespace {

inline void put(MenuPair* w, MenuMask a, MenuMask b) {
  if (w != nullptr) *w = MenuPair{a, b};
}

}  // namespace

bool k_monotone(std::span<const MenuMask> images, int n, MenuPair* w) {
  const MenuMask full = mask_for(n);
  for (MenuMask s = 1; s <= full; ++s) {
    bool bad = false;
    for_each_superset_within(s, full, [&](MenuMask t) {
      if (bad || t == s) return;
      if (images[s] & ~images[t]) {
        put(w, s, t);
        bad = true;
      }
    });
    if (bad) return false;
  }
  return true;
}

bool k_union_closed(std::span<const MenuMask> images, int n, MenuPair* w) {
  const MenuMask full = mask_for(n);
  for (MenuMask s = 1; s <= full; ++s)
    for (MenuMask t = 1; t <= full; ++t)
      if ((images[s] | images[t]) & ~images[s | t]) {
        put(w, s, t);
        return false;
      }
  return true;
}

bool k_intersection_closed(std::span<const MenuMask> images, int n, MenuPair* w) {
  const MenuMask full = mask_for(n);
  for (MenuMask s = 1; s <= full; ++s)
    for (MenuMask t = 1; t <= full; ++t) {
      if ((s & t) == 0) continue;
      if (images[s & t] & ~(images[s] & images[t])) {
        put(w, s, t);
        return false;
      }
    }
  return true;
}

bool k_doubly_monotone(std::span<const MenuMask> images, int n, MenuPair* w) {
  const MenuMask full = mask_for(n);
  for (MenuMask s = 1; s <= full; ++s)
    for (MenuMask t = 1; t <= full; ++t) {
      const bool menus_nested = (s & ~t) == 0;
      const bool images_nested = (images[s] & ~images[t]) == 0;
      if (menus_nested != images_nested) {
        put(w, s, t);
        return false;
      }
    }
  return true;
}

bool k_consistent(std::span<const MenuMask> images, int n, MenuPair* w) {
  const MenuMask full = mask_for(n);
  for (MenuMask s = 1; s < full; ++s)
    if (images[s] & images[full ^ s]) {
      put(w, s, full ^ s);
      return false;
    }
  return true;
}

bool k_double_intersection_closed(std::span<const MenuMask> images, int n, MenuPair* w) {
  const MenuMask full = mask_for(n);
  // Disjoint menus are included: I(∅) = ∅ forces their images to be disjoint.
  for (MenuMask s = 1; s <= full; ++s)
    for (MenuMask t = 1; t <= full; ++t) {
      const MenuMask lhs = (s & t) == 0 ? 0 : images[s & t];
      if (lhs != (images[s] & images[t])) {
        put(w, s, t);
        return false;
      }
    }
  return true;
}

bool k_double_union_closed(std::span<const MenuMask> images, int n, MenuPair* w) {
  const MenuMask full = mask_for(n);
  for (MenuMask s = 1; s <= full; ++s)
    for (MenuMask t = 1; t <= full; ++t)
      if (images[s | t] != (images[s] | images[t])) {
        put(w, s, t);
        return false;
      }
  return true;
}

bool k_negation_eliminating(std::span<const MenuMask> images, int n, MenuPair* w) {
  const MenuMask full = mask_for(n);
  for (MenuMask s = 1; s < full; ++s)
    if (images[full ^ s] != (full & ~images[s])) {
      put(w, s, full ^ s);
      return false;
    }
  return true;
}

bool k_negation_eliminating_incl_full(std::span<const MenuMask> images, int n, MenuPair* w) {
  const MenuMask full = mask_for(n);
  if (images[full] != full) {
    put(w, 0, full);
    return false;
  }
  return k_negation_eliminating(images, n, w);
}

bool k_injective(std::span<const MenuMask> images, int n, MenuPair* w) {
  const MenuMask full = mask_for(n);
  for (MenuMask s = 1; s < full; ++s)
    for (MenuMask t = s + 1; t <= full; ++t)
      if (images[s] == images[t]) {
        put(w, s, t);
        return false;
      }
  return true;
}

bool k_surjective(std::span<const MenuMask> images, int n, MenuPair* w) {
  const MenuMask full = mask_for(n);
  std::vector<bool> hit(static_cast<std::size_t>(full) + 1, false);
  for (MenuMask s = 1; s <= full; ++s) hit[images[s]] = true;
  for (MenuMask t = 1; t <= full; ++t)
    if (!hit[t]) {
      put(w, t, t);
      return false;
    }
  return true;
}

bool k_idempotent(std::span<const MenuMask> images, int n, MenuPair* w) {
  const MenuMask full = mask_for(n);
  for (MenuMask s = 1; s <= full; ++s) {
    const MenuMask img = images[s];
    if (images[img] != img) {
      put(w, s, img);
      return false;
    }
  }
  return true;
}

bool k_singleton_idempotent(std::span<const MenuMask> images, int n, MenuPair* w) {
  for (int x = 0; x < n; ++x) {
    const MenuMask img = images[MenuMask{1} << x];
    if (images[img] != img) {
      put(w, MenuMask{1} << x, img);
      return false;
    }
  }
  return true;
}

bool k_grounded_consistent(std::span<const MenuMask> images, int n, MenuPair* w) {
  const MenuMask full = mask_for(n);
  for (MenuMask s = 1; s < full; ++s) {
    bool bad = false;
    for_each_superset_within(s, full, [&](MenuMask t) {
      if (bad || t == full) return;  // T = X has an empty complement: skipped
      if (images[s] & images[full ^ t]) {
        put(w, s, t);
        bad = true;
      }
    });
    if (bad) return false;
  }
  return true;
}

bool k_identity(std::span<const MenuMask> images, int n, MenuPair* w) {
  const MenuMask full = mask_for(n);
  for (MenuMask s = 1; s <= full; ++s)
    if (images[s] != s) {
      put(w, s, s);
      return false;
    }
  return true;
}

std::optional<std::vector<AltId>> k_relabelling(std::span<const MenuMask> images, int n,
                                                MenuPair* w) {
  std::vector<AltId> perm(static_cast<std::size_t>(n));
  MenuMask used = 0;
  for (int x = 0; x < n; ++x) {
    const MenuMask img = images[MenuMask{1} << x];
    if (std::popcount(img) != 1) {
      put(w, MenuMask{1} << x, MenuMask{1} << x);
      return std::nullopt;
    }
    if (used & img) {
      // Earlier singleton with the same image forms the witness pair.
      for (int y = 0; y < x; ++y)
        if (images[MenuMask{1} << y] == img) {
          put(w, MenuMask{1} << y, MenuMask{1} << x);
          break;
        }
      return std::nullopt;
    }
    used |= img;
    perm[static_cast<std::size_t>(x)] = std::countr_zero(img);
  }
  if (!k_double_union_closed(images, n, w)) return std::nullopt;
  return perm;
}

}  // namespace detail

namespace {

FlagWithWitness run(bool (*kernel)(std::span<const MenuMask>, int, MenuPair*),
                    const InterpretationOperator& op) {
  MenuPair w;
  const bool ok = kernel(op.table(), op.universe_size(), &w);
  FlagWithWitness out;
  out.holds = ok;
  if (!ok) out.witness = w;
  return out;
}

void record(OperatorPropertyReport& report, const std::string& name, bool& flag,
            const FlagWithWitness& result) {
  flag = result.holds;
  if (!result.holds && result.witness) report.witnesses[name] = *result.witness;
}

}  // namespace

FlagWithWitness check_monotone(const InterpretationOperator& op) {
  return run(&detail::k_monotone, op);
}

ClosureFlags check_closure_properties(const InterpretationOperator& op) {
  return ClosureFlags{run(&detail::k_union_closed, op),
                      run(&detail::k_intersection_closed, op)};
}

FlagWithWitness check_double_monotonicity(const InterpretationOperator& op) {
  return run(&detail::k_doubly_monotone, op);
}

FlagWithWitness check_idempotence(const InterpretationOperator& op) {
  return run(&detail::k_idempotent, op);
}

GroundedFlags check_grounded(const InterpretationOperator& op) {
  return GroundedFlags{run(&detail::k_grounded_consistent, op),
                       run(&detail::k_singleton_idempotent, op)};
}

OperatorPropertyReport consistency_battery(const InterpretationOperator& op) {
  {
    MenuPair w;
    if (!detail::k_monotone(op.table(), op.universe_size(), &w))
      throw std::invalid_argument("consistency battery requires a monotone operator");
  }
  OperatorPropertyReport report;
  report.monotone = true;
  record(report, "consistent", report.consistent, run(&detail::k_consistent, op));
  record(report, "double_intersection_closed", report.double_intersection_closed,
         run(&detail::k_double_intersection_closed, op));
  record(report, "doubly_monotone", report.doubly_monotone,
         run(&detail::k_doubly_monotone, op));
  record(report, "negation_eliminating", report.negation_eliminating,
         run(&detail::k_negation_eliminating, op));
  record(report, "injective", report.injective, run(&detail::k_injective, op));
  record(report, "surjective", report.surjective, run(&detail::k_surjective, op));
  {
    MenuPair w;
    auto perm = detail::k_relabelling(op.table(), op.universe_size(), &w);
    report.relabelling = perm.has_value();
    if (perm)
      report.relabelling_permutation = std::move(*perm);
    else
      report.witnesses["relabelling"] = w;
  }
  const bool v = report.consistent;
  report.battery_agrees =
      v == report.double_intersection_closed && v == report.doubly_monotone &&
      v == report.negation_eliminating && v == report.injective && v == report.surjective &&
      v == report.relabelling;
  return report;
}

OperatorPropertyReport classify_operator(const InterpretationOperator& op) {
  OperatorPropertyReport report;
  record(report, "monotone", report.monotone, run(&detail::k_monotone, op));
  record(report, "union_closed", report.union_closed, run(&detail::k_union_closed, op));
  record(report, "intersection_closed", report.intersection_closed,
         run(&detail::k_intersection_closed, op));
  record(report, "doubly_monotone", report.doubly_monotone,
         run(&detail::k_doubly_monotone, op));
  record(report, "double_intersection_closed", report.double_intersection_closed,
         run(&detail::k_double_intersection_closed, op));
  record(report, "double_union_closed", report.double_union_closed,
         run(&detail::k_double_union_closed, op));
  record(report, "consistent", report.consistent, run(&detail::k_consistent, op));
  record(report, "negation_eliminating", report.negation_eliminating,
         run(&detail::k_negation_eliminating, op));
  record(report, "injective", report.injective, run(&detail::k_injective, op));
  record(report, "surjective", report.surjective, run(&detail::k_surjective, op));
  record(report, "idempotent", report.idempotent, run(&detail::k_idempotent, op));
  record(report, "singleton_idempotent", report.singleton_idempotent,
         run(&detail::k_singleton_idempotent, op));
  record(report, "grounded_consistent", report.grounded_consistent,
         run(&detail::k_grounded_consistent, op));
  record(report, "identity", report.identity, run(&detail::k_identity, op));
  {
    MenuPair w;
    auto perm = detail::k_relabelling(op.table(), op.universe_size(), &w);
    report.relabelling = perm.has_value();
    if (perm)
      report.relabelling_permutation = std::move(*perm);
    else
      report.witnesses["relabelling"] = w;
  }
  const bool v = report.consistent;
  report.battery_agrees =
      v == report.double_intersection_closed && v == report.doubly_monotone &&
      v == report.negation_eliminating && v == report.injective && v == report.surjective &&
      v == report.relabelling;
  return report;
}

}  // namespace choiceaudit
