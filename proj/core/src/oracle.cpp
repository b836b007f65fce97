#include "choiceaudit/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "choiceaudit/axioms.hpp"
#include "choiceaudit/operators.hpp"
#include "choiceaudit/rationalize.hpp"

namespace choiceaudit {

std::string_view to_string(OperatorClass c) {
  switch (c) {
    case OperatorClass::All: return "all";
    case OperatorClass::Monotone: return "monotone";
    case OperatorClass::DoublyMonotone: return "doubly-monotone";
    case OperatorClass::MonotoneIdempotent: return "monotone-idempotent";
    case OperatorClass::DoublyMonotoneIdempotent: return "doubly-monotone-idempotent";
    case OperatorClass::Grounded: return "grounded";
    case OperatorClass::GroundedMonotone: return "grounded-monotone";
  }
  throw std::invalid_argument("unknown operator class");
}

OperatorClass operator_class_for(ModelClass model) {
  switch (model) {
    case ModelClass::Aic: return OperatorClass::Monotone;
    case ModelClass::Raic: return OperatorClass::DoublyMonotone;
    case ModelClass::Graic: return OperatorClass::DoublyMonotoneIdempotent;
    case ModelClass::Gaic: return OperatorClass::Grounded;
    case ModelClass::Gmaic: return OperatorClass::GroundedMonotone;
    case ModelClass::Unclassified: break;
  }
  throw std::invalid_argument("an unclassified model has no operator search space");
}

std::vector<StrictPreference> enumerate_linear_orders(const Universe& u) {
  const int n = u.size();
  if (n > 8) throw std::invalid_argument("linear-order enumeration is capped at 8 alternatives");
  std::vector<AltId> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<StrictPreference> out;
  do {
    out.push_back(StrictPreference::from_ranking(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace {

using TableFn = std::function<void(std::span<const MenuMask>)>;

int class_cap(OperatorClass c) {
  switch (c) {
    case OperatorClass::All:
    case OperatorClass::Grounded:
    case OperatorClass::GroundedMonotone:
      return 3;
    default:
      return 4;
  }
}

// Lexicographic odometer over every total table, with the image of menu 1
// restricted to [first_lo, first_hi] so callers can split the space.
void all_tables_range(int n, MenuMask first_lo, MenuMask first_hi, const TableFn& fn) {
  const MenuMask full = mask_for(n);
  if (first_lo > first_hi) return;
  std::vector<MenuMask> t(static_cast<std::size_t>(full) + 1, 1);
  t[0] = 0;
  t[1] = first_lo;
  while (true) {
    fn(t);
    MenuMask m = full;
    for (; m >= 2; --m) {
      if (t[m] < full) {
        ++t[m];
        break;
      }
      t[m] = 1;
    }
    if (m >= 2) continue;
    if (t[1] == first_hi) break;
    ++t[1];
  }
}

// Depth-first search in ascending mask order; each image must contain the
// union of the images one element below, which is exactly monotonicity.
void monotone_dfs(int n, MenuMask m, std::vector<MenuMask>& t, bool idempotent_only,
                  const TableFn& fn) {
  const MenuMask full = mask_for(n);
  if (m > full) {
    if (idempotent_only && !detail::k_idempotent(t, n, nullptr)) return;
    fn(t);
    return;
  }
  MenuMask lower = 0;
  for (MenuMask bs = m; bs != 0; bs &= bs - 1) lower |= t[m & ~(bs & (MenuMask{0} - bs))];
  const MenuMask rest = full & ~lower;
  MenuMask sub = 0;
  while (true) {
    const MenuMask v = lower | sub;
    if (v != 0) {
      t[m] = v;
      monotone_dfs(n, m + 1, t, idempotent_only, fn);
    }
    if (sub == rest) break;
    sub = (sub - rest) & rest;
  }
  t[m] = 0;
}

void relabelling_tables(int n, bool idempotent_only, const TableFn& fn) {
  const MenuMask full = mask_for(n);
  std::vector<AltId> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<MenuMask> t(static_cast<std::size_t>(full) + 1, 0);
  do {
    for (MenuMask m = 1; m <= full; ++m) {
      MenuMask img = 0;
      for (MenuMask bs = m; bs != 0; bs &= bs - 1)
        img |= MenuMask{1} << perm[static_cast<std::size_t>(std::countr_zero(bs))];
      t[m] = img;
    }
    if (!detail::k_doubly_monotone(t, n, nullptr))
      throw std::logic_error("a relabelling table failed double monotonicity");
    if (idempotent_only && !detail::k_idempotent(t, n, nullptr)) continue;
    fn(t);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

// Singleton images are forced to the singleton itself and every other image
// is a nonempty subset of its menu; that is exactly the grounded class.
void grounded_dfs(int n, MenuMask m, std::vector<MenuMask>& t, bool monotone_only,
                  const TableFn& fn) {
  const MenuMask full = mask_for(n);
  if (m > full) {
    MenuPair w;
    if (!detail::k_grounded_consistent(t, n, &w) || !detail::k_singleton_idempotent(t, n, &w))
      throw std::logic_error("a grounded table failed its defining properties");
    if (monotone_only && !detail::k_monotone(t, n, nullptr)) return;
    fn(t);
    return;
  }
  if (std::popcount(m) == 1) {
    t[m] = m;
    grounded_dfs(n, m + 1, t, monotone_only, fn);
    t[m] = 0;
    return;
  }
  for (MenuMask sub = m & (MenuMask{0} - m);; sub = (sub - m) & m) {
    if (sub != 0) {
      t[m] = sub;
      grounded_dfs(n, m + 1, t, monotone_only, fn);
    }
    if (sub == m) break;
  }
  t[m] = 0;
}

}  // namespace

void for_each_operator_table(int n, OperatorClass c, const TableFn& fn) {
  if (n < 1 || n > class_cap(c))
    throw std::invalid_argument("operator enumeration for class \"" +
                                std::string(to_string(c)) + "\" is capped at " +
                                std::to_string(class_cap(c)) + " alternatives");
  const MenuMask full = mask_for(n);
  std::vector<MenuMask> t(static_cast<std::size_t>(full) + 1, 0);
  switch (c) {
    case OperatorClass::All:
      all_tables_range(n, 1, full, fn);
      return;
    case OperatorClass::Monotone:
      monotone_dfs(n, 1, t, false, fn);
      return;
    case OperatorClass::MonotoneIdempotent:
      monotone_dfs(n, 1, t, true, fn);
      return;
    case OperatorClass::DoublyMonotone:
      relabelling_tables(n, false, fn);
      return;
    case OperatorClass::DoublyMonotoneIdempotent:
      relabelling_tables(n, true, fn);
      return;
    case OperatorClass::Grounded:
      grounded_dfs(n, 1, t, false, fn);
      return;
    case OperatorClass::GroundedMonotone:
      grounded_dfs(n, 1, t, true, fn);
      return;
  }
  throw std::invalid_argument("unknown operator class");
}

std::vector<InterpretationOperator> enumerate_operators(const Universe& u, OperatorClass c) {
  std::vector<InterpretationOperator> out;
  for_each_operator_table(u.size(), c, [&](std::span<const MenuMask> t) {
    out.emplace_back(u.size(), std::vector<MenuMask>(t.begin(), t.end()));
  });
  return out;
}

std::uint64_t total_choice_function_count(int n) {
  if (n < 1 || n > 3)
    throw std::invalid_argument("choice-function enumeration is capped at 3 alternatives");
  const int menus = (1 << n) - 1;
  std::uint64_t count = 1;
  for (int i = 0; i < menus; ++i) count *= static_cast<std::uint64_t>(n);
  return count;
}

ChoiceDataset choice_function_from_index(const Universe& u, std::uint64_t index) {
  const int n = u.size();
  std::uint64_t power = total_choice_function_count(n);  // n^(#menus)
  if (index >= power) throw std::invalid_argument("choice-function index out of range");
  const MenuMask full = u.full_mask();
  std::vector<std::pair<MenuMask, AltId>> obs;
  obs.reserve(full);
  for (MenuMask m = 1; m <= full; ++m) {
    power /= static_cast<std::uint64_t>(n);
    obs.emplace_back(m, static_cast<AltId>((index / power) % static_cast<std::uint64_t>(n)));
  }
  return ChoiceDataset(u, std::move(obs));
}

void for_each_choice_function(int n, const std::function<void(std::span<const AltId>)>& fn) {
  (void)total_choice_function_count(n);  // validates the cap
  const int menus = (1 << n) - 1;
  std::vector<AltId> digits(static_cast<std::size_t>(menus), 0);
  while (true) {
    fn(digits);
    int i = menus - 1;
    while (i >= 0 && digits[static_cast<std::size_t>(i)] == n - 1)
      digits[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++digits[static_cast<std::size_t>(i)];
  }
}

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::Thm1: return "thm1";
    case TheoremId::Thm2: return "thm2";
    case TheoremId::Thm3: return "thm3";
    case TheoremId::Thm4: return "thm4";
    case TheoremId::Thm5: return "thm5";
    case TheoremId::Prop1: return "prop1";
    case TheoremId::Prop2: return "prop2";
    case TheoremId::Prop4: return "prop4";
    case TheoremId::LogicalConsistency: return "logical-consistency";
  }
  throw std::invalid_argument("unknown theorem id");
}

std::optional<TheoremId> theorem_from_string(std::string_view name) {
  for (TheoremId id :
       {TheoremId::Thm1, TheoremId::Thm2, TheoremId::Thm3, TheoremId::Thm4, TheoremId::Thm5,
        TheoremId::Prop1, TheoremId::Prop2, TheoremId::Prop4, TheoremId::LogicalConsistency})
    if (name == to_string(id)) return id;
  return std::nullopt;
}

namespace {

constexpr std::size_t kMaxCounterexamples = 8;

Universe oracle_universe(int n) {
  static const std::vector<std::string> kLabels = {"x", "y", "z", "w"};
  if (n < 1 || n > static_cast<int>(kLabels.size()))
    throw std::invalid_argument("oracle universes are capped at 4 alternatives");
  return Universe(std::vector<std::string>(kLabels.begin(), kLabels.begin() + n));
}

AxiomVerdict axiom_check(AxiomId a, const ChoiceDataset& d) {
  switch (a) {
    case AxiomId::Nsc: return check_nsc(d);
    case AxiomId::Nbc: return check_nbc(d);
    case AxiomId::Cci: return check_cci(d);
    case AxiomId::Nd: return check_nd(d);
    case AxiomId::Warp: return check_warp(d);
    case AxiomId::Groundedness: return check_groundedness(d);
  }
  throw std::invalid_argument("unknown axiom");
}

std::vector<AltId> choices_of_index(int n, std::uint64_t index) {
  const int menus = (1 << n) - 1;
  std::vector<AltId> digits(static_cast<std::size_t>(menus));
  for (int i = menus - 1; i >= 0; --i) {
    digits[static_cast<std::size_t>(i)] = static_cast<AltId>(index % static_cast<std::uint64_t>(n));
    index /= static_cast<std::uint64_t>(n);
  }
  return digits;
}

std::string render_choices(const Universe& u, std::span<const AltId> digits) {
  std::string out;
  for (MenuMask m = 1; m <= u.full_mask(); ++m) {
    if (!out.empty()) out += "; ";
    out += "c(" + menu_to_string(u, Menu(m)) + ")=" + u.label(digits[m - 1]);
  }
  return out;
}

// Choice function index derived by the agent (order, table): the digit string
// of best-of-image choices, menu 1 most significant.
std::uint64_t derived_index(const StrictPreference& order, std::span<const MenuMask> t, int n) {
  const MenuMask full = mask_for(n);
  std::uint64_t idx = 0;
  for (MenuMask m = 1; m <= full; ++m)
    idx = idx * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(*order.best_of(Menu(t[m])));
  return idx;
}

// Evaluates `flag` on every total choice function, split across threads in
// contiguous index ranges; the output is independent of the split.
template <typename Flag>
std::vector<std::uint8_t> scan_choice_functions(const Universe& u, int threads, Flag flag) {
  const std::uint64_t total = total_choice_function_count(u.size());
  std::vector<std::uint8_t> out(total, 0);
  const int workers = std::clamp(threads, 1, 16);
  auto run = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i)
      out[i] = flag(choice_function_from_index(u, i));
  };
  if (workers == 1 || total < 2 * static_cast<std::uint64_t>(workers)) {
    run(0, total);
    return out;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t begin = total * static_cast<std::uint64_t>(w) / workers;
    const std::uint64_t end = total * (static_cast<std::uint64_t>(w) + 1) / workers;
    pool.emplace_back(run, begin, end);
  }
  for (auto& th : pool) th.join();
  return out;
}

// Marks which choice-function indices are derived by some (order, table)
// agent of the class, and counts the tables.
std::uint64_t mark_representable(int n, OperatorClass klass,
                                 const std::vector<StrictPreference>& orders,
                                 std::vector<std::uint8_t>& repr) {
  std::uint64_t tables = 0;
  for_each_operator_table(n, klass, [&](std::span<const MenuMask> t) {
    ++tables;
    for (const StrictPreference& order : orders) repr[derived_index(order, t, n)] = 1;
  });
  return tables;
}

CharacterizationReport axiom_vs_class(TheoremId id, int n, int threads,
                                      std::span<const AxiomId> axioms, OperatorClass klass) {
  const Universe u = oracle_universe(n);
  CharacterizationReport report;
  report.theorem = id;
  report.n = n;

  const std::vector<std::uint8_t> axiom_ok =
      scan_choice_functions(u, threads, [&](const ChoiceDataset& d) -> std::uint8_t {
        for (AxiomId a : axioms)
          if (!axiom_check(a, d).holds) return 0;
        return 1;
      });

  const std::vector<StrictPreference> orders = enumerate_linear_orders(u);
  std::vector<std::uint8_t> repr(axiom_ok.size(), 0);
  const std::uint64_t tables = mark_representable(n, klass, orders, repr);

  std::uint64_t axiom_positive = 0, representable = 0, mismatches = 0;
  for (std::uint64_t i = 0; i < axiom_ok.size(); ++i) {
    axiom_positive += axiom_ok[i];
    representable += repr[i];
    if (axiom_ok[i] == repr[i]) continue;
    ++mismatches;
    if (report.counterexamples.size() >= kMaxCounterexamples) continue;
    CounterexampleRecord rec;
    rec.dataset_choices = choices_of_index(n, i);
    const ChoiceDataset d = choice_function_from_index(u, i);
    for (AxiomId a : axioms)
      rec.verdicts.emplace_back(std::string(to_string(a)), axiom_check(a, d).holds);
    rec.verdicts.emplace_back("representable", repr[i] != 0);
    rec.detail = std::string(repr[i] ? "representable although an axiom fails: "
                                     : "axioms hold but no agent in the \"" +
                                           std::string(to_string(klass)) +
                                           "\" class derives this choice function: ") +
                 render_choices(u, rec.dataset_choices);
    report.counterexamples.push_back(std::move(rec));
  }

  report.counts["datasets"] = axiom_ok.size();
  report.counts["axiom-positive"] = axiom_positive;
  report.counts["representable"] = representable;
  report.counts["mismatches"] = mismatches;
  report.counts["linear-orders"] = orders.size();
  report.counts["operators"] = tables;
  report.equivalence_holds = mismatches == 0;
  return report;
}

CharacterizationReport dual_warp_adjudication(TheoremId id, int n, int threads,
                                              OperatorClass klass) {
  const Universe u = oracle_universe(n);
  CharacterizationReport report;
  report.theorem = id;
  report.n = n;

  const std::vector<std::uint8_t> flags =
      scan_choice_functions(u, threads, [&](const ChoiceDataset& d) -> std::uint8_t {
        const std::uint8_t warp = check_warp(d).holds ? 1 : 0;
        const std::uint8_t grounded = check_groundedness(d).holds ? 1 : 0;
        return static_cast<std::uint8_t>(warp | (grounded << 1));
      });

  const std::vector<StrictPreference> orders = enumerate_linear_orders(u);
  std::vector<std::uint8_t> repr(flags.size(), 0);
  const std::uint64_t tables = mark_representable(n, klass, orders, repr);

  DualOutcome literal, repaired;
  std::uint64_t representable = 0, literal_mismatches = 0, repaired_mismatches = 0;
  for (std::uint64_t i = 0; i < flags.size(); ++i) {
    const bool warp = (flags[i] & 1) != 0;
    const bool grounded = (flags[i] & 2) != 0;
    const bool rep = repr[i] != 0;
    representable += rep;
    literal.axiom_positives += warp;
    repaired.axiom_positives += warp && grounded;
    auto record = [&](DualOutcome& side, const char* claim) {
      CounterexampleRecord rec;
      rec.dataset_choices = choices_of_index(n, i);
      rec.verdicts.emplace_back("WARP", warp);
      rec.verdicts.emplace_back("GROUNDEDNESS", grounded);
      rec.verdicts.emplace_back("representable", rep);
      rec.detail = std::string(claim) + ": " + render_choices(u, rec.dataset_choices);
      if (side.counterexamples.size() < kMaxCounterexamples)
        side.counterexamples.push_back(std::move(rec));
    };
    if (warp != rep) {
      ++literal_mismatches;
      record(literal, rep ? "representable although WARP fails"
                          : "WARP holds yet no identity-operator agent derives this");
    }
    if ((warp && grounded) != rep) {
      ++repaired_mismatches;
      record(repaired, rep ? "representable although WARP or groundedness fails"
                           : "WARP and groundedness hold yet no identity-operator agent "
                             "derives this");
    }
  }
  literal.holds = literal_mismatches == 0;
  repaired.holds = repaired_mismatches == 0;

  report.counts["datasets"] = flags.size();
  report.counts["warp-positive"] = literal.axiom_positives;
  report.counts["warp-and-grounded-positive"] = repaired.axiom_positives;
  report.counts["representable"] = representable;
  report.counts["literal-mismatches"] = literal_mismatches;
  report.counts["repaired-mismatches"] = repaired_mismatches;
  report.counts["linear-orders"] = orders.size();
  report.counts["operators"] = tables;
  // The claim under adjudication is the literal one; the repaired variant is
  // reported alongside. The top-level verdict requires both to hold.
  report.equivalence_holds = literal.holds && repaired.holds;
  for (const auto& source : {repaired.counterexamples, literal.counterexamples})
    for (const CounterexampleRecord& rec : source)
      if (report.counterexamples.size() < kMaxCounterexamples)
        report.counterexamples.push_back(rec);
  report.literal = std::move(literal);
  report.repaired = std::move(repaired);
  return report;
}

CharacterizationReport identification_property(TheoremId id, int n, int threads) {
  const Universe u = oracle_universe(n);
  const MenuMask full = u.full_mask();
  CharacterizationReport report;
  report.theorem = id;
  report.n = n;

  const std::uint64_t total = total_choice_function_count(n);
  const std::vector<StrictPreference> orders = enumerate_linear_orders(u);
  const std::size_t stride = static_cast<std::size_t>(full) + 1;

  std::vector<std::uint64_t> rep_count(total, 0);
  std::vector<MenuMask> pref_and(total * static_cast<std::size_t>(n));
  for (std::uint64_t i = 0; i < total; ++i)
    for (int a = 0; a < n; ++a)
      pref_and[i * static_cast<std::size_t>(n) + static_cast<std::size_t>(a)] =
          full & ~(MenuMask{1} << a);
  std::vector<MenuMask> cons_and(total * stride, full);

  std::uint64_t tables = 0;
  for_each_operator_table(n, OperatorClass::Monotone, [&](std::span<const MenuMask> t) {
    ++tables;
    for (const StrictPreference& order : orders) {
      const std::uint64_t idx = derived_index(order, t, n);
      ++rep_count[idx];
      for (int a = 0; a < n; ++a)
        pref_and[idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(a)] &=
            order.row(a);
      for (MenuMask m = 1; m <= full; ++m) cons_and[idx * stride + m] &= t[m];
    }
  });

  const std::vector<std::uint8_t> nsc_ok = scan_choice_functions(
      u, threads, [](const ChoiceDataset& d) -> std::uint8_t { return check_nsc(d).holds; });

  std::uint64_t nsc_positive = 0, mismatches = 0;
  for (std::uint64_t i = 0; i < total; ++i) {
    const bool nsc = nsc_ok[i] != 0;
    nsc_positive += nsc;
    std::string failure;
    if (!nsc) {
      if (rep_count[i] != 0) failure = "represented although the revealed relation is cyclic";
    } else if (rep_count[i] == 0) {
      failure = "revealed relation is acyclic yet no monotone-operator agent derives this";
    } else {
      const ChoiceDataset d = choice_function_from_index(u, i);
      if (id == TheoremId::Prop1) {
        const RevealedRelation rel = revealed_one_step(d);
        for (int a = 0; a < n && failure.empty(); ++a)
          if (rel.closure.row(a) !=
              pref_and[i * static_cast<std::size_t>(n) + static_cast<std::size_t>(a)])
            failure = "intersection of representation preferences differs from the "
                      "revealed closure at alternative " +
                      u.label(a);
      } else {
        const RevealedConsideration cons = revealed_consideration(d);
        for (MenuMask m = 1; m <= full && failure.empty(); ++m)
          if (cons.table[m] != cons_and[i * stride + m])
            failure = "intersection of interpreted menus differs from revealed "
                      "consideration at menu " +
                      menu_to_string(u, Menu(m));
      }
    }
    if (failure.empty()) continue;
    ++mismatches;
    if (report.counterexamples.size() >= kMaxCounterexamples) continue;
    CounterexampleRecord rec;
    rec.dataset_choices = choices_of_index(n, i);
    if (id == TheoremId::Prop2)
      rec.operator_images.assign(cons_and.begin() + static_cast<std::ptrdiff_t>(i * stride + 1),
                                 cons_and.begin() + static_cast<std::ptrdiff_t>((i + 1) * stride));
    rec.verdicts.emplace_back("NSC", nsc);
    rec.verdicts.emplace_back("representable", rep_count[i] != 0);
    rec.detail = failure + ": " + render_choices(u, rec.dataset_choices);
    report.counterexamples.push_back(std::move(rec));
  }

  report.counts["datasets"] = total;
  report.counts["nsc-positive"] = nsc_positive;
  report.counts["mismatches"] = mismatches;
  report.counts["linear-orders"] = orders.size();
  report.counts["operators"] = tables;
  report.equivalence_holds = mismatches == 0;
  return report;
}

CharacterizationReport closure_equivalence(int n, int threads) {
  const MenuMask full = mask_for(n);
  CharacterizationReport report;
  report.theorem = TheoremId::Prop4;
  report.n = n;

  struct Accumulator {
    std::uint64_t tables = 0, monotone = 0, union_closed = 0, intersection_closed = 0,
                  mismatches = 0;
    std::vector<CounterexampleRecord> records;
  };
  std::vector<Accumulator> accumulators(full);
  std::atomic<MenuMask> next{1};
  auto worker = [&] {
    while (true) {
      const MenuMask v = next.fetch_add(1);
      if (v > full) return;
      Accumulator& acc = accumulators[v - 1];
      all_tables_range(n, v, v, [&](std::span<const MenuMask> t) {
        ++acc.tables;
        const bool mono = detail::k_monotone(t, n, nullptr);
        const bool uni = detail::k_union_closed(t, n, nullptr);
        const bool inter = detail::k_intersection_closed(t, n, nullptr);
        acc.monotone += mono;
        acc.union_closed += uni;
        acc.intersection_closed += inter;
        if (mono == uni && uni == inter) return;
        ++acc.mismatches;
        if (acc.records.size() >= kMaxCounterexamples) return;
        CounterexampleRecord rec;
        rec.operator_images.assign(t.begin() + 1, t.end());
        rec.verdicts.emplace_back("monotone", mono);
        rec.verdicts.emplace_back("union-closed", uni);
        rec.verdicts.emplace_back("intersection-closed", inter);
        rec.detail = "closure flags disagree on this operator table";
        acc.records.push_back(std::move(rec));
      });
    }
  };
  const int workers = std::clamp(threads, 1, static_cast<int>(full));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::uint64_t tables = 0, monotone = 0, uni = 0, inter = 0, mismatches = 0;
  for (const Accumulator& acc : accumulators) {
    tables += acc.tables;
    monotone += acc.monotone;
    uni += acc.union_closed;
    inter += acc.intersection_closed;
    mismatches += acc.mismatches;
    for (const CounterexampleRecord& rec : acc.records)
      if (report.counterexamples.size() < kMaxCounterexamples)
        report.counterexamples.push_back(rec);
  }
  report.counts["tables"] = tables;
  report.counts["monotone"] = monotone;
  report.counts["union-closed"] = uni;
  report.counts["intersection-closed"] = inter;
  report.counts["mismatches"] = mismatches;
  report.equivalence_holds = mismatches == 0;
  return report;
}

CharacterizationReport battery_equivalence(int n) {
  CharacterizationReport report;
  report.theorem = TheoremId::LogicalConsistency;
  report.n = n;

  std::uint64_t monotone_ops = 0, agreements = 0, relabellings = 0, alt_disagreements = 0;
  for_each_operator_table(n, OperatorClass::Monotone, [&](std::span<const MenuMask> t) {
    ++monotone_ops;
    const std::pair<const char*, bool> flags[] = {
        {"consistent", detail::k_consistent(t, n, nullptr)},
        {"double-intersection-closed", detail::k_double_intersection_closed(t, n, nullptr)},
        {"doubly-monotone", detail::k_doubly_monotone(t, n, nullptr)},
        {"negation-eliminating", detail::k_negation_eliminating(t, n, nullptr)},
        {"injective", detail::k_injective(t, n, nullptr)},
        {"surjective", detail::k_surjective(t, n, nullptr)},
        {"relabelling", detail::k_relabelling(t, n, nullptr).has_value()},
    };
    bool agree = true;
    for (const auto& [name, value] : flags) agree = agree && (value == flags[0].second);
    agreements += agree;
    relabellings += flags[6].second;
    const bool alt_negation = detail::k_negation_eliminating_incl_full(t, n, nullptr);
    const bool alt_disagrees = alt_negation != flags[3].second;
    alt_disagreements += alt_disagrees;
    if ((agree && !alt_disagrees) || report.counterexamples.size() >= kMaxCounterexamples)
      return;
    CounterexampleRecord rec;
    rec.operator_images.assign(t.begin() + 1, t.end());
    for (const auto& [name, value] : flags) rec.verdicts.emplace_back(name, value);
    rec.verdicts.emplace_back("negation-eliminating-incl-full", alt_negation);
    rec.detail = agree ? "the two complement conventions disagree on this operator"
                       : "battery flags disagree on this monotone operator";
    report.counterexamples.push_back(std::move(rec));
  });

  std::uint64_t factorial = 1;
  for (int i = 2; i <= n; ++i) factorial *= static_cast<std::uint64_t>(i);
  report.counts["monotone-operators"] = monotone_ops;
  report.counts["battery-agreements"] = agreements;
  report.counts["relabellings"] = relabellings;
  report.counts["expected-relabellings"] = factorial;
  report.counts["alt-negation-disagreements"] = alt_disagreements;
  report.equivalence_holds =
      agreements == monotone_ops && relabellings == factorial && alt_disagreements == 0;
  return report;
}

}  // namespace

CharacterizationReport verify_characterization(TheoremId id, int n, int threads) {
  if (n < 2 || n > 3)
    throw std::invalid_argument("exhaustive verification runs at 2 or 3 alternatives");
  if (threads < 1) threads = 1;
  switch (id) {
    case TheoremId::Thm1: {
      const AxiomId axioms[] = {AxiomId::Nsc};
      return axiom_vs_class(id, n, threads, axioms, OperatorClass::Monotone);
    }
    case TheoremId::Thm2: {
      const AxiomId axioms[] = {AxiomId::Nbc, AxiomId::Cci, AxiomId::Nd};
      return axiom_vs_class(id, n, threads, axioms, OperatorClass::DoublyMonotone);
    }
    case TheoremId::Thm4: {
      const AxiomId axioms[] = {AxiomId::Groundedness};
      return axiom_vs_class(id, n, threads, axioms, OperatorClass::Grounded);
    }
    case TheoremId::Thm3:
      return dual_warp_adjudication(id, n, threads, OperatorClass::DoublyMonotoneIdempotent);
    case TheoremId::Thm5:
      return dual_warp_adjudication(id, n, threads, OperatorClass::GroundedMonotone);
    case TheoremId::Prop1:
    case TheoremId::Prop2:
      return identification_property(id, n, threads);
    case TheoremId::Prop4:
      return closure_equivalence(n, threads);
    case TheoremId::LogicalConsistency:
      return battery_equivalence(n);
  }
  throw std::invalid_argument("unknown theorem id");
}

IdentificationOracleResult identification_oracle(const ChoiceDataset& d, ModelClass model) {
  const int n = d.universe().size();
  if (n > 3) throw std::invalid_argument("the identification oracle is capped at 3 alternatives");
  if (!d.is_total())
    throw std::invalid_argument("the identification oracle needs a total dataset");
  const MenuMask full = d.universe().full_mask();
  const OperatorClass klass = operator_class_for(model);
  const std::vector<StrictPreference> orders = enumerate_linear_orders(d.universe());

  IdentificationOracleResult out;
  std::vector<MenuMask> pref_rows(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) pref_rows[static_cast<std::size_t>(a)] = full & ~(MenuMask{1} << a);
  out.consideration_intersection.assign(static_cast<std::size_t>(full) + 1, full);
  out.consideration_intersection[0] = 0;

  for_each_operator_table(n, klass, [&](std::span<const MenuMask> t) {
    for (const StrictPreference& order : orders) {
      bool represents = true;
      for (MenuMask m = 1; m <= full && represents; ++m)
        represents = *order.best_of(Menu(t[m])) == *d.choice(m);
      if (!represents) continue;
      ++out.representation_count;
      for (int a = 0; a < n; ++a) pref_rows[static_cast<std::size_t>(a)] &= order.row(a);
      for (MenuMask m = 1; m <= full; ++m) out.consideration_intersection[m] &= t[m];
    }
  });
  out.preference_intersection = StrictPreference::from_rows(n, std::move(pref_rows));
  return out;
}

SimulationResult simulate(std::uint64_t seed, ModelClass model, const Universe& u) {
  const OperatorClass klass = operator_class_for(model);
  const std::vector<StrictPreference> orders = enumerate_linear_orders(u);
  std::mt19937_64 rng(seed);
  const StrictPreference& order = orders[rng() % orders.size()];

  std::uint64_t count = 0;
  for_each_operator_table(u.size(), klass, [&](std::span<const MenuMask>) { ++count; });
  const std::uint64_t target = rng() % count;
  std::vector<MenuMask> table;
  std::uint64_t seen = 0;
  for_each_operator_table(u.size(), klass, [&](std::span<const MenuMask> t) {
    if (seen++ == target) table.assign(t.begin(), t.end());
  });

  AgentSpec agent(order, InterpretationOperator(u.size(), std::move(table)), model);
  ChoiceDataset dataset = derive_choice_function(agent, u);
  return SimulationResult{std::move(agent), std::move(dataset)};
}

}  // namespace choiceaudit
