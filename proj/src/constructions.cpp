#include "stanley/constructions.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "stanley/error.hpp"
#include "stanley/search.hpp"

namespace stanley {

namespace {

void require_squarefree(const MonomialIdeal& ideal, const char* what) {
  if (!ideal.squarefree()) {
    throw PreconditionError(std::string(what) + ": ideal must be squarefree");
  }
  if (ideal.n() > kMaxSquarefreeVariables - 1) {
    throw LimitError(std::string(what) + ": too many variables");
  }
}

void require_verified(const CharacteristicPoset& poset, const IntervalPartition& part,
                      const char* what) {
  if (!(part.box == poset.box())) {
    throw PreconditionError(std::string(what) + ": partition has the wrong ambient box");
  }
  const auto v = verify_partition(poset, part);
  if (!v.ok()) {
    throw PreconditionError(std::string(what) + ": input partition does not verify (" +
                            to_string(v.violation->kind) + ")");
  }
}

void require_output(const CharacteristicPoset& poset, const IntervalPartition& part,
                    const char* what) {
  const auto v = verify_partition(poset, part);
  if (!v.ok()) {
    throw VerificationError(std::string(what) + ": output does not verify (" +
                            to_string(v.violation->kind) + ")");
  }
}

/// Index of the only generator containing the variable; throws otherwise.
std::size_t owner_of(const std::vector<Mask>& gens, int var, const char* what) {
  std::size_t owner = gens.size();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!(gens[i] & bit_of(var))) continue;
    if (owner != gens.size()) {
      throw PreconditionError(std::string(what) + ": pivot occurs in several generators");
    }
    owner = i;
  }
  if (owner == gens.size()) {
    throw PreconditionError(std::string(what) + ": pivot occurs in no generator");
  }
  return owner;
}

void check_lift_indices(const MonomialIdeal& ideal, int pivot, int appended,
                        const char* what) {
  if (pivot < 1 || pivot > ideal.n()) {
    throw PreconditionError(std::string(what) + ": pivot out of range");
  }
  if (appended != ideal.n() + 1) {
    throw PreconditionError(std::string(what) + ": appended variable must be n + 1");
  }
}

/// Maps bit p of every endpoint to bit vars[p], then ORs `both` into lo and
/// hi and `top_only` into hi.
IntervalPartition embed(const IntervalPartition& part, const std::vector<int>& vars, int n,
                        Mask both, Mask top_only, const std::string& label = {}) {
  auto map = [&](Mask m) {
    Mask out = 0;
    for (std::size_t p = 0; p < vars.size(); ++p) {
      if ((m >> p) & 1) out |= Mask{1} << vars[p];
    }
    return out;
  };
  IntervalPartition out = IntervalPartition::squarefree(n, {});
  out.intervals.reserve(part.intervals.size());
  for (const auto& iv : part.intervals) {
    out.intervals.push_back({map(iv.lo) | both, map(iv.hi) | both | top_only,
                             label.empty() ? iv.rule : label + ":" + iv.rule});
  }
  return out;
}

/// Restriction of a squarefree ideal to the variables in `keep` (given as a
/// mask), renumbered consecutively. `vars` receives the old 0-based index of
/// each new position.
MonomialIdeal restrict_variables(const std::vector<Mask>& gens, Mask keep,
                                 std::vector<int>& vars, UnitPolicy unit) {
  vars.clear();
  for (Mask rest = keep; rest != 0; rest &= rest - 1) vars.push_back(std::countr_zero(rest));
  std::vector<Mask> reduced;
  for (Mask g : gens) {
    Mask r = 0;
    for (std::size_t p = 0; p < vars.size(); ++p) {
      if ((g >> vars[p]) & 1) r |= Mask{1} << p;
    }
    reduced.push_back(r);
  }
  return MonomialIdeal::from_masks(static_cast<int>(vars.size()), reduced, unit);
}

IntervalPartition maximal_ideal_partition(int m) {
  static std::mutex mu;
  static std::map<int, IntervalPartition> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  std::vector<Mask> gens;
  for (int i = 1; i <= m; ++i) gens.push_back(bit_of(i));
  auto result = sdepth_exact(MonomialIdeal::from_masks(m, gens));
  for (auto& iv : result.witness.intervals) iv.rule = "maximal-ideal";
  if (m <= 12) {
    std::lock_guard lock(mu);
    cache.emplace(m, result.witness);
  }
  return result.witness;
}

std::vector<Interval> boolean_intervals(int n, int k) {
  if (k == n) return {{0, full_mask(n), "upper-discrete"}};
  if (k == 0) {
    std::vector<Interval> out;
    for (Mask c = 0; c <= full_mask(n); ++c) out.push_back({c, c, "upper-discrete"});
    return out;
  }
  auto out = boolean_intervals(n - 1, k);
  const Mask last = bit_of(n);
  for (auto iv : boolean_intervals(n - 1, k - 1)) {
    iv.lo |= last;
    iv.hi |= last;
    out.push_back(iv);
  }
  return out;
}

}  // namespace

const char* to_string(LiftKind kind) {
  switch (kind) {
    case LiftKind::lem: return "lem";
    case LiftKind::rem: return "rem";
    case LiftKind::step0: return "step0";
    case LiftKind::step1: return "step1";
    case LiftKind::step2: return "step2";
    case LiftKind::step3: return "step3";
  }
  return "?";
}

MonomialIdeal lem_lifted_ideal(const MonomialIdeal& ideal, int pivot, int appended) {
  require_squarefree(ideal, "lem_lift");
  check_lift_indices(ideal, pivot, appended, "lem_lift");
  auto gens = ideal.masks();
  gens[owner_of(gens, pivot, "lem_lift")] |= bit_of(appended);
  return MonomialIdeal::from_masks(appended, gens);
}

IntervalPartition lem_lift(const MonomialIdeal& ideal, const IntervalPartition& part,
                           int pivot, int appended) {
  const auto lifted = lem_lifted_ideal(ideal, pivot, appended);
  require_verified(build_poset(ideal), part, "lem_lift");

  const Mask p = bit_of(pivot);
  const Mask a = bit_of(appended);
  IntervalPartition out = IntervalPartition::squarefree(appended, {});
  for (const auto& iv : part.intervals) {
    if (iv.lo & p) {
      out.intervals.push_back({iv.lo | a, iv.hi | a, "lem:B1"});
    } else {
      out.intervals.push_back({iv.lo, iv.hi | a, "lem:B2"});
      if (!(iv.hi & p)) out.intervals.push_back({iv.lo | p, iv.hi | p, "lem:B3"});
    }
  }
  require_output(build_poset(lifted), out, "lem_lift");
  if (min_rho(out) != min_rho(part) + 1) {
    throw VerificationError("lem_lift: min rho did not grow by exactly one");
  }
  return out;
}

IntervalPartition ci_partition(const MonomialIdeal& ideal) {
  require_squarefree(ideal, "ci_partition");
  if (ideal.is_zero() || ideal.is_unit()) {
    throw PreconditionError("ci_partition: needs a proper nonzero ideal");
  }
  if (!is_complete_intersection(ideal)) {
    throw PreconditionError("ci_partition: generators must have disjoint supports");
  }
  const auto gens = ideal.masks();
  const int m = static_cast<int>(gens.size());
  const int n = ideal.n();

  // Canonical labeling: generator i owns position i, extra support
  // variables are appended one lem_lift at a time, free variables last.
  IntervalPartition part = maximal_ideal_partition(m);
  std::vector<Mask> current;
  std::vector<int> vars;
  for (int i = 0; i < m; ++i) {
    current.push_back(bit_of(i + 1));
    vars.push_back(std::countr_zero(gens[i]));
  }
  for (int i = 0; i < m; ++i) {
    int pivot = i + 1;
    for (Mask rest = gens[i] & (gens[i] - 1); rest != 0; rest &= rest - 1) {
      const int cur_n = static_cast<int>(vars.size());
      const auto cur = MonomialIdeal::from_masks(cur_n, current);
      part = lem_lift(cur, part, pivot, cur_n + 1);
      current[i] |= bit_of(cur_n + 1);
      pivot = cur_n + 1;
      vars.push_back(std::countr_zero(rest));
    }
  }
  Mask used = 0;
  for (Mask g : gens) used |= g;
  const Mask free = full_mask(n) & ~used;

  auto out = embed(part, vars, n, 0, free);
  require_output(build_poset(ideal), out, "ci_partition");
  if (min_rho(out) != n - m / 2) {
    throw VerificationError("ci_partition: min rho differs from n - floor(m/2)");
  }
  return out;
}

IntervalPartition boolean_upper_discrete(int n, int k) {
  if (n < 0 || n > 24) throw LimitError("boolean_upper_discrete: n must be in [0, 24]");
  if (k < 0 || k > n) throw PreconditionError("boolean_upper_discrete: k must be in [0, n]");
  return IntervalPartition::squarefree(n, boolean_intervals(n, k));
}

IntervalPartition upper_discrete_refine(const MonomialIdeal& ideal,
                                        const IntervalPartition& part, int k) {
  require_squarefree(ideal, "upper_discrete_refine");
  const auto poset = build_poset(ideal);
  require_verified(poset, part, "upper_discrete_refine");
  if (k < 0) throw PreconditionError("upper_discrete_refine: k must be non-negative");
  if (!part.intervals.empty() && k > min_rho(part)) {
    throw PreconditionError("upper_discrete_refine: k exceeds the partition's Stanley depth");
  }
  IntervalPartition out = IntervalPartition::squarefree(ideal.n(), {});
  for (const auto& iv : part.intervals) {
    const Mask free = iv.hi & ~iv.lo;
    const int r = popcount(free);
    const int local_k = std::max(0, k - popcount(iv.lo));
    for (const auto& sub : boolean_intervals(r, local_k)) {
      out.intervals.push_back({iv.lo | deposit_bits(sub.lo, free),
                               iv.lo | deposit_bits(sub.hi, free), "refine"});
    }
  }
  require_output(poset, out, "upper_discrete_refine");
  if (!is_upper_discrete(out, k)) {
    throw VerificationError("upper_discrete_refine: result is not upper-discrete");
  }
  return out;
}

IntervalPartition rem_lift(const MonomialIdeal& ideal, const IntervalPartition& part, int k,
                           int pivot, int appended) {
  const auto lifted = lem_lifted_ideal(ideal, pivot, appended);
  if (!is_complete_intersection(ideal)) {
    throw PreconditionError("rem_lift: ideal must be a complete intersection");
  }
  require_verified(build_poset(ideal), part, "rem_lift");
  if (!is_upper_discrete(part, k)) {
    throw PreconditionError("rem_lift: input is not upper-discrete of degree k");
  }

  const Mask p = bit_of(pivot);
  const Mask a = bit_of(appended);
  IntervalPartition out = IntervalPartition::squarefree(appended, {});
  for (const auto& iv : part.intervals) {
    const Mask c = iv.lo;
    const Mask d = iv.hi;
    if (c & p) {
      out.intervals.push_back({c | a, d | a, "rem:B1"});
    } else if (popcount(c) <= k) {
      out.intervals.push_back({c, d | a, "rem:B2"});
      if (!(d & p)) out.intervals.push_back({c | p, d | p, "rem:B3"});
    } else {
      out.intervals.push_back({c, c, "rem:B4"});
      out.intervals.push_back({c | p, c | p, "rem:B5"});
      out.intervals.push_back({c | a, c | a, "rem:B6"});
    }
  }
  require_output(build_poset(lifted), out, "rem_lift");
  if (!is_upper_discrete(out, k + 1)) {
    throw VerificationError("rem_lift: output is not upper-discrete of degree k + 1");
  }
  return out;
}

MonomialIdeal GeneratorTriple::ideal() const {
  return MonomialIdeal::from_masks(n, v, UnitPolicy::allow);
}

bool GeneratorTriple::all_type_two() const {
  for (int j = 1; j <= n; ++j) {
    int users = 0;
    for (Mask g : v) users += (g & bit_of(j)) != 0;
    if (users != 2) return false;
  }
  return true;
}

IntervalPartition step0_base(const GeneratorTriple& triple) {
  if (triple.n > 1) throw PreconditionError("step0_base: only n <= 1 is tabulated");
  if (!triple.all_type_two()) throw PreconditionError("step0_base: not all type 2");
  // With n <= 1 one generator is 1, so P is the whole cube.
  IntervalPartition part = IntervalPartition::squarefree(triple.n, {{0, 0, "step0:base"}});
  if (triple.n == 1) part.intervals.push_back({1, 1, "step0:base"});
  require_output(build_poset(triple.ideal()), part, "step0_base");
  return part;
}

StepResult step0_extend(const GeneratorTriple& triple, const IntervalPartition& part,
                        std::array<int, 2> pair, int appended) {
  const int n = triple.n;
  if (appended != n + 1) throw PreconditionError("step0_extend: appended must be n + 1");
  if (n + 1 > kMaxSquarefreeVariables) throw LimitError("step0_extend: too many variables");
  if (pair[0] == pair[1] || pair[0] < 0 || pair[1] < 0 || pair[0] > 2 || pair[1] > 2) {
    throw PreconditionError("step0_extend: pair must name two distinct generators");
  }
  if (!triple.all_type_two()) throw PreconditionError("step0_extend: not all type 2");
  require_verified(build_poset(triple.ideal()), part, "step0_extend");
  if (!is_upper_discrete(part, n - 1)) {
    throw PreconditionError("step0_extend: input is not upper-discrete of degree n - 1");
  }

  // The generator outside the pair plays v_3.
  const Mask untouched = triple.v[3 - pair[0] - pair[1]];
  const Mask full = full_mask(n);
  const Mask a = bit_of(appended);
  IntervalPartition out = IntervalPartition::squarefree(n + 1, {});
  for (const auto& iv : part.intervals) {
    const int top = popcount(iv.hi);
    if (top == n - 1) {
      if (is_subset(untouched, iv.lo)) {
        out.intervals.push_back({iv.lo, iv.hi | a, "step0:B1"});
      } else {
        out.intervals.push_back({iv.lo | a, iv.hi | a, "step0:B2"});
      }
    } else {
      if (iv.lo != full || iv.hi != full) {
        throw VerificationError("step0_extend: top of size n must be the singleton {1..n}");
      }
      out.intervals.push_back({full, full, "step0:B3"});
      out.intervals.push_back({full | a, full | a, "step0:B4"});
    }
  }
  GeneratorTriple next = triple;
  next.n = n + 1;
  next.v[pair[0]] |= a;
  next.v[pair[1]] |= a;
  require_output(build_poset(next.ideal()), out, "step0_extend");
  if (!is_upper_discrete(out, n)) {
    throw VerificationError("step0_extend: output is not upper-discrete of degree n");
  }
  return {next, std::move(out)};
}

StepResult step_private_extend(const GeneratorTriple& triple, int core_n,
                               std::array<int, 3> roles, const IntervalPartition& part,
                               int step, int appended) {
  const int t = core_n;
  if (step < 1 || step > 3) throw PreconditionError("step_private_extend: step must be 1, 2 or 3");
  if (triple.n != t + step - 1) {
    throw PreconditionError("step_private_extend: steps must run in order 1, 2, 3");
  }
  if (appended != t + step) {
    throw PreconditionError("step_private_extend: appended must be core_n + step");
  }
  {
    auto sorted = roles;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 3>{0, 1, 2}) {
      throw PreconditionError("step_private_extend: roles must permute {0, 1, 2}");
    }
  }
  const Mask core = full_mask(t);
  GeneratorTriple core_triple{t, {}};
  for (int g = 0; g < 3; ++g) core_triple.v[g] = triple.v[g] & core;
  if (!core_triple.all_type_two()) {
    throw PreconditionError("step_private_extend: core variables must all be of type 2");
  }
  for (int r = 0; r + 1 < step; ++r) {
    const Mask priv = bit_of(t + r + 1);
    for (int g = 0; g < 3; ++g) {
      if (((triple.v[g] & priv) != 0) != (g == roles[r])) {
        throw PreconditionError("step_private_extend: earlier private variables misplaced");
      }
    }
  }
  require_verified(build_poset(triple.ideal()), part, "step_private_extend");
  const int in_degree = t + step - 2;
  if (!is_upper_discrete(part, in_degree)) {
    throw PreconditionError("step_private_extend: input has the wrong upper-discrete degree");
  }

  const Mask role = triple.v[roles[step - 1]];
  const Mask a = bit_of(appended);
  const Mask p1 = bit_of(t + 1);
  const Mask p2 = bit_of(t + 2);
  const std::string tag = "step" + std::to_string(step) + ":";
  IntervalPartition out = IntervalPartition::squarefree(t + step, {});
  auto lift = [&](const Interval& iv) {
    if (is_subset(role, iv.lo)) {
      out.intervals.push_back({iv.lo | a, iv.hi | a, tag + "B1"});
    } else {
      out.intervals.push_back({iv.lo, iv.hi | a, tag + "B2"});
    }
  };

  if (step == 1 || step == 2) {
    const Mask saturated = step == 1 ? core : core | p1;
    for (const auto& iv : part.intervals) {
      if (popcount(iv.hi) == in_degree) {
        lift(iv);
        continue;
      }
      if (iv.lo != saturated || iv.hi != saturated) {
        throw VerificationError("step_private_extend: unexpected interval above the degree");
      }
      out.intervals.push_back({step == 1 ? saturated : core, saturated, tag + "B3"});
      out.intervals.push_back({saturated | a, saturated | a, tag + "B4"});
    }
  } else {
    std::vector<std::pair<Mask, Mask>> over_core;
    for (const auto& iv : part.intervals) {
      if (!is_subset(core, iv.hi)) {
        if (popcount(iv.hi) != t + 1) {
          throw VerificationError("step_private_extend: step 3 expects |d| = n + 1");
        }
        lift(iv);
      } else {
        over_core.emplace_back(iv.lo, iv.hi);
      }
    }
    std::sort(over_core.begin(), over_core.end());
    std::vector<std::pair<Mask, Mask>> expected{
        {core, core | p1}, {core | p2, core | p2}, {core | p1 | p2, core | p1 | p2}};
    std::sort(expected.begin(), expected.end());
    if (over_core != expected) {
      throw VerificationError("step_private_extend: step 2 output lacks the expected top block");
    }
    out.intervals.push_back({core | p1, core | p1 | p2, tag + "B3"});
    out.intervals.push_back({core | p2, core | p2 | a, tag + "B4"});
    out.intervals.push_back({core | a, core | p1 | a, tag + "B5"});
    out.intervals.push_back({core | p1 | p2 | a, core | p1 | p2 | a, tag + "B6"});
  }

  GeneratorTriple next = triple;
  next.n = t + step;
  next.v[roles[step - 1]] |= a;
  require_output(build_poset(next.ideal()), out, "step_private_extend");
  if (!is_upper_discrete(out, in_degree + 1)) {
    throw VerificationError("step_private_extend: output has the wrong upper-discrete degree");
  }
  return {next, std::move(out)};
}

IntervalPartition three_gen_partition(const MonomialIdeal& ideal,
                                      std::vector<LiftInstruction>* trace) {
  require_squarefree(ideal, "three_gen_partition");
  if (ideal.size() != 3 || ideal.is_unit()) {
    throw PreconditionError("three_gen_partition: needs exactly three minimal generators");
  }
  const int n = ideal.n();
  const auto gens = ideal.masks();
  const auto types = classify_variables(ideal);

  Mask type0 = 0, type3 = 0;
  std::vector<int> core_vars;                 // 0-based
  std::array<std::vector<int>, 3> privates;  // 0-based, ascending
  for (int j = 0; j < n; ++j) {
    switch (types[j].type) {
      case 0: type0 |= Mask{1} << j; break;
      case 1: privates[types[j].owner].push_back(j); break;
      case 2: core_vars.push_back(j); break;
      default: type3 |= Mask{1} << j; break;
    }
  }
  std::array<int, 3> roles{};
  int q = 0;
  for (int g = 0; g < 3; ++g) {
    if (!privates[g].empty()) roles[q++] = g;
  }
  for (int g = 0, r = q; g < 3; ++g) {
    if (privates[g].empty()) roles[r++] = g;
  }
  const int t = static_cast<int>(core_vars.size());
  auto record = [&](LiftKind kind, int appended, std::vector<int> targets, int degree) {
    if (trace) trace->push_back({kind, appended, std::move(targets), degree});
  };

  // Step 0: grow the all-type-2 core one variable at a time.
  auto core_support = [&](int g, int upto) {
    Mask m = 0;
    for (int i = 0; i < upto; ++i) {
      if ((gens[g] >> core_vars[i]) & 1) m |= Mask{1} << i;
    }
    return m;
  };
  GeneratorTriple triple{std::min(t, 1), {}};
  for (int g = 0; g < 3; ++g) triple.v[g] = core_support(g, triple.n);
  IntervalPartition part = step0_base(triple);
  for (int i = 1; i < t; ++i) {
    std::array<int, 2> pair{};
    int found = 0;
    for (int g = 0; g < 3; ++g) {
      if ((gens[g] >> core_vars[i]) & 1) pair[found++] = g;
    }
    auto res = step0_extend(triple, part, pair, i + 1);
    triple = res.triple;
    part = std::move(res.partition);
    record(LiftKind::step0, i + 1, {pair[0], pair[1]}, i);
  }

  // Steps 1..q: one kept private variable per generator that has any.
  std::vector<int> vars = core_vars;
  for (int s = 1; s <= q; ++s) {
    auto res = step_private_extend(triple, t, roles, part, s, t + s);
    triple = res.triple;
    part = std::move(res.partition);
    vars.push_back(privates[roles[s - 1]].front());
    record(static_cast<LiftKind>(static_cast<int>(LiftKind::step0) + s), t + s,
           {roles[s - 1]}, t + s - 1);
  }

  // Remaining private variables come back through lem_lift.
  for (int r = 0; r < q; ++r) {
    const int g = roles[r];
    int pivot = t + r + 1;
    for (std::size_t e = 1; e < privates[g].size(); ++e) {
      const int cur_n = triple.n;
      part = lem_lift(triple.ideal(), part, pivot, cur_n + 1);
      triple.v[g] |= bit_of(cur_n + 1);
      triple.n = cur_n + 1;
      pivot = cur_n + 1;
      vars.push_back(privates[g][e]);
      record(LiftKind::lem, cur_n + 1, {g}, min_rho(part));
    }
  }

  auto out = embed(part, vars, n, type3, type0);
  require_output(build_poset(ideal), out, "three_gen_partition");
  if (min_rho(out) < n - 1) {
    throw VerificationError("three_gen_partition: min rho below n - 1");
  }
  return out;
}

SplitIdeal split_ideal(const MonomialIdeal& ideal) {
  require_squarefree(ideal, "split_ideal");
  if (ideal.is_zero() || ideal.n() < 1) {
    throw PreconditionError("split_ideal: needs a nonzero ideal in at least one variable");
  }
  const int n = ideal.n();
  const auto gens = ideal.masks();
  Mask used = 0;
  for (Mask g : gens) used |= g;
  if (used != full_mask(n)) {
    throw PreconditionError("split_ideal: every variable must occur in some generator");
  }
  const Mask last = bit_of(n);
  std::vector<Mask> without, with;
  for (Mask g : gens) {
    if (!(g & last)) without.push_back(g);
    with.push_back(g & ~last);
  }
  return {without.empty() ? MonomialIdeal::zero(n - 1)
                          : MonomialIdeal::from_masks(n - 1, without),
          MonomialIdeal::from_masks(n - 1, with, UnitPolicy::allow)};
}

IntervalPartition compose_split(const MonomialIdeal& ideal, const IntervalPartition& part0,
                                const IntervalPartition& part1) {
  require_squarefree(ideal, "compose_split");
  const int n = ideal.n();
  if (n < 1 || part1.n() != n - 1 || (!part0.intervals.empty() && part0.n() != n - 1)) {
    throw PreconditionError("compose_split: parts must live in n - 1 variables");
  }
  const Mask last = bit_of(n);
  IntervalPartition out = IntervalPartition::squarefree(n, {});
  for (const auto& iv : part0.intervals) out.intervals.push_back({iv.lo, iv.hi, "split0:" + iv.rule});
  for (const auto& iv : part1.intervals) {
    out.intervals.push_back({iv.lo | last, iv.hi | last, "split1:" + iv.rule});
  }
  require_output(build_poset(ideal), out, "compose_split");
  return out;
}

namespace {

IntervalPartition principal_or_two(const MonomialIdeal& ideal) {
  const int n = ideal.n();
  const auto gens = ideal.masks();
  if (gens.size() == 1) {
    return IntervalPartition::squarefree(n, {{gens[0], full_mask(n), "principal"}});
  }
  // Common variables shift both ends, unused ones are free directions, and
  // what is left is a complete intersection.
  const Mask common = gens[0] & gens[1];
  const Mask free = full_mask(n) & ~(gens[0] | gens[1]);
  std::vector<int> vars;
  const auto reduced =
      restrict_variables(gens, (gens[0] | gens[1]) & ~common, vars, UnitPolicy::reject);
  return embed(ci_partition(reduced), vars, n, common, free);
}

}  // namespace

IntervalPartition four_gen_partition(const MonomialIdeal& ideal) {
  require_squarefree(ideal, "four_gen_partition");
  const int n = ideal.n();
  if (ideal.is_zero()) throw PreconditionError("four_gen_partition: zero ideal");
  if (ideal.size() > 4) {
    throw PreconditionError("four_gen_partition: at most four generators");
  }
  if (ideal.is_unit()) {
    return IntervalPartition::squarefree(n, {{0, full_mask(n), "unit"}});
  }

  IntervalPartition out;
  if (ideal.size() == 3) {
    out = three_gen_partition(ideal);
  } else if (ideal.size() <= 2) {
    out = principal_or_two(ideal);
  } else {
    const auto gens = ideal.masks();
    Mask used = 0;
    for (Mask g : gens) used |= g;
    if (used != full_mask(n)) {
      std::vector<int> vars;
      const auto reduced = restrict_variables(gens, used, vars, UnitPolicy::reject);
      out = embed(four_gen_partition(reduced), vars, n, 0, full_mask(n) & ~used);
    } else {
      const auto split = split_ideal(ideal);
      IntervalPartition part0 = IntervalPartition::squarefree(n - 1, {});
      if (!split.without_last.is_zero()) part0 = four_gen_partition(split.without_last);
      const auto part1 = four_gen_partition(split.with_last);
      out = compose_split(ideal, part0, part1);
    }
  }
  require_output(build_poset(ideal), out, "four_gen_partition");
  const int bound = ideal.size() <= 3 ? n - 1 : n - 2;
  if (min_rho(out) < bound) {
    throw VerificationError("four_gen_partition: min rho below the guaranteed bound");
  }
  return out;
}

}  // namespace stanley
