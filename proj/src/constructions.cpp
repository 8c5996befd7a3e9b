#include "og4/constructions.hpp"

#include <algorithm>
#include <future>

#include "json.hpp"

namespace og4 {

FamilyId family_from_string(const std::string &s) {
  if (s == "A1")
    return FamilyId::A1;
  if (s == "A2")
    return FamilyId::A2;
  if (s == "B1")
    return FamilyId::B1;
  if (s == "B2")
    return FamilyId::B2;
  if (s == "B4")
    return FamilyId::B4;
  if (s == "C1")
    return FamilyId::C1;
  if (s == "C2")
    return FamilyId::C2;
  if (s == "C4")
    return FamilyId::C4;
  throw Error(ErrorKind::BadParameters, "unknown family id: " + s);
}

std::string family_name(FamilyId f) {
  switch (f) {
  case FamilyId::A1:
    return "A1";
  case FamilyId::A2:
    return "A2";
  case FamilyId::B1:
    return "B1";
  case FamilyId::B2:
    return "B2";
  case FamilyId::B4:
    return "B4";
  case FamilyId::C1:
    return "C1";
  case FamilyId::C2:
    return "C2";
  case FamilyId::C4:
    return "C4";
  }
  return "?";
}

std::string family_construction(FamilyId f) {
  switch (f) {
  case FamilyId::A1:
    return "5.1";
  case FamilyId::A2:
    return "5.2";
  case FamilyId::B1:
    return "5.3";
  case FamilyId::B2:
    return "5.4";
  case FamilyId::C1:
    return "5.5";
  case FamilyId::B4:
    return "5.6";
  case FamilyId::C2:
    return "5.7";
  case FamilyId::C4:
    return "5.8";
  }
  return "?";
}

namespace {

struct Expected {
  char which;
  unsigned k;
};

Expected expected_for(FamilyId f) {
  switch (f) {
  case FamilyId::A1:
    return {'a', 1};
  case FamilyId::A2:
    return {'a', 2};
  case FamilyId::B1:
    return {'b', 1};
  case FamilyId::B2:
    return {'b', 2};
  case FamilyId::B4:
    return {'b', 4};
  case FamilyId::C1:
    return {'c', 2};
  case FamilyId::C2:
    return {'c', 4};
  case FamilyId::C4:
    return {'c', 8};
  }
  return {'?', 0};
}

FamilyInstance make_explicit(FamilyId family, const FamilyParams &params,
                             const PermGroup &n_group,
                             const std::vector<Permutation> &spokes,
                             const std::vector<std::pair<Permutation, bool>> &auts,
                             Order group_order, const Budgets &budgets) {
  FamilyInstance inst;
  inst.family = family;
  inst.construction = family_construction(family);
  inst.tier = "explicit";
  auto exp = expected_for(family);
  inst.expected_case = exp.which;
  inst.expected_k = exp.k;
  if (params.p != 0)
    inst.params.push_back({"p", params.p});
  if (params.n != 0)
    inst.params.push_back({"n", params.n});

  inst.regular_group =
      std::make_shared<RegularizedGroup>(n_group, budgets.vertex_budget / 2);
  const RegularizedGroup &reg = *inst.regular_group;

  BiCayleySpec spec;
  spec.group = inst.regular_group;
  for (const auto &s : spokes)
    spec.spoke_set.push_back(reg.index_of(s));
  Graph graph = build_bicayley(spec, budgets.vertex_budget);

  std::vector<Permutation> vertex_gens;
  for (const auto &g : n_group.generators())
    vertex_gens.push_back(bicayley_right_mult(reg, reg.index_of(g)));
  for (const auto &[c, flip] : auts)
    vertex_gens.push_back(bicayley_automorphism(reg, c, flip));

  PermGroup action(2 * reg.size(), std::move(vertex_gens));
  if (action.order(group_order) != group_order)
    throw Error(ErrorKind::AssertionFailed,
                family_name(family) + ": |G| differs from the construction order");
  inst.group_order = group_order;
  inst.pair = OrientedPair::make(std::move(graph), std::move(action));
  return inst;
}

FamilyInstance build_a1(const FamilyParams &params, const Budgets &budgets) {
  long long p = params.p;
  if (!is_prime(p) || p % 4 != 1)
    throw Error(ErrorKind::BadParameters, "A1: p == 1 (mod 4) required, p prime");
  long long q = 0;
  for (long long cand = 2; cand < p; ++cand)
    if (cand * cand % p == p - 1) {
      q = cand;
      break;
    }
  PermGroup n_group = cyclic_and_elementary(static_cast<int>(p), 1);

  auto translation = [&](long long t) {
    std::vector<Point> im(p);
    for (long long x = 0; x < p; ++x)
      im[x] = static_cast<Point>((x + t) % p);
    return Permutation(std::move(im));
  };
  std::vector<Permutation> spokes{translation(1), translation(p - 1), translation(q),
                                  translation(p - q)};
  std::vector<Point> mult(p);
  for (long long x = 0; x < p; ++x)
    mult[x] = static_cast<Point>(q * x % p);
  // delta: x_e -> (q x)_{1-e}
  return make_explicit(FamilyId::A1, params, n_group, spokes,
                       {{Permutation(std::move(mult)), true}},
                       static_cast<Order>(4 * p), budgets);
}

FamilyInstance build_a2(const FamilyParams &params, const Budgets &budgets) {
  long long p = params.p;
  if (!is_prime(p) || p % 4 != 3)
    throw Error(ErrorKind::BadParameters, "A2: p == 3 (mod 4) required, p prime");
  PermGroup n_group = cyclic_and_elementary(static_cast<int>(p), 2);
  const auto &e1 = n_group.generators()[0];
  const auto &e2 = n_group.generators()[1];
  std::vector<Permutation> spokes{e1, e1.inverse(), e2, e2.inverse()};
  // quarter turn (x, y) -> (y, -x) on the p^2 points
  std::vector<Point> rot(p * p);
  for (long long x = 0; x < p; ++x)
    for (long long y = 0; y < p; ++y)
      rot[x * p + y] = static_cast<Point>(y * p + (p - x) % p);
  return make_explicit(FamilyId::A2, params, n_group, spokes,
                       {{Permutation(std::move(rot)), true}},
                       static_cast<Order>(4 * p * p), budgets);
}

FamilyInstance build_b1(const FamilyParams &params, const Budgets &budgets) {
  long long n = params.n;
  if (n < 5 || n % 2 == 0)
    throw Error(ErrorKind::BadParameters, "B1: odd n >= 5 required");
  auto pair = alt_with_pair(static_cast<unsigned>(n), AltPairKind::k1_pair);
  Permutation ab = compose(pair.a, pair.b);
  Permutation ba = compose(pair.b, pair.a);
  // S0 and S0^-1 must be disjoint
  for (const auto &s : {ab, ba})
    for (const auto &t : {ab.inverse(), ba.inverse()})
      if (s == t)
        throw Error(ErrorKind::AssertionFailed, "B1: S0 meets its inverse set");
  std::vector<Permutation> spokes{ab, ba, ab.inverse(), ba.inverse()};
  Order t_order = pair.group.order();
  FamilyInstance inst = make_explicit(
      FamilyId::B1, params, pair.group, spokes,
      {{pair.a, false}, {pair.a, true}}, 4 * t_order, budgets);
  inst.note = "row data taken from the defining construction body";
  return inst;
}

// N = T x T on two blocks, S0 = {(a,b), (b,a)}
struct DoubleData {
  PermGroup n_group;
  std::vector<Permutation> spokes;
  Permutation block_swap;
  GeneratingPair pair;
};

DoubleData double_alt_data(long long n) {
  if (n < 5 || n % 2 == 0)
    throw Error(ErrorKind::BadParameters, "odd n >= 5 required");
  auto pair = alt_with_pair(static_cast<unsigned>(n), AltPairKind::k2_pair);
  Point deg = pair.group.degree();
  Permutation id(deg);
  std::vector<Permutation> gens;
  for (const auto &g : pair.group.generators()) {
    gens.push_back(wreath_element(deg, 2, {g, id}, Permutation(2)));
    gens.push_back(wreath_element(deg, 2, {id, g}, Permutation(2)));
  }
  PermGroup n_group(2 * deg, std::move(gens));
  auto emb = [&](const Permutation &x, const Permutation &y) {
    return wreath_element(deg, 2, {x, y}, Permutation(2));
  };
  DoubleData data{std::move(n_group),
                  {emb(pair.a, pair.b), emb(pair.b, pair.a),
                   emb(pair.a.inverse(), pair.b.inverse()),
                   emb(pair.b.inverse(), pair.a.inverse())},
                  block_top(deg, 2, Permutation::from_cycles(2, {{0, 1}})),
                  pair};
  return data;
}

void assert_s_generates(const RegularizedGroup &reg,
                        const std::vector<Permutation> &spokes, const char *tag) {
  std::vector<std::uint32_t> s_idx;
  for (const auto &s : spokes)
    s_idx.push_back(reg.index_of(s));
  if (reg.closure(s_idx).size() != reg.size())
    throw Error(ErrorKind::AssertionFailed, std::string(tag) + ": <S> != N");
  std::vector<std::uint32_t> squares;
  for (auto s1 : s_idx)
    for (auto s2 : s_idx)
      squares.push_back(reg.multiply(s1, s2));
  if (reg.closure(squares).size() != reg.size())
    throw Error(ErrorKind::AssertionFailed, std::string(tag) + ": <S^2> != N");
}

FamilyInstance build_b2(const FamilyParams &params, const Budgets &budgets) {
  auto data = double_alt_data(params.n);
  Order t_order = data.pair.group.order();
  FamilyInstance inst = make_explicit(
      FamilyId::B2, params, data.n_group, data.spokes,
      {{data.block_swap, false}, {data.block_swap, true}},
      4 * t_order * t_order, budgets);
  assert_s_generates(*inst.regular_group, data.spokes, "B2");
  return inst;
}

FamilyInstance build_c1(const FamilyParams &params, const Budgets &budgets) {
  auto data = double_alt_data(params.n);
  Point deg = data.pair.group.degree();
  Permutation theta =
      find_inverting_conjugator(static_cast<unsigned>(params.n), data.pair.a,
                                data.pair.b);
  Permutation theta_diag = wreath_element(deg, 2, {theta, theta}, Permutation(2));
  Order t_order = data.pair.group.order();
  FamilyInstance inst = make_explicit(
      FamilyId::C1, params, data.n_group, data.spokes,
      {{theta_diag, false}, {data.block_swap, true}}, 4 * t_order * t_order,
      budgets);
  assert_s_generates(*inst.regular_group, data.spokes, "C1");
  return inst;
}

FamilyInstance make_certificate(FamilyId family, const FamilyParams &params) {
  FamilyInstance inst;
  inst.family = family;
  inst.construction = family_construction(family);
  inst.tier = "certificate";
  auto exp = expected_for(family);
  inst.expected_case = exp.which;
  inst.expected_k = exp.k;
  inst.params.push_back({"p", params.p});
  int p = static_cast<int>(params.p);
  switch (family) {
  case FamilyId::B4:
    inst.bundle = construction_data_56(p);
    break;
  case FamilyId::C2:
    inst.bundle = construction_data_57(p);
    break;
  case FamilyId::C4:
    inst.bundle = construction_data_58(p);
    break;
  default:
    throw Error(ErrorKind::BadParameters, "not a certificate family");
  }
  return inst;
}

} // namespace

FamilyInstance build_family(FamilyId family, const FamilyParams &params,
                            const Budgets &budgets) {
  switch (family) {
  case FamilyId::A1:
    return build_a1(params, budgets);
  case FamilyId::A2:
    return build_a2(params, budgets);
  case FamilyId::B1:
    return build_b1(params, budgets);
  case FamilyId::B2:
    return build_b2(params, budgets);
  case FamilyId::C1:
    return build_c1(params, budgets);
  case FamilyId::B4:
  case FamilyId::C2:
  case FamilyId::C4:
    return make_certificate(family, params);
  }
  throw Error(ErrorKind::BadParameters, "unknown family");
}

namespace {

void push_check(VerificationReport &report, const std::string &name, bool ok,
                const std::string &evidence, const std::string &ref) {
  report.checks.push_back({name, ok ? "pass" : "fail", evidence, ref});
}

void verify_explicit(FamilyInstance &inst, const Budgets &budgets,
                     VerificationReport &report) {
  OrientedPair &pair = *inst.pair;
  OrientedCheck oc = check_oriented(pair);
  push_check(report, "four-valent", oc.four_valent, "", "orientedness");
  push_check(report, "connected", oc.connected, "", "orientedness");
  push_check(report, "vertex-transitive", oc.vertex_transitive, "", "orientedness");
  push_check(report, "edge-transitive", oc.edge_transitive, "", "orientedness");
  push_check(report, "two-arc-orbits", oc.two_arc_orbits,
             std::to_string(oc.arc_orbit_count) + " arc orbits", "orientedness");
  push_check(report, "arc-orbits-split-edges", oc.arc_orbits_split_edges, "",
             "orientedness");
  {
    std::string ev;
    for (const auto &orb : oc.stabilizer_neighborhood_orbits)
      ev += (ev.empty() ? "" : " + ") + std::to_string(orb.size());
    push_check(report, "stabilizer-orbits-2+2", oc.stabilizer_orbits_2_2,
               "orbit sizes " + ev, "orientedness");
  }
  push_check(report, "oriented", oc.is_in_OG4, "", "orientedness");
  if (!oc.is_in_OG4)
    return;

  SArcReport sr = s_arc_report(pair);
  push_check(report, "s-arc-regular", sr.regular,
             "s = " + std::to_string(sr.s) + ", oriented s-arc count " +
                 std::to_string(sr.arc_counts[sr.s]) + ", |G| = " +
                 order_to_string(inst.group_order),
             "oriented-s-arc-regularity");
  push_check(report, "stabilizer-chain-2-powers", sr.chain_is_two_powers, "",
             "oriented-s-arc-regularity");

  PairAnalysis analysis = analyze_pair(pair, budgets.order_bound);
  {
    bool degenerate = true;
    std::string ev;
    for (const auto &e : analysis.basic.entries) {
      if (!e.quotient.degenerate())
        degenerate = false;
      ev += (ev.empty() ? "" : "; ") + std::string("order ") +
            order_to_string(e.subgroup_order) + ": " +
            std::to_string(e.orbit_count) + " orbits, quotient " +
            quotient_class_name(e.quotient);
    }
    push_check(report, "normal-quotients-degenerate", degenerate, ev,
               "normal-quotient-classification");
  }
  push_check(report, "biquasiprimitive",
             analysis.basic.type == BasicType::biquasiprimitive,
             basic_type_name(analysis.basic.type) +
                 (analysis.failure.empty() ? "" : " (" + analysis.failure + ")"),
             "basic-type-classification");
  if (analysis.socle) {
    std::string got = std::string(1, analysis.socle->which) + ", k = " +
                      std::to_string(analysis.socle->k) + ", T = " +
                      analysis.socle->t_description;
    bool match = analysis.socle->which == inst.expected_case &&
                 analysis.socle->k == inst.expected_k;
    push_check(report, "socle-case", match,
               "computed (" + got + "), expected (" +
                   std::string(1, inst.expected_case) + ", k = " +
                   std::to_string(inst.expected_k) + ")",
               "socle-structure");
  } else {
    push_check(report, "socle-case", false, analysis.failure, "socle-structure");
  }
}

void verify_certificate(FamilyInstance &inst, const Budgets &budgets,
                        VerificationReport &report) {
  (void)budgets;
  const WreathConstructionData &data = *inst.bundle;
  push_check(report, "tuple-transcription", true,
             "printed tuples match recomputation from the conjugator",
             "construction-data");

  auto c2 = check_condition2(data.H, data.V, data.y, data.phi, data.h_order);
  push_check(report, "core-free", c2.core_free, "", "condition-2");
  push_check(report, "y-not-in-VVphi", c2.y_not_in_VVphi, "", "condition-2");
  push_check(report, "index-two", c2.index_two,
             "|V meet V^phi| = " + order_to_string(c2.intersection_order),
             "condition-2");
  push_check(report, "generates-H", c2.generates,
             "|H| = " + order_to_string(data.h_order), "condition-2");

  std::vector<Permutation> sub_gens{data.y, data.y1};
  if (data.y2)
    sub_gens.push_back(*data.y2);
  PermGroup sub(data.H.degree(), sub_gens);
  bool full = subdirect_full(sub, data.block_degree, data.k, data.t_order);
  push_check(report, "subdirect-full", full,
             "every 1- and 2-block projection has full order",
             "subdirect-fullness");

  for (auto &c : biquasiprimitive_certificate(data))
    report.checks.push_back(c);

  SocleCase sc = classify_socle_case_certificate(data);
  bool match = sc.which == inst.expected_case && sc.k == inst.expected_k;
  push_check(report, "socle-case", match,
             "computed (" + std::string(1, sc.which) + ", k = " +
                 std::to_string(sc.k) + ", T = " + sc.t_description +
                 "), expected (" + std::string(1, inst.expected_case) + ", k = " +
                 std::to_string(inst.expected_k) + ")",
             "socle-structure");
}

} // namespace

VerificationReport verify_family_instance(FamilyInstance &inst,
                                          const Budgets &budgets) {
  VerificationReport report;
  report.family = family_name(inst.family);
  report.construction = inst.construction;
  report.tier = inst.tier;
  report.params = inst.params;
  report.note = inst.note;
  if (inst.tier == "explicit")
    verify_explicit(inst, budgets, report);
  else
    verify_certificate(inst, budgets, report);
  return report;
}

SweepRequest SweepRequest::defaults() {
  SweepRequest req;
  req.instances = {
      {FamilyId::A1, {.p = 5, .n = 0}},  {FamilyId::A1, {.p = 13, .n = 0}},
      {FamilyId::A2, {.p = 3, .n = 0}},  {FamilyId::A2, {.p = 7, .n = 0}},
      {FamilyId::B1, {.p = 0, .n = 5}},  {FamilyId::B2, {.p = 0, .n = 5}},
      {FamilyId::B4, {.p = 7, .n = 0}},  {FamilyId::C1, {.p = 0, .n = 5}},
      {FamilyId::C2, {.p = 7, .n = 0}},  {FamilyId::C4, {.p = 7, .n = 0}},
  };
  return req;
}

SweepRequest SweepRequest::for_families(const std::vector<FamilyId> &families) {
  SweepRequest all = defaults();
  SweepRequest req;
  for (const auto &inst : all.instances)
    if (std::find(families.begin(), families.end(), inst.first) != families.end())
      req.instances.push_back(inst);
  return req;
}

std::vector<SweepRow> table2_sweep(const SweepRequest &request,
                                   const Budgets &budgets, int jobs) {
  auto run_one = [&](const std::pair<FamilyId, FamilyParams> &job) {
    SweepRow row;
    row.family = job.first;
    try {
      FamilyInstance inst = build_family(job.first, job.second, budgets);
      row.report = verify_family_instance(inst, budgets);
    } catch (const std::exception &e) {
      row.report.family = family_name(job.first);
      row.report.construction = family_construction(job.first);
      row.report.tier = "error";
      if (job.second.p != 0)
        row.report.params.push_back({"p", job.second.p});
      if (job.second.n != 0)
        row.report.params.push_back({"n", job.second.n});
      row.report.checks.push_back({"build", "fail", e.what(), "construction-data"});
    }
    row.verified = row.report.all_passed() && row.report.tier != "error";
    return row;
  };

  std::vector<SweepRow> rows(request.instances.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < request.instances.size(); ++i)
      rows[i] = run_one(request.instances[i]);
    return rows;
  }
  std::size_t next = 0;
  while (next < request.instances.size()) {
    std::size_t batch =
        std::min<std::size_t>(static_cast<std::size_t>(jobs),
                              request.instances.size() - next);
    std::vector<std::future<SweepRow>> futures;
    for (std::size_t i = 0; i < batch; ++i)
      futures.push_back(std::async(std::launch::async, run_one,
                                   request.instances[next + i]));
    for (std::size_t i = 0; i < batch; ++i)
      rows[next + i] = futures[i].get();
    next += batch;
  }
  return rows;
}

namespace {

nlohmann::ordered_json report_json(const VerificationReport &report) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["family"] = report.family;
  j["construction"] = report.construction;
  j["tier"] = report.tier;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto &[k, v] : report.params)
    params[k] = v;
  j["params"] = params;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto &c : report.checks)
    checks.push_back({{"name", c.name},
                      {"status", c.status},
                      {"evidence", c.evidence},
                      {"paper_ref", c.paper_ref}});
  j["checks"] = checks;
  if (!report.note.empty())
    j["note"] = report.note;
  j["all_passed"] = report.all_passed();
  return j;
}

} // namespace

std::string report_to_json_string(const VerificationReport &report, int indent) {
  return report_json(report).dump(indent) + "\n";
}

std::string sweep_to_json_string(const std::vector<SweepRow> &rows, int indent) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  std::size_t verified = 0;
  for (const auto &row : rows) {
    nlohmann::ordered_json r = report_json(row.report);
    r["verified"] = row.verified;
    arr.push_back(r);
    verified += row.verified ? 1 : 0;
  }
  j["rows"] = arr;
  j["verified_rows"] = verified;
  j["total_rows"] = rows.size();
  return j.dump(indent) + "\n";
}

} // namespace og4
