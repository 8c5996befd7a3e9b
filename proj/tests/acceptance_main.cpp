// Acceptance suite: runs every top-level criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exit code = number of
// failed criteria.

#include <chrono>
#include <iostream>
#include <map>
#include <sstream>

#include "og4/cli.hpp"
#include "og4/constructions.hpp"
#include "og4/group_indexer.hpp"
#include "oracle.hpp"

using namespace og4;

namespace {

struct Criterion {
  int id;
  std::string label;
  bool pass = true;
  std::string detail;
};

std::map<std::string, std::string> check_status(const VerificationReport &r) {
  std::map<std::string, std::string> m;
  for (const auto &c : r.checks)
    m[c.name] = c.status;
  return m;
}

std::string row_tag(const VerificationReport &r) {
  std::string tag = r.family + "(";
  for (const auto &[k, v] : r.params)
    tag += k + "=" + std::to_string(v);
  return tag + ")";
}

} // namespace

int main() {
  std::vector<Criterion> criteria;
  auto wall_start = std::chrono::steady_clock::now();

  // shared context: the default sweep (builds and verifies all 10 instances)
  auto rows = table2_sweep(SweepRequest::defaults());
  double sweep_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start)
          .count();

  std::vector<const SweepRow *> explicit_rows, certificate_rows;
  for (const auto &row : rows)
    (row.report.tier == "explicit" ? explicit_rows : certificate_rows)
        .push_back(&row);

  // ---- criterion 1: full table reproduction ----------------------------
  {
    Criterion c{1, "table2-reproduction"};
    const std::map<FamilyId, std::pair<char, unsigned>> expected{
        {FamilyId::A1, {'a', 1}}, {FamilyId::A2, {'a', 2}},
        {FamilyId::B1, {'b', 1}}, {FamilyId::B2, {'b', 2}},
        {FamilyId::B4, {'b', 4}}, {FamilyId::C1, {'c', 2}},
        {FamilyId::C2, {'c', 4}}, {FamilyId::C4, {'c', 8}}};
    std::ostringstream detail;
    std::size_t verified = 0;
    for (const auto &row : rows) {
      auto [want_case, want_k] = expected.at(row.family);
      bool row_ok = row.verified;
      std::string want = std::string(1, want_case) + "," + std::to_string(want_k);
      if (row_ok)
        ++verified;
      else
        detail << " " << row_tag(row.report) << " expected (" << want
               << ") but: " << [&] {
                 for (const auto &chk : row.report.checks)
                   if (chk.status == "fail")
                     return chk.name + " failed [" + chk.evidence + "]";
                 return std::string("build failed");
               }() << ";";
    }
    c.pass = verified == rows.size() && sweep_seconds <= 120.0;
    c.detail = std::to_string(verified) + "/" + std::to_string(rows.size()) +
               " rows verified in " + std::to_string(sweep_seconds) + " s;" +
               detail.str();
    criteria.push_back(c);
  }

  // ---- criterion 2: explicit-tier membership in the oriented family ----
  {
    Criterion c{2, "og4-membership-explicit"};
    std::ostringstream detail;
    for (const auto *row : explicit_rows) {
      auto status = check_status(row->report);
      bool ok = status["oriented"] == "pass" && status["two-arc-orbits"] == "pass" &&
                status["stabilizer-orbits-2+2"] == "pass";
      if (!ok) {
        c.pass = false;
        detail << " " << row_tag(row->report) << " not oriented;";
      }
    }
    c.detail = std::to_string(explicit_rows.size()) +
               " explicit instances checked;" + detail.str();
    criteria.push_back(c);
  }

  // ---- criterion 3: oriented s-arc regularity --------------------------
  {
    Criterion c{3, "s-arc-regularity"};
    std::ostringstream detail;
    for (const auto *row : explicit_rows) {
      auto status = check_status(row->report);
      bool ok = status["s-arc-regular"] == "pass" &&
                status["stabilizer-chain-2-powers"] == "pass";
      if (!ok) {
        c.pass = false;
        detail << " " << row_tag(row->report) << ";";
      }
    }
    c.detail = "arc count equals |G| and the stabilizer chain is 2-powered on "
               "every explicit instance;" +
               detail.str();
    criteria.push_back(c);
  }

  // ---- criterion 4: normal-quotient degeneracy -------------------------
  {
    Criterion c{4, "normal-quotient-degeneracy"};
    std::ostringstream detail;
    for (const auto *row : explicit_rows) {
      auto status = check_status(row->report);
      if (status["normal-quotients-degenerate"] != "pass") {
        c.pass = false;
        std::string ev;
        for (const auto &chk : row->report.checks)
          if (chk.name == "normal-quotients-degenerate")
            ev = chk.evidence;
        detail << " " << row_tag(row->report) << " [" << ev << "];";
      }
    }
    c.detail = c.pass ? "every brute-forced minimal normal subgroup gives K1 or K2"
                      : detail.str();
    criteria.push_back(c);
  }

  // ---- criterion 5: condition (2) certificates -------------------------
  {
    Criterion c{5, "condition-2-certificates"};
    std::ostringstream detail;
    auto d56 = construction_data_56(7);
    auto d57 = construction_data_57(7);
    auto d58 = construction_data_58(7);
    for (const auto *data : {&d56, &d57, &d58}) {
      auto res = check_condition2(data->H, data->V, data->y, data->phi,
                                  data->h_order);
      Order expected_h = order_pow(data->t_order, data->k) * data->V.order();
      bool ok = res.all() && data->H.order(data->h_order) == expected_h;
      if (data->construction == "5.6") {
        bool has_h2 = false;
        for (const auto &t : res.intersection_elements)
          if (t == *data->h2)
            has_h2 = true;
        ok = ok && res.intersection_order == 2 && has_h2;
      }
      if (data->construction == "5.7")
        ok = ok && data->V.order() == 2;
      if (!ok) {
        c.pass = false;
        detail << " " << data->construction << " failed;";
      }
    }
    c.detail = "all four clauses hold at p=7 for the three coset families, "
               "|H| = 168^k * |V| exactly;" +
               detail.str();
    criteria.push_back(c);
  }

  // ---- criterion 6: subdirect fullness vs brute force ------------------
  {
    Criterion c{6, "subdirect-fullness"};
    std::ostringstream detail;
    auto d56 = construction_data_56(7);
    auto d57 = construction_data_57(7);
    auto d58 = construction_data_58(7);
    for (const auto *data : {&d56, &d57, &d58}) {
      std::vector<Permutation> gens{data->y, data->y1};
      if (data->y2)
        gens.push_back(*data->y2);
      PermGroup sub(data->H.degree(), gens);
      bool ok = subdirect_full(sub, data->block_degree, data->k, data->t_order);
      // every pairwise projection agrees with a brute-force closure count
      for (unsigned i = 0; ok && i < data->k; ++i)
        for (unsigned j = i + 1; ok && j < data->k; ++j) {
          PermGroup proj = restrict_to_blocks(sub, data->block_degree, {i, j});
          std::uint64_t brute =
              oracle::brute_force_order(proj.generators(), proj.degree(), 40000);
          ok = brute == 28224 &&
               proj.order() == static_cast<Order>(28224);
        }
      if (!ok) {
        c.pass = false;
        detail << " " << data->construction << " failed;";
      }
    }
    c.detail = "pairwise projections all have order 168^2 = 28224, matching "
               "brute-force closure counts;" +
               detail.str();
    criteria.push_back(c);
  }

  // ---- criterion 7: transcription integrity ----------------------------
  {
    Criterion c{7, "tuple-transcription"};
    std::ostringstream detail;
    try {
      auto d56 = construction_data_56(7);
      auto d57 = construction_data_57(7);
      auto d58 = construction_data_58(7);
      for (const auto *data : {&d56, &d57, &d58}) {
        bool ok = compose(data->phi, data->phi) == data->y &&
                  conjugated(data->y, data->h1) == data->y1;
        if (data->h2)
          ok = ok && conjugated(data->h1, data->phi) == *data->h2 &&
               conjugated(data->y, *data->h2) == *data->y2;
        if (!ok) {
          c.pass = false;
          detail << " " << data->construction << " mismatch;";
        }
      }
    } catch (const Error &e) {
      c.pass = false;
      detail << " construction data rejected: " << e.what();
    }
    c.detail = "printed tuples for y, h2, y1, y2 equal recomputation from the "
               "conjugator;" +
               detail.str();
    criteria.push_back(c);
  }

  // ---- criterion 8: engine order and membership oracle -----------------
  {
    Criterion c{8, "engine-oracle-equivalence"};
    std::vector<std::pair<std::string, PermGroup>> groups;
    auto cyc = [](Point n) {
      std::vector<Point> full(n);
      for (Point i = 0; i < n; ++i)
        full[i] = i;
      return PermGroup(n, {Permutation::from_cycles(n, {full})});
    };
    auto dihedral = [](Point m) {
      std::vector<Point> rot(m), refl(m);
      for (Point x = 0; x < m; ++x) {
        rot[x] = (x + 1) % m;
        refl[x] = (m - x) % m;
      }
      return PermGroup(m, {Permutation(rot), Permutation(refl)});
    };
    auto symn = [](Point n) {
      std::vector<Point> full(n);
      for (Point i = 0; i < n; ++i)
        full[i] = i;
      return PermGroup(n, {Permutation::from_cycles(n, {{0, 1}}),
                           Permutation::from_cycles(n, {full})});
    };
    auto affine = [](Point p, Point mult) {
      std::vector<Point> rot(p), m(p);
      for (Point x = 0; x < p; ++x) {
        rot[x] = (x + 1) % p;
        m[x] = static_cast<Point>((static_cast<std::uint64_t>(mult) * x) % p);
      }
      return PermGroup(p, {Permutation(rot), Permutation(m)});
    };
    groups.push_back({"Z2", cyc(2)});
    groups.push_back({"Z3", cyc(3)});
    groups.push_back({"Z5", cyc(5)});
    groups.push_back({"Z7", cyc(7)});
    groups.push_back({"Z12", cyc(12)});
    groups.push_back({"Z30", cyc(30)});
    groups.push_back({"D8", dihedral(4)});
    groups.push_back({"D10", dihedral(5)});
    groups.push_back({"D14", dihedral(7)});
    groups.push_back({"D24", dihedral(12)});
    groups.push_back({"Alt(4)", alt_with_pair(5, AltPairKind::k2_pair).group}); // placeholder, replaced below
    groups.back() = {"Alt(4)", PermGroup(4, {Permutation::from_cycles(4, {{0, 1, 2}}),
                                             Permutation::from_cycles(4, {{0, 1}, {2, 3}})})};
    groups.push_back({"Alt(5)", alt_with_pair(5, AltPairKind::k2_pair).group});
    groups.push_back({"Alt(6)", PermGroup(6, {Permutation::from_cycles(6, {{0, 1, 2}}),
                                              Permutation::from_cycles(6, {{1, 2, 3, 4, 5}})})});
    groups.push_back({"Alt(7)", alt_with_pair(7, AltPairKind::k2_pair).group});
    groups.push_back({"Sym(3)", symn(3)});
    groups.push_back({"Sym(4)", symn(4)});
    groups.push_back({"Sym(5)", symn(5)});
    groups.push_back({"Sym(6)", symn(6)});
    groups.push_back({"PSL(2,5)", psl2_on_projective_line(5).group});
    groups.push_back({"PSL(2,7)", psl2_on_projective_line(7).group});
    groups.push_back({"F20", affine(5, 2)});
    groups.push_back({"F21", affine(7, 2)});
    {
      auto e = cyclic_and_elementary(3, 2);
      std::vector<Point> rot(9);
      for (Point x = 0; x < 3; ++x)
        for (Point y = 0; y < 3; ++y)
          rot[x * 3 + y] = y * 3 + (3 - x) % 3;
      auto gens = e.generators();
      gens.push_back(Permutation(rot));
      groups.push_back({"Z3^2:Z4", PermGroup(9, gens)});
    }
    groups.push_back({"Z2^3", PermGroup(6, {Permutation::from_cycles(6, {{0, 1}}),
                                            Permutation::from_cycles(6, {{2, 3}}),
                                            Permutation::from_cycles(6, {{4, 5}})})});
    groups.push_back(
        {"Sym(3)xSym(3)",
         PermGroup(6, {Permutation::from_cycles(6, {{0, 1}}),
                       Permutation::from_cycles(6, {{0, 1, 2}}),
                       Permutation::from_cycles(6, {{3, 4}}),
                       Permutation::from_cycles(6, {{3, 4, 5}})})});
    groups.push_back(
        {"Alt(4)xZ2", PermGroup(6, {Permutation::from_cycles(6, {{0, 1, 2}}),
                                    Permutation::from_cycles(6, {{0, 1}, {2, 3}}),
                                    Permutation::from_cycles(6, {{4, 5}})})});
    groups.push_back({"Z6xZ2",
                      PermGroup(8, {Permutation::from_cycles(8, {{0, 1, 2, 3, 4, 5}}),
                                    Permutation::from_cycles(8, {{6, 7}})})});

    std::ostringstream detail;
    std::size_t checked = 0;
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
      const auto &[name, group] = groups[gi];
      std::uint64_t brute =
          oracle::brute_force_order(group.generators(), group.degree(), 6000);
      if (brute > 5000) {
        c.pass = false;
        detail << " " << name << " exceeds the order window;";
        continue;
      }
      bool ok = group.order() == static_cast<Order>(brute);
      auto words = oracle::random_words(group.generators(), group.degree(), 200,
                                        1000 + gi);
      for (const auto &w : words)
        ok = ok && group.contains(w);
      if (!ok) {
        c.pass = false;
        detail << " " << name << " disagrees;";
      }
      ++checked;
    }
    if (checked < 25) {
      c.pass = false;
      detail << " only " << checked << " groups checked;";
    }
    c.detail = std::to_string(checked) +
               " groups: Schreier-Sims order equals brute-force closure count; "
               "200 membership words each;" +
               detail.str();
    criteria.push_back(c);
  }

  // ---- criterion 9: neighbour formulas on a searched instance ----------
  {
    Criterion c{9, "neighbour-formulas"};
    try {
      auto toy = find_neighbour_test_tuple();
      auto res = verify_neighbour_sets(toy.H, toy.V, toy.y, toy.phi);
      c.pass = res.formula_a && res.formula_b;
      c.detail = "instance: " + toy.description + "; in/out formulas " +
                 (c.pass ? "hold at u_0 and u_1" : "FAILED");
    } catch (const Error &e) {
      c.pass = false;
      c.detail = std::string("search failed: ") + e.what();
    }
    criteria.push_back(c);
  }

  int failures = 0;
  for (const auto &c : criteria) {
    std::cout << "[" << c.id << "] " << c.label << ": "
              << (c.pass ? "PASS" : "FAIL") << " - " << c.detail << "\n";
    failures += c.pass ? 0 : 1;
  }
  double total =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start)
          .count();
  std::cout << (criteria.size() - failures) << "/" << criteria.size()
            << " criteria passed in " << total << " s\n";
  return failures;
}
