#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "og4/graph.hpp"
#include "og4/verify.hpp"
#include "og4/zoo.hpp"

namespace og4 {

enum class FamilyId { A1, A2, B1, B2, B4, C1, C2, C4 };

FamilyId family_from_string(const std::string &s);
std::string family_name(FamilyId f);
// catalog number of the defining construction ("5.1" ... "5.8")
std::string family_construction(FamilyId f);

struct Budgets {
  std::uint64_t vertex_budget = 1000000;
  std::uint64_t coset_index_bound = 100000;
  std::uint64_t order_bound = 20000;
};

struct FamilyParams {
  long long p = 0;
  long long n = 0;
};

struct FamilyInstance {
  FamilyId family = FamilyId::A1;
  std::string construction;
  std::vector<std::pair<std::string, long long>> params;
  std::string tier; // "explicit" or "certificate"
  char expected_case = '?';
  unsigned expected_k = 0;
  // explicit tier
  std::optional<OrientedPair> pair;
  std::shared_ptr<RegularizedGroup> regular_group;
  Order group_order = 0;
  // certificate tier
  std::optional<WreathConstructionData> bundle;
  std::string note;
};

FamilyInstance build_family(FamilyId family, const FamilyParams &params,
                            const Budgets &budgets = {});

VerificationReport verify_family_instance(FamilyInstance &inst,
                                          const Budgets &budgets = {});

struct SweepRow {
  FamilyId family = FamilyId::A1;
  VerificationReport report;
  bool verified = false;
};

struct SweepRequest {
  std::vector<std::pair<FamilyId, FamilyParams>> instances;
  static SweepRequest defaults();
  static SweepRequest for_families(const std::vector<FamilyId> &families);
};

std::vector<SweepRow> table2_sweep(const SweepRequest &request,
                                   const Budgets &budgets = {}, int jobs = 1);

std::string report_to_json_string(const VerificationReport &report, int indent = 2);
std::string sweep_to_json_string(const std::vector<SweepRow> &rows, int indent = 2);

} // namespace og4
