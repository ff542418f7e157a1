#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "relcomm/classifier.hpp"
#include "relcomm/commdeg.hpp"
#include "relcomm/conjecture_lab.hpp"

namespace relcomm {

// Field order in emitted objects follows insertion order.
using Json = nlohmann::ordered_json;

// One scanned group.
struct ReportRecord {
  std::string name;
  std::size_t order = 0;
  std::size_t center_order = 0;
  std::vector<Rat> spectrum;
  CaseTag tag;
  Verdict verdict = Verdict::NotApplicable;
  std::vector<AuditRecord> audits;
  std::vector<std::pair<std::string, double>> timings;  // phase -> ms
};

ReportRecord make_record(ClassificationReport const& rep);

// Greedy generating set: repeatedly add the least element not yet generated.
std::vector<Element> small_generating_set(FiniteGroup const& g, Subgroup const& h);

Json rationals_json(std::vector<Rat> const& values);
Json tag_json(CaseTag const& tag);
Json audit_json(AuditRecord const& rec);
Json record_json(ReportRecord const& rec, bool with_timings);
Json classification_json(ClassificationReport const& rep);
Json spectrum_json(FiniteGroup const& g, SubgroupLattice const& lattice,
                   DegreeSpectrum const& spectrum);

std::string tsv_header();
std::string tsv_line(ReportRecord const& rec);

}  // namespace relcomm
