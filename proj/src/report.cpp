#include "relcomm/report.hpp"

namespace relcomm {

ReportRecord make_record(ClassificationReport const& rep) {
  ReportRecord r;
  r.name = rep.name;
  r.order = rep.order;
  r.center_order = rep.center_order;
  r.spectrum = rep.computed.values;
  r.tag = rep.tag;
  r.verdict = rep.verdict;
  return r;
}

std::vector<Element> small_generating_set(FiniteGroup const& g, Subgroup const& h) {
  std::vector<Element> gens;
  auto span = Subgroup::trivial(g);
  while (span.order() < h.order()) {
    for (auto x : h.elements())
      if (!span.contains(x)) {
        gens.push_back(x);
        break;
      }
    span = Subgroup::generated_by(g, gens);
  }
  return gens;
}

Json rationals_json(std::vector<Rat> const& values) {
  Json out = Json::array();
  for (auto const& v : values) out.push_back(v.str());
  return out;
}

Json tag_json(CaseTag const& tag) {
  Json j;
  j["case"] = case_name(tag.kind);
  if (tag.p) j["p"] = *tag.p;
  if (tag.q) j["q"] = *tag.q;
  if (tag.m) j["m"] = *tag.m;
  if (tag.n) j["n"] = *tag.n;
  return j;
}

Json audit_json(AuditRecord const& rec) {
  Json j;
  j["subject"] = rec.subject;
  j["check"] = check_name(rec.check);
  j["holds"] = rec.holds;
  if (rec.witness) j["witness"] = *rec.witness;
  Json detail = Json::object();
  for (auto const& [k, v] : rec.detail) detail[k] = v;
  j["detail"] = detail;
  return j;
}

Json record_json(ReportRecord const& rec, bool with_timings) {
  Json j;
  j["name"] = rec.name;
  j["order"] = rec.order;
  j["centerOrder"] = rec.center_order;
  j["spectrum"] = rationals_json(rec.spectrum);
  j["spectrumSize"] = rec.spectrum.size();
  j["caseTag"] = tag_json(rec.tag);
  j["verdict"] = verdict_name(rec.verdict);
  Json audits = Json::array();
  for (auto const& a : rec.audits) audits.push_back(audit_json(a));
  j["auditResults"] = audits;
  if (with_timings) {
    Json t = Json::object();
    for (auto const& [phase, ms] : rec.timings) t[phase] = ms;
    j["timings"] = t;
  }
  return j;
}

Json classification_json(ClassificationReport const& rep) {
  Json j;
  j["name"] = rep.name;
  j["order"] = rep.order;
  j["centerOrder"] = rep.center_order;
  j["caseTag"] = tag_json(rep.tag);
  j["predicted"] = rationals_json(rep.predicted);
  j["spectrum"] = rationals_json(rep.computed.values);
  j["spectrumSize"] = rep.computed.size();
  j["verdict"] = verdict_name(rep.verdict);
  return j;
}

Json spectrum_json(FiniteGroup const& g, SubgroupLattice const& lattice, DegreeSpectrum const& spectrum) {
  Json j;
  j["name"] = g.name();
  j["order"] = g.order();
  j["spectrum"] = rationals_json(spectrum.values);
  j["spectrumSize"] = spectrum.size();
  Json w = Json::array();
  for (std::size_t k = 0; k < spectrum.size(); ++k) {
    auto const& h = lattice[spectrum.witnesses[k]];
    Json e;
    e["value"] = spectrum.values[k].str();
    e["order"] = h.order();
    e["generators"] = small_generating_set(g, h);
    w.push_back(e);
  }
  j["witnesses"] = w;
  return j;
}

std::string tsv_header() { return "name\torder\tspectrumSize\tcaseTag\tverdict"; }

std::string tsv_line(ReportRecord const& rec) {
  return rec.name + '\t' + std::to_string(rec.order) + '\t' + std::to_string(rec.spectrum.size()) +
         '\t' + rec.tag.str() + '\t' + verdict_name(rec.verdict);
}

}  // namespace relcomm
