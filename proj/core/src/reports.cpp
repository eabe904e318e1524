#include "regalia/reports.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace regalia {

namespace {

using json = nlohmann::ordered_json;

json extint_json(const ExtInt& v) {
  if (v.is_finite()) return json(v.value());
  return json(v.str());
}

bool relation_holds(const ExtInt& lhs, const std::string& rel, const ExtInt& rhs) {
  if (rel == "<=") return lhs <= rhs;
  if (rel == "=") return lhs == rhs;
  if (rel == ">=") return rhs <= lhs;
  throw std::invalid_argument("Relation: unknown comparator " + rel);
}

}  // namespace

Relation make_relation(std::string name, ExtInt lhs, std::string rel, ExtInt rhs) {
  bool ok = relation_holds(lhs, rel, rhs);
  return Relation{std::move(name), lhs, std::move(rel), rhs, ok};
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::violated: return "violated";
    case Verdict::vacuous: return "vacuous";
    case Verdict::truncated: return "truncated";
  }
  return "unknown";
}

std::string hyp_status_name(HypStatus s) {
  switch (s) {
    case HypStatus::verified: return "verified";
    case HypStatus::asserted: return "asserted";
    case HypStatus::failed: return "failed";
  }
  return "unknown";
}

void TheoremReport::add_hypothesis(std::string name, HypStatus status,
                                   std::string hyp_note) {
  hypotheses.push_back(Hypothesis{std::move(name), status, std::move(hyp_note)});
}

void TheoremReport::add_relation(std::string name, ExtInt lhs, std::string rel,
                                 ExtInt rhs) {
  relations.push_back(make_relation(std::move(name), lhs, std::move(rel), rhs));
}

bool TheoremReport::all_hypotheses_verified() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Hypothesis& h) {
    return h.status == HypStatus::verified;
  });
}

void TheoremReport::finalize(bool data_truncated) {
  bool any_failed = std::any_of(hypotheses.begin(), hypotheses.end(),
                                [](const Hypothesis& h) { return h.status == HypStatus::failed; });
  bool any_asserted = std::any_of(hypotheses.begin(), hypotheses.end(),
                                  [](const Hypothesis& h) { return h.status == HypStatus::asserted; });
  bool all_satisfied = std::all_of(relations.begin(), relations.end(),
                                   [](const Relation& r) { return r.satisfied; });
  if (any_failed) {
    verdict = Verdict::vacuous;
    return;
  }
  if (!all_satisfied) {
    if (any_asserted) {
      verdict = Verdict::vacuous;
      counterexample_candidate = true;
    } else if (data_truncated) {
      verdict = Verdict::truncated;
    } else {
      verdict = Verdict::violated;
    }
    return;
  }
  verdict = data_truncated ? Verdict::truncated : Verdict::holds;
}

std::string report_json(const TheoremReport& r) {
  json j;
  j["theorem"] = r.theorem;
  j["input"] = r.input;
  json hyps = json::array();
  for (const Hypothesis& h : r.hypotheses) {
    json hj;
    hj["name"] = h.name;
    hj["status"] = hyp_status_name(h.status);
    if (!h.note.empty()) hj["note"] = h.note;
    hyps.push_back(std::move(hj));
  }
  j["hypotheses"] = std::move(hyps);
  json rels = json::array();
  for (const Relation& rel : r.relations) {
    json rj;
    rj["name"] = rel.name;
    rj["lhs"] = extint_json(rel.lhs);
    rj["rel"] = rel.rel;
    rj["rhs"] = extint_json(rel.rhs);
    rj["satisfied"] = rel.satisfied;
    rels.push_back(std::move(rj));
  }
  j["relations"] = std::move(rels);
  j["verdict"] = verdict_name(r.verdict);
  j["counterexample_candidate"] = r.counterexample_candidate;
  if (!r.note.empty()) j["note"] = r.note;
  return j.dump();
}

std::string report_summary(const TheoremReport& r) {
  std::ostringstream out;
  long long sat = 0;
  for (const Relation& rel : r.relations)
    if (rel.satisfied) ++sat;
  std::string v = verdict_name(r.verdict);
  v.resize(10, ' ');
  std::string t = r.theorem;
  if (t.size() < 16) t.resize(16, ' ');
  out << v << t << sat << "/" << r.relations.size() << " relations";
  if (r.counterexample_candidate) out << "  [counterexample candidate]";
  out << "  " << r.input;
  return out.str();
}

std::string betti_json(const BettiTable& b) {
  json j;
  json entries = json::array();
  for (const auto& [ij, rank] : b.entries()) {
    if (rank == 0) continue;
    entries.push_back(json::array({ij.first, ij.second, rank}));
  }
  j["betti"] = std::move(entries);
  j["reg"] = extint_json(b.reg());
  return j.dump();
}

std::string ainvariants_json(const AInvariants& a) {
  json j;
  json table;
  for (size_t i = 0; i < a.a.size(); ++i)
    table[std::to_string(i)] = extint_json(a.a[i]);
  j["a"] = std::move(table);
  j["reg"] = extint_json(a.reg());
  j["cd"] = extint_json(a.cd());
  return j.dump();
}

}  // namespace regalia
