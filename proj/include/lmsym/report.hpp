#pragma once

/**
 * @file report.hpp
 * @brief Machine-readable run reports and the command implementations behind
 * the lmsym CLI.
 */

#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lmsym/audit.hpp"
#include "lmsym/catalog.hpp"
#include "lmsym/classifier.hpp"
#include "lmsym/group_io.hpp"
#include "lmsym/lie_checks.hpp"

namespace lmsym {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { kExitOk = 0, kExitDisagreement = 1, kExitInputError = 2, kExitBudgetExceeded = 3 };

using nlohmann::json;

inline json coefficient_json(const Integer& c) {
  if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
    return static_cast<long long>(c);
  return c.str();
}

/// [[label, coefficient], ...] in ascending element index.
inline json ring_to_json(const RingElement& a) {
  json out = json::array();
  for (const auto& [g, c] : a.terms()) out.push_back(json::array({a.group().label(g), coefficient_json(c)}));
  return out;
}

inline json labels_json(const Group& G, const std::vector<Element>& elems) {
  json out = json::array();
  for (Element g : elems) out.push_back(G.label(g));
  return out;
}

inline json condition_report_json(const Group& G, const ConditionReport& r) {
  json j;
  j["verdict"] = r.theorem1();
  j["c1"] = r.c1;
  j["c2"] = r.c2;
  j["c3"] = r.c3;
  j["c4"] = r.c4;
  j["hamiltonian_2group"] = r.hamiltonian_2group;
  json w = json::object();
  if (r.c1) w["c1"] = labels_json(G, r.k_subgroup.elements());
  if (r.c2) w["c2"] = labels_json(G, r.elementary_index2->elements());
  if (r.c3) w["c3"] = {{"B", labels_json(G, r.c3_b->elements())}, {"x", G.label(*r.c3_x)}};
  if (r.c4) w["c4"] = labels_json(G, r.c4_center.elements());
  j["witnesses"] = std::move(w);
  return j;
}

inline json brute_report_json(const Group& G, const BruteReport& b) {
  json j;
  j["lie_metabelian"] = b.lie_metabelian;
  j["bracket_count"] = b.bracket_count;
  j["deduped_bracket_count"] = b.deduped_bracket_count;
  if (b.witness) {
    const auto gens = x_plus_generators(G);
    json gen_labels = json::array();
    for (std::size_t i : *b.witness) gen_labels.push_back(to_string(gens.plus_gens[i]));
    j["witness"] = {{"indices", *b.witness},
                    {"generators", std::move(gen_labels)},
                    {"double_bracket", ring_to_json(double_bracket(gens.plus_gens, *b.witness))}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

inline json audit_report_json(const Group& G, const AuditReport& a) {
  json j;
  j["identity"] = a.identity_name;
  j["status"] = std::string(to_string(a.status));
  j["tuples_checked"] = a.tuples_checked;
  if (!a.note.empty()) j["note"] = a.note;
  if (a.counterexample) {
    json c;
    c["tuple"] = labels_json(G, a.counterexample->tuple);
    c["residual"] = a.counterexample->residual ? ring_to_json(*a.counterexample->residual) : json(nullptr);
    if (!a.counterexample->detail.empty()) c["detail"] = a.counterexample->detail;
    j["counterexample"] = std::move(c);
  }
  return j;
}

inline json report_header(const Group& G) {
  json j;
  j["schema"] = kSchemaVersion;
  j["group"] = G.name();
  j["order"] = G.order();
  return j;
}

inline json theorem2_json(const Theorem2Verdict& t) {
  return {{"verdict", t.holds}, {"k_abelian", t.k_abelian}, {"elementary_index2", t.elementary_index2}};
}

/// Structural verdicts only.
inline json cmd_classify(const Group& G) {
  json j = report_header(G);
  j["theorem1"] = condition_report_json(G, theorem1_verdict(G));
  j["theorem2"] = theorem2_json(theorem2_verdict(G));
  return j;
}

inline json cmd_brute(const Group& G, std::size_t budget = kDefaultBruteBudget) {
  json j = report_header(G);
  j["brute"] = brute_report_json(G, is_plus_lie_metabelian(G, {.budget = budget}));
  j["check_commutative"] = is_check_commutative(G);
  j["plus_commutative"] = is_plus_commutative(G);
  return j;
}

struct CommandResult {
  json report;
  int exit_code = kExitOk;
};

/// Structural and brute-force verdicts for one group, with both agreements.
inline json cross_validate(const Group& G, std::size_t budget) {
  const auto t1 = theorem1_verdict(G);
  const auto t2 = theorem2_verdict(G);
  const auto brute = is_plus_lie_metabelian(G, {.budget = budget});
  const bool check_comm = is_check_commutative(G);
  const bool plus_comm = is_plus_commutative(G);

  json j = report_header(G);
  j["theorem1"] = condition_report_json(G, t1);
  j["theorem2"] = theorem2_json(t2);
  j["brute"] = brute_report_json(G, brute);
  j["check_commutative"] = check_comm;
  j["plus_commutative"] = plus_comm;
  j["agreement"] = t1.theorem1() == brute.lie_metabelian;
  j["agreement_theorem2"] = t2.holds == check_comm;
  if (!is_abelian(G)) j["agreement_hamiltonian"] = t1.hamiltonian_2group == plus_comm;
  return j;
}

inline CommandResult cmd_validate(std::size_t max_order, std::size_t budget = kDefaultBruteBudget) {
  CommandResult res;
  res.report["schema"] = kSchemaVersion;
  res.report["max_order"] = max_order;
  json groups = json::array();
  bool all = true;
  for (const auto& entry : catalog(max_order)) {
    json r = cross_validate(entry.group, budget);
    all = all && r["agreement"] == true && r["agreement_theorem2"] == true &&
          r.value("agreement_hamiltonian", true);
    groups.push_back(std::move(r));
  }
  res.report["groups"] = std::move(groups);
  res.report["all_agree"] = all;
  res.exit_code = all ? kExitOk : kExitDisagreement;
  return res;
}

inline const std::vector<std::string>& identity_choices() {
  static const std::vector<std::string> v{"eq1", "eq2", "eq3", "expansions", "cond3", "lemmas", "all"};
  return v;
}

inline CommandResult cmd_audit(const Group& G, const std::string& which, const AuditOptions& opts = {}) {
  std::vector<AuditReport> audits;
  auto gated = [&](const std::string& name, auto run) {
    try {
      run();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kHypothesisViolated) throw;
      AuditReport skipped{name, G.name()};
      skipped.status = AuditStatus::kSkipped;
      skipped.note = e.what();
      audits.push_back(std::move(skipped));
    }
  };
  const bool all = which == "all";
  if (all || which == "eq1") audits.push_back(audit_eq1_report(G));
  if (all || which == "expansions") {
    audits.push_back(audit_bracket_expansions(G, opts));
    audits.push_back(audit_involutions_expansion(G, opts));
  }
  if (all || which == "cond3") gated("cond3", [&] { audits.push_back(audit_condition3_formula(G, opts)); });
  if (all || which == "eq2") gated("eq2", [&] { audits.push_back(audit_eq2(G, opts)); });
  if (all || which == "eq3") gated("eq3", [&] { audits.push_back(audit_eq3(G, opts)); });
  if (all || which == "lemmas")
    gated("lemmas", [&] {
      for (auto& r : lemma_conformance(G)) audits.push_back(std::move(r));
    });

  CommandResult res;
  res.report = report_header(G);
  json list = json::array();
  bool ok = true;
  for (const auto& a : audits) {
    ok = ok && a.status != AuditStatus::kFailed;
    list.push_back(audit_report_json(G, a));
  }
  res.report["audits"] = std::move(list);
  res.exit_code = ok ? kExitOk : kExitDisagreement;
  return res;
}

/// Writes every catalog entry of order <= max_order as <dir>/<name>.group.
inline std::vector<std::filesystem::path> export_catalog(const std::filesystem::path& dir, std::size_t max_order) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  for (const auto& e : catalog(max_order)) {
    std::string file = e.name;
    for (char& ch : file)
      if (ch == ':' || ch == '/') ch = '_';
    written.push_back(dir / (file + ".group"));
    save_group(e.group, written.back());
  }
  return written;
}

// ---------------------------------------------------------------------------
// Human-readable summaries for --format table.

namespace detail {

inline std::string yes_no(const json& b) { return b.is_boolean() ? (b.get<bool>() ? "yes" : "no") : "-"; }

inline void table_row(std::ostringstream& out, const json& r) {
  out << r["group"].get<std::string>() << "\t" << r["order"].get<std::size_t>();
  if (r.contains("theorem1")) {
    const auto& t = r["theorem1"];
    out << "\tT1=" << yes_no(t["verdict"]) << " [";
    for (const char* c : {"c1", "c2", "c3", "c4"}) out << (t[c].get<bool>() ? '1' : '0');
    out << "]";
  }
  if (r.contains("theorem2")) out << "\tT2=" << yes_no(r["theorem2"]["verdict"]);
  if (r.contains("brute")) {
    out << "\tbrute=" << yes_no(r["brute"]["lie_metabelian"]) << " (" << r["brute"]["bracket_count"].get<std::size_t>()
        << "/" << r["brute"]["deduped_bracket_count"].get<std::size_t>() << " brackets)";
  }
  if (r.contains("check_commutative")) out << "\tcheck_comm=" << yes_no(r["check_commutative"]);
  if (r.contains("plus_commutative")) out << "\tplus_comm=" << yes_no(r["plus_commutative"]);
  if (r.contains("agreement")) out << "\tagree=" << yes_no(r["agreement"]) << "/" << yes_no(r["agreement_theorem2"]);
  out << "\n";
  if (r.contains("audits"))
    for (const auto& a : r["audits"])
      out << "  " << a["identity"].get<std::string>() << "\t" << a["status"].get<std::string>() << "\t"
          << a["tuples_checked"].get<std::size_t>() << " tuples\n";
}

}  // namespace detail

inline std::string render_table(const json& report) {
  std::ostringstream out;
  if (report.contains("groups")) {
    for (const auto& r : report["groups"]) detail::table_row(out, r);
    out << "all_agree=" << detail::yes_no(report["all_agree"]) << "\n";
  } else {
    detail::table_row(out, report);
  }
  return out.str();
}

inline std::string render(const json& report, const std::string& format) {
  return format == "table" ? render_table(report) : report.dump(2) + "\n";
}

}  // namespace lmsym
