#pragma once

// Report types shared by the verification suites and the CLI: per-J inequality
// records with an expected-boundary table, plus text / JSON / TSV rendering.

#include <string>
#include <vector>

#include "json.hpp"

namespace wcl {

using Json = nlohmann::ordered_json;

struct CheckRecord {
  std::string label;  // J as "{1,3}", or an item name for finite suites
  long long lhs = 0;
  long long rhs = 0;
  bool strict = false;
  bool holds = false;
  bool boundary = false;  // equality expected and required here
  std::string note;
};

struct InequalityReport {
  std::string check;
  std::string type;  // e.g. "B2", or a group name for finite suites
  int rank = 0;
  int p = 0;  // 0 = generic characteristic
  bool observational = false;  // records reported, not asserted
  std::vector<CheckRecord> records;
  std::vector<std::string> expected_boundaries;
  bool verdict = true;

  // holds is the raw comparison; the verdict demands exact equality at the
  // declared boundary labels and the stated inequality everywhere else.
  void finalize() {
    verdict = true;
    for (auto& r : records) {
      r.holds = r.strict ? (r.lhs < r.rhs) : (r.lhs <= r.rhs);
      r.boundary = false;
      for (const auto& b : expected_boundaries)
        if (b == r.label) r.boundary = true;
      if (observational) continue;
      if (r.boundary ? (r.lhs != r.rhs) : !r.holds) verdict = false;
    }
  }

  Json to_json() const {
    Json j;
    j["check"] = check;
    j["type"] = type;
    j["rank"] = rank;
    j["p"] = p;
    j["observational"] = observational;
    Json recs = Json::array();
    for (const auto& r : records) {
      Json rec;
      rec["J"] = r.label;
      rec["lhs"] = r.lhs;
      rec["rhs"] = r.rhs;
      rec["strict"] = r.strict;
      rec["holds"] = r.holds;
      rec["boundary"] = r.boundary;
      if (!r.note.empty()) rec["note"] = r.note;
      recs.push_back(std::move(rec));
    }
    j["records"] = std::move(recs);
    j["verdict"] = verdict;
    j["expected_boundaries"] = expected_boundaries;
    return j;
  }
};

struct WindowReport {
  std::string type;
  int rank = 0;
  int dim_g = 0;
  long long low = 0;    // open endpoint, equals f_V(U)
  long long high = 0;   // closed endpoint 2 dim G
  long long f_v_u = 0;
  std::string note;

  Json to_json() const {
    Json j;
    j["check"] = "r2F_window";
    j["type"] = type;
    j["rank"] = rank;
    j["dim_g"] = dim_g;
    j["low"] = low;
    j["high"] = high;
    j["f_v_u"] = f_v_u;
    if (!note.empty()) j["note"] = note;
    return j;
  }
};

struct FullReport {
  std::vector<InequalityReport> checks;
  std::vector<WindowReport> windows;

  bool all_ok() const {
    for (const auto& c : checks)
      if (!c.verdict) return false;
    return true;
  }

  Json to_json() const {
    Json j;
    j["report"] = "verify-all";
    Json items = Json::array();
    for (const auto& c : checks) items.push_back(c.to_json());
    for (const auto& w : windows) items.push_back(w.to_json());
    j["items"] = std::move(items);
    j["all_ok"] = all_ok();
    return j;
  }

  std::string to_text() const {
    std::string out;
    for (const auto& c : checks) {
      out += (c.verdict ? "ok   " : "FAIL ");
      out += c.check + " " + c.type;
      if (c.p) out += " p=" + std::to_string(c.p);
      if (c.observational) out += " (observational)";
      int failures = 0, boundaries = 0;
      for (const auto& r : c.records) {
        if (!r.holds) ++failures;
        if (r.boundary) ++boundaries;
      }
      out += "  records=" + std::to_string(c.records.size());
      if (boundaries) out += " boundaries=" + std::to_string(boundaries);
      if (failures) out += " non-strict=" + std::to_string(failures);
      out += "\n";
      if (!c.verdict)
        for (const auto& r : c.records) {
          bool bad = r.boundary ? (r.lhs != r.rhs) : !r.holds;
          if (bad)
            out += "    " + r.label + ": " + std::to_string(r.lhs) +
                   (r.strict ? " < " : " <= ") + std::to_string(r.rhs) +
                   (r.note.empty() ? "" : " [" + r.note + "]") + "\n";
        }
    }
    for (const auto& w : windows)
      out += "window " + w.type + ": (" + std::to_string(w.low) + ", " + std::to_string(w.high) +
             "]  f_V(U)=" + std::to_string(w.f_v_u) + (w.note.empty() ? "" : "  " + w.note) + "\n";
    out += all_ok() ? "ALL OK\n" : "FAILURES PRESENT\n";
    return out;
  }

  std::string to_tsv() const {
    std::string out = "check\ttype\trank\tp\tJ\tlhs\trhs\tstrict\tholds\tboundary\tnote\n";
    for (const auto& c : checks)
      for (const auto& r : c.records)
        out += c.check + "\t" + c.type + "\t" + std::to_string(c.rank) + "\t" +
               std::to_string(c.p) + "\t" + r.label + "\t" + std::to_string(r.lhs) + "\t" +
               std::to_string(r.rhs) + "\t" + (r.strict ? "1" : "0") + "\t" +
               (r.holds ? "1" : "0") + "\t" + (r.boundary ? "1" : "0") + "\t" + r.note + "\n";
    for (const auto& w : windows)
      out += "r2F_window\t" + w.type + "\t" + std::to_string(w.rank) + "\t0\t-\t" +
             std::to_string(w.low) + "\t" + std::to_string(w.high) + "\t0\t1\t0\t" + w.note + "\n";
    return out;
  }
};

}  // namespace wcl
