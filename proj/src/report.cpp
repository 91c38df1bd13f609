#include "liemirror/report.hpp"

#include <sstream>

namespace liemirror {

std::string to_string(RowStatus s) {
  switch (s) {
    case RowStatus::verified:
      return "verified";
    case RowStatus::refuted:
      return "refuted";
    case RowStatus::witness_not_found:
      return "witness-not-found";
    case RowStatus::external_citation:
      return "external-citation";
  }
  return "unknown";
}

RowStatus row_status_from_string(const std::string& s) {
  if (s == "verified") return RowStatus::verified;
  if (s == "refuted") return RowStatus::refuted;
  if (s == "witness-not-found") return RowStatus::witness_not_found;
  if (s == "external-citation") return RowStatus::external_citation;
  throw ParseError("unknown row status '" + s + "'");
}

bool Report::all_good() const {
  for (const auto& r : rows)
    if (r.status == RowStatus::refuted || r.status == RowStatus::witness_not_found)
      return false;
  return true;
}

void Report::add(std::string subject, std::string claim, RowStatus status, Json evidence) {
  rows.push_back({std::move(subject), std::move(claim), status, std::move(evidence)});
}

void Report::append(const Report& other) {
  for (const auto& r : other.rows) rows.push_back(r);
}

std::string Report::to_markdown() const {
  std::ostringstream os;
  os << "# " << title << "\n\n";
  os << "| subject | claim | status |\n";
  os << "|---|---|---|\n";
  for (const auto& r : rows)
    os << "| " << r.subject << " | " << r.claim << " | " << to_string(r.status) << " |\n";
  os << "\n";
  int ok = 0, refuted = 0, missing = 0, external = 0;
  for (const auto& r : rows) {
    switch (r.status) {
      case RowStatus::verified:
        ++ok;
        break;
      case RowStatus::refuted:
        ++refuted;
        break;
      case RowStatus::witness_not_found:
        ++missing;
        break;
      case RowStatus::external_citation:
        ++external;
        break;
    }
  }
  os << "verified: " << ok << ", refuted: " << refuted
     << ", witness-not-found: " << missing << ", external-citation: " << external << "\n";
  return os.str();
}

Json Report::to_json() const {
  Json j;
  j["title"] = title;
  Json rows_json = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["subject"] = r.subject;
    row["claim"] = r.claim;
    row["status"] = to_string(r.status);
    row["evidence"] = r.evidence;
    rows_json.push_back(row);
  }
  j["rows"] = rows_json;
  j["all_good"] = all_good();
  return j;
}

Report report_from_json(const Json& j) {
  Report r;
  r.title = j.value("title", "");
  for (const auto& row : j.at("rows")) {
    r.rows.push_back({row.at("subject").get<std::string>(),
                      row.at("claim").get<std::string>(),
                      row_status_from_string(row.at("status").get<std::string>()),
                      row.value("evidence", Json())});
  }
  return r;
}

}  // namespace liemirror
