#ifndef LIEMIRROR_REPORT_HPP
#define LIEMIRROR_REPORT_HPP

#include <string>
#include <vector>

#include "liemirror/json_io.hpp"

namespace liemirror {

enum class RowStatus { verified, refuted, witness_not_found, external_citation };

std::string to_string(RowStatus s);
RowStatus row_status_from_string(const std::string& s);

/// One certified claim. The evidence block carries everything needed to
/// re-verify the row from scratch (witness matrices, inputs, constants).
struct ReportRow {
  std::string subject;
  std::string claim;
  RowStatus status = RowStatus::verified;
  Json evidence;
};

struct Report {
  std::string title;
  std::vector<ReportRow> rows;

  /// Exit-code contract: fine iff no row is refuted or witness-not-found.
  bool all_good() const;
  void add(std::string subject, std::string claim, RowStatus status, Json evidence);
  void append(const Report& other);

  std::string to_markdown() const;
  Json to_json() const;
};

Report report_from_json(const Json& j);

}  // namespace liemirror

#endif
