#pragma once

#include "json.hpp"

#include <string>
#include <vector>

namespace qcalc {

enum class Status { Pass, Fail, Refused };
std::string status_name(Status s);

struct Claim {
  std::string id;      // e.g. "sl2/commutation r=2 w0*a"
  std::string anchor;  // fixture anchor, e.g. "sl2/commutation"
  Status status = Status::Pass;
  std::string mode;  // exact, evidential(3), grid(4x4), ...
  std::string detail;
  nlohmann::json data;  // null unless there is something worth keeping
};

// Rendered table for the latex and json emitters.
struct Table {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::vector<std::string>> latex_rows;  // optional math-mode cells
};

class Report {
public:
  explicit Report(std::string title = "") : title_(std::move(title)) {}

  const std::string& title() const { return title_; }
  const std::vector<Claim>& claims() const { return claims_; }
  const std::vector<Table>& tables() const { return tables_; }

  Claim& add(Claim c);
  Claim& check(bool ok, std::string id, std::string anchor, std::string mode, std::string detail = "");
  void add_table(Table t) { tables_.push_back(std::move(t)); }
  void append(const Report& other);

  std::size_t count(Status s) const;
  bool ok() const { return count(Status::Pass) == claims_.size(); }
  bool refused() const { return count(Status::Refused) > 0; }

private:
  std::string title_;
  std::vector<Claim> claims_;
  std::vector<Table> tables_;
};

enum class Format { Text, Json, Latex };
Format parse_format(const std::string& name);

inline constexpr const char* kReportSchema = "qcalc-report/1";

// text: one line per claim; json: versioned object; latex: claims and tables.
std::string emit(const Report& r, Format f);

}  // namespace qcalc
