#include "qcalc/report.hpp"

#include <regex>
#include <sstream>
#include <stdexcept>

namespace qcalc {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Refused:
      return "refused";
  }
  return "?";
}

Claim& Report::add(Claim c) {
  claims_.push_back(std::move(c));
  return claims_.back();
}

Claim& Report::check(bool ok, std::string id, std::string anchor, std::string mode, std::string detail) {
  Claim c;
  c.id = std::move(id);
  c.anchor = std::move(anchor);
  c.status = ok ? Status::Pass : Status::Fail;
  c.mode = std::move(mode);
  c.detail = std::move(detail);
  return add(std::move(c));
}

void Report::append(const Report& other) {
  claims_.insert(claims_.end(), other.claims_.begin(), other.claims_.end());
  tables_.insert(tables_.end(), other.tables_.begin(), other.tables_.end());
}

std::size_t Report::count(Status s) const {
  std::size_t n = 0;
  for (const auto& c : claims_) n += c.status == s;
  return n;
}

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "latex") return Format::Latex;
  throw std::invalid_argument("unknown format '" + name + "' (text, json, latex)");
}

namespace {

std::string one_line(std::string s) {
  for (auto& ch : s) {
    if (ch == '\n' || ch == '\r') ch = ' ';
  }
  return s;
}

std::string emit_text(const Report& r) {
  std::ostringstream os;
  for (const auto& c : r.claims()) {
    os << status_name(c.status) << " [" << c.mode << "] " << c.id << " (" << c.anchor << ")";
    if (!c.detail.empty()) os << ": " << one_line(c.detail);
    os << "\n";
  }
  return os.str();
}

std::string emit_json(const Report& r) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["title"] = r.title();
  j["claims"] = nlohmann::ordered_json::array();
  for (const auto& c : r.claims()) {
    nlohmann::ordered_json e;
    e["claim"] = c.id;
    e["status"] = status_name(c.status);
    e["mode"] = c.mode;
    e["anchor"] = c.anchor;
    if (!c.detail.empty()) e["detail"] = c.detail;
    if (!c.data.is_null()) e["data"] = c.data;
    j["claims"].push_back(std::move(e));
  }
  if (!r.tables().empty()) {
    j["tables"] = nlohmann::ordered_json::array();
    for (const auto& t : r.tables()) {
      nlohmann::ordered_json e;
      e["title"] = t.title;
      e["header"] = t.header;
      e["rows"] = t.rows;
      j["tables"].push_back(std::move(e));
    }
  }
  j["summary"] = {{"pass", r.count(Status::Pass)}, {"fail", r.count(Status::Fail)}, {"refused", r.count(Status::Refused)}};
  return j.dump(2) + "\n";
}

std::string tex_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '_':
      case '&':
      case '%':
      case '#':
      case '$':
      case '{':
      case '}':
        out += '\\';
        out += ch;
        break;
      case '^':
        out += "\\^{}";
        break;
      case '\\':
        out += "\\textbackslash{}";
        break;
      case '~':
        out += "\\~{}";
        break;
      default:
        out += ch;
    }
  }
  return out;
}

// q^-1 -> q^{-1}
std::string brace_exponents(const std::string& cell) {
  static const std::regex exp(R"(\^(-?[0-9]+(/[0-9]+)?))");
  return std::regex_replace(cell, exp, "^{$1}");
}

std::string emit_latex(const Report& r) {
  std::ostringstream os;
  os << "% " << kReportSchema << "\n";
  if (!r.title().empty()) os << "\\paragraph{" << tex_escape(r.title()) << "}\n";
  for (const auto& t : r.tables()) {
    os << "\\begin{tabular}{l" << std::string(t.header.size() > 0 ? t.header.size() - 1 : 0, 'l') << "}\n";
    os << "\\multicolumn{" << std::max<std::size_t>(1, t.header.size()) << "}{l}{" << tex_escape(t.title) << "} \\\\\n\\hline\n";
    for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? " & " : "") << tex_escape(t.header[i]);
    os << " \\\\\n\\hline\n";
    const auto& rows = t.latex_rows.empty() ? t.rows : t.latex_rows;
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        os << (i ? " & " : "");
        os << (t.latex_rows.empty() ? tex_escape(row[i]) : "$" + brace_exponents(row[i]) + "$");
      }
      os << " \\\\\n";
    }
    os << "\\end{tabular}\n\n";
  }
  os << "\\begin{tabular}{lll}\nstatus & mode & claim \\\\\n\\hline\n";
  for (const auto& c : r.claims()) {
    os << status_name(c.status) << " & " << tex_escape(c.mode) << " & \\texttt{" << tex_escape(c.id) << "} \\\\\n";
  }
  os << "\\end{tabular}\n";
  return os.str();
}

}  // namespace

std::string emit(const Report& r, Format f) {
  switch (f) {
    case Format::Text:
      return emit_text(r);
    case Format::Json:
      return emit_json(r);
    case Format::Latex:
      return emit_latex(r);
  }
  return {};
}

}  // namespace qcalc
