#include "dmod/io.hpp"

#include <fstream>
#include <sstream>

#include "dmod/errors.hpp"

namespace dmod::io {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

Scalar scalar_field(const json& value, const std::string& where) {
  if (!value.is_string()) throw ParseError(where + ": scalars must be JSON strings");
  return Scalar::parse(value.get<std::string>());
}

}  // namespace

Arrangement parse_arrangement(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("arrangement must be a JSON object");
  for (const auto& [key, value] : doc.items())
    if (key != "forms" && key != "beta") throw ParseError("unknown key \"" + key + "\"");
  if (!doc.contains("forms") || !doc.contains("beta"))
    throw ParseError("arrangement needs \"forms\" and \"beta\"");
  const json& forms = doc["forms"];
  const json& beta = doc["beta"];
  if (!forms.is_array() || !beta.is_array()) throw ParseError("\"forms\" and \"beta\" must be arrays");

  Arrangement arr;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const std::string where = "forms[" + std::to_string(i) + "]";
    const json& pair = forms[i];
    if (!pair.is_array() || pair.size() != 2) throw ParseError(where + " must be a pair [a, b]");
    Scalar a = scalar_field(pair[0], where);
    Scalar b = scalar_field(pair[1], where);
    if (a.is_zero() && b.is_zero()) throw ParseError(where + " is the zero form");
    arr.forms.emplace_back(std::move(a), std::move(b));
  }
  for (std::size_t i = 0; i < beta.size(); ++i)
    arr.beta.push_back(scalar_field(beta[i], "beta[" + std::to_string(i) + "]"));
  return arr;
}

Arrangement read_arrangement(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_arrangement(buffer.str());
}

ordered_json arrangement_to_json(const Arrangement& arr) {
  ordered_json out;
  out["forms"] = ordered_json::array();
  for (const LinearForm& f : arr.forms)
    out["forms"].push_back({f.a().to_string(), f.b().to_string()});
  out["beta"] = ordered_json::array();
  for (const Scalar& b : arr.beta) out["beta"].push_back(b.to_string());
  return out;
}

ordered_json report_to_json(const DecompositionReport& report) {
  ordered_json out;
  out["count"] = report.count;
  out["case"] = to_string(report.case_tag);
  out["k"] = report.k;
  if (report.beta_H) out["beta_H"] = report.beta_H->to_string();
  out["factors"] = ordered_json::array();
  for (const FactorSupport& f : report.factors) {
    ordered_json entry;
    entry["kind"] = to_string(f.kind);
    if (f.kind == SupportKind::Line) entry["index"] = f.line + 1;
    if (f.kind == SupportKind::Origin) entry["multiplicity"] = f.multiplicity;
    out["factors"].push_back(std::move(entry));
  }
  if (!report.nbc.empty()) {
    out["nbc"] = ordered_json::array();
    for (const auto& subset : report.nbc) {
      ordered_json s = ordered_json::array();
      for (std::size_t i : subset) s.push_back(i + 1);
      out["nbc"].push_back(std::move(s));
    }
  }
  out["notes"] = report.notes;
  return out;
}

std::string report_to_text(const DecompositionReport& report) {
  std::ostringstream os;
  os << "lines:   " << report.m << "\n";
  os << "k:       " << report.k;
  if (!report.integer_indices.empty()) {
    os << " (integer exponents at";
    for (std::size_t i : report.integer_indices) os << " " << i + 1;
    os << ")";
  }
  os << "\n";
  os << "case:    " << to_string(report.case_tag) << "\n";
  if (report.beta_H) os << "beta_H:  " << report.beta_H->to_string() << "\n";
  os << "count:   " << report.count << "\n";
  os << "factors:\n";
  for (const FactorSupport& f : report.factors) {
    switch (f.kind) {
      case SupportKind::Plane:
        os << "  plane\n";
        break;
      case SupportKind::Line:
        os << "  line H" << f.line + 1 << "\n";
        break;
      case SupportKind::Origin:
        os << "  origin x" << f.multiplicity << "\n";
        break;
    }
  }
  if (!report.nbc.empty()) {
    os << "nbc subsets:";
    for (const auto& subset : report.nbc) {
      os << " {";
      for (std::size_t i = 0; i < subset.size(); ++i) os << (i ? "," : "") << subset[i] + 1;
      os << "}";
    }
    os << "\n";
  }
  for (const std::string& note : report.notes) os << "note: " << note << "\n";
  return os.str();
}

}  // namespace dmod::io
