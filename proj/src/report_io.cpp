#include "uncert/report_io.hpp"

#include <json.hpp>

#include "uncert/errors.hpp"
#include "uncert/experiments.hpp"

namespace uncert {

namespace {
using nlohmann::json;
}

std::string bound_report_to_json(const BoundReport& report) {
  json j;
  j["sum_of_variances"] = report.sum_of_variances;
  j["product_of_variances"] = report.product_of_variances;
  j["hr"] = report.hr;
  j["schroedinger"] = report.schroedinger;
  j["weak_sum"] = report.weak_sum;
  if (report.eq3.has_value()) j["eq3"] = *report.eq3;
  j["eq4"] = report.eq4;
  j["eq5"] = report.eq5;
  j["triple_max"] = report.triple_max;
  if (report.amended_hr.has_value()) j["amended_hr"] = *report.amended_hr;
  j["active_bound"] = report.active_bound;
  j["resolved_sign"] = report.resolved_sign;
  j["residuals"] = report.residuals;
  return j.dump(2) + "\n";
}

BoundReport bound_report_from_json(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object())
    raise(ErrorCode::ParseError, "bound report: not a JSON object");
  BoundReport report;
  report.sum_of_variances = j.at("sum_of_variances").get<double>();
  report.product_of_variances = j.at("product_of_variances").get<double>();
  report.hr = j.at("hr").get<double>();
  report.schroedinger = j.at("schroedinger").get<double>();
  report.weak_sum = j.at("weak_sum").get<double>();
  if (j.contains("eq3")) report.eq3 = j.at("eq3").get<double>();
  report.eq4 = j.at("eq4").get<double>();
  report.eq5 = j.at("eq5").get<double>();
  report.triple_max = j.at("triple_max").get<double>();
  if (j.contains("amended_hr")) report.amended_hr = j.at("amended_hr").get<double>();
  report.active_bound = j.at("active_bound").get<std::string>();
  report.resolved_sign = j.at("resolved_sign").get<std::string>();
  report.residuals = j.at("residuals").get<std::map<std::string, double>>();
  return report;
}

std::string bound_report_to_csv(const BoundReport& report) {
  std::string header = "sum_of_variances,product_of_variances,hr,schroedinger,weak_sum,eq3,eq4,"
                       "eq5,triple_max,amended_hr,active_bound,resolved_sign";
  std::string row = format_double(report.sum_of_variances) + "," +
                    format_double(report.product_of_variances) + "," +
                    format_double(report.hr) + "," + format_double(report.schroedinger) + "," +
                    format_double(report.weak_sum) + "," +
                    (report.eq3 ? format_double(*report.eq3) : "") + "," +
                    format_double(report.eq4) + "," + format_double(report.eq5) + "," +
                    format_double(report.triple_max) + "," +
                    (report.amended_hr ? format_double(*report.amended_hr) : "") + "," +
                    report.active_bound + "," + report.resolved_sign;
  for (const auto& [name, value] : report.residuals) {
    header += ",residual_" + name;
    row += "," + format_double(value);
  }
  return header + "\n" + row + "\n";
}

}  // namespace uncert
