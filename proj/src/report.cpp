#include "walshkit/report.hpp"

#include "walshkit/errors.hpp"

namespace walshkit::verify {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::inconclusive:
      return "inconclusive";
    case Verdict::report:
      return "report";
  }
  return "report";
}

Verdict verdict_from_string(std::string_view s) {
  if (s == "pass") return Verdict::pass;
  if (s == "fail") return Verdict::fail;
  if (s == "inconclusive") return Verdict::inconclusive;
  if (s == "report") return Verdict::report;
  throw DomainError("unknown verdict: " + std::string(s));
}

int exit_code_for(Verdict v) {
  switch (v) {
    case Verdict::pass:
    case Verdict::report:
      return 0;
    case Verdict::fail:
      return 1;
    case Verdict::inconclusive:
      return 2;
  }
  return 1;
}

nlohmann::json VerificationReport::body_json() const {
  nlohmann::json body;
  body["check_id"] = check_id;
  body["params"] = params;
  body["observed"] = observed;
  if (bound) {
    body["bound"] = *bound;
  } else {
    body["bound"] = "reported-only";
  }
  body["verdict"] = std::string(to_string(verdict));
  body["witness"] = witness ? *witness : nlohmann::json(nullptr);
  return body;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["body"] = body_json();
  j["wall_time_ms"] = wall_time_ms;
  return j;
}

VerificationReport VerificationReport::from_json(const nlohmann::json& j) {
  const nlohmann::json& body = j.contains("body") ? j.at("body") : j;
  VerificationReport report;
  report.check_id = body.at("check_id").get<std::string>();
  report.params = body.at("params").get<std::map<std::string, std::string>>();
  report.observed = body.at("observed").get<double>();
  const auto& bound = body.at("bound");
  if (bound.is_number()) {
    report.bound = bound.get<double>();
  } else {
    report.bound = std::nullopt;
  }
  report.verdict = verdict_from_string(body.at("verdict").get<std::string>());
  if (body.contains("witness") && !body.at("witness").is_null()) {
    report.witness = body.at("witness");
  }
  if (j.contains("wall_time_ms")) {
    report.wall_time_ms = j.at("wall_time_ms").get<std::int64_t>();
  }
  return report;
}

}  // namespace walshkit::verify
