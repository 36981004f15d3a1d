#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

namespace walshkit::verify {

// pass/fail apply to inequalities with explicit constants; report marks a
// measured quantity with no asserted bound; inconclusive marks a sampled
// surrogate bound that came out negative.
enum class Verdict { pass, fail, inconclusive, report };

std::string_view to_string(Verdict v);
Verdict verdict_from_string(std::string_view s);

// Process exit convention: pass/report -> 0, fail -> 1, inconclusive -> 2.
int exit_code_for(Verdict v);

// One inequality check. Everything except wall_time_ms is a deterministic
// function of (check_id, params), including the seed recorded in params.
struct VerificationReport {
  std::string check_id;
  std::map<std::string, std::string> params;
  double observed = 0.0;
  std::optional<double> bound;  // nullopt serializes as "reported-only"
  Verdict verdict = Verdict::report;
  std::optional<nlohmann::json> witness;
  std::int64_t wall_time_ms = 0;

  // Deterministic portion, key-sorted.
  nlohmann::json body_json() const;
  // {"body": ..., "wall_time_ms": ...}
  nlohmann::json to_json() const;
  static VerificationReport from_json(const nlohmann::json& j);
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace walshkit::verify
