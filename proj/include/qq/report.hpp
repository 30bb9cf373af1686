#pragma once

// Text and JSON renderings of every command, shared by the C API and tests.

#include <optional>
#include <string>
#include <string_view>

#include "qq/quiver.hpp"
#include "qq/vmonoid.hpp"

namespace qq::report {

enum class Verdict { Affirmative = 0, Negative = 1, Inconclusive = 3 };

struct Outcome {
  Verdict verdict = Verdict::Affirmative;
  std::string text;
};

std::string info(const QuantumQuiver& q, bool json);
Outcome completeness(const QuantumQuiver& q, bool json);
Outcome divisibility(const QuantumQuiver& q, bool json);
Outcome weak_iso(const QuantumQuiver& a, const QuantumQuiver& b, bool json);
// format: "json" or "text"; throws InvalidArgument otherwise.
std::string lpa(const QuantumQuiver& q, std::string_view format);
Outcome lpa_compare(const QuantumQuiver& q, bool json);
std::string monoid(const QuantumQuiver& q, bool json);
Outcome monoid_eq(const QuantumQuiver& q, std::string_view lhs, std::string_view rhs,
                  const MonoidEqOptions& options, bool json);
// All non-sink classes when `class_id` is empty.
Outcome verify_witnesses(const QuantumQuiver& q, std::optional<std::string> class_id, bool json);

}  // namespace qq::report
