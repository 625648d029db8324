#pragma once
#include <string>

#include "opns/nschreier.hpp"

namespace opns {

inline constexpr const char* kReportSchemaVersion = "1";

// Ordering-stable JSON serializations; identical inputs give byte-identical
// text.
std::string nsReportJson(const ShuffleSignature& sig, const NSReport& r);
std::string nsReportSummary(const ShuffleSignature& sig, const NSReport& r);
std::string gbJson(const ShuffleSignature& sig, const TruncatedGB& gb,
                   const std::string& presentationName);
std::string completionEventJsonLine(const CompletionEvent& e);

} // namespace opns
