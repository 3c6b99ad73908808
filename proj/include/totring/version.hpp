#pragma once

namespace totring {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchema = "totring-report/1";
inline constexpr const char* kSelfcheckSchema = "totring-selfcheck/1";

} // namespace totring
