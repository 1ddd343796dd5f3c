#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

namespace apolar::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kRejected = 2, kInternal = 3 };

struct Report {
  nlohmann::json json;
  int exit_code = kOk;
};

Report cmd_classify(const std::string& h_text);
Report cmd_construct(const std::string& h_text, const std::optional<std::string>& dual_F,
                     const std::optional<std::string>& dual_G, const std::string& field = "q");
// Exactly one of ideal_text and dual_text must be set.
Report cmd_decompose(const std::optional<std::string>& ideal_text, const std::optional<std::string>& dual_text,
                     bool predict = true, const std::string& field = "q");
// jobs = 0 uses every hardware thread.
Report cmd_sweep(int socle_max, const std::string& field = "q", unsigned jobs = 0);
Report cmd_hf(const std::string& ideal_text, const std::string& field = "q");
Report cmd_ann(const std::string& dual_text, const std::string& field = "q");

// Human-readable rendering used by --pretty.
std::string render_text(const nlohmann::json& j);

// Full command line front end; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace apolar::cli
