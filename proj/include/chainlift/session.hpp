#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "chainlift/chain.hpp"

namespace chainlift {

inline constexpr const char* kToolName = "chainlift";
inline constexpr const char* kToolVersion = "0.1.0";

// Line-oriented session grammar:
//   ring B vars X,Y,Z char 0 grading 1,1,-1 [relations p1, p2]
//   ideal q1 in B gens X, Y^2*Z-1
//   mset F0 in B gens Y*Z
//   map phi A -> B images X*Z, Y*Z
//   chain C in A levels p0, p1
//   ladder L in B ideals a0, a1 msets F0, F1
//   task t1 contract phi q1
//   task t2 lift phi C bound 3
//   task t3 obstruct L bound 2
//   task t4 check-contraction phi p0
//   task t5 verify-chain phi C Q
// '#' starts a comment; names are unique; declaration before use.
struct SessionTask {
  enum class Kind { Contract, Lift, Obstruct, CheckContraction, VerifyChain };
  std::string name;
  Kind kind;
  std::vector<std::string> args;
  std::optional<unsigned> bound;
  std::size_t line = 0;
  std::string kind_name() const;
};

struct ChainDecl {
  std::string ring_name;
  std::vector<std::string> level_names;
};

struct SessionScript {
  std::map<std::string, PresentedRing> rings;
  std::map<std::string, Ideal> ideals;
  std::map<std::string, MultiplicativeSetFG> msets;
  std::map<std::string, RingMap> maps;
  std::map<std::string, ChainDecl> chains;
  std::map<std::string, LadderSpec> ladders;
  std::vector<SessionTask> tasks;
};

// SyntaxError / ResolutionError carry the 1-based line number.
SessionScript parse_session(std::string_view text);
SessionScript parse_session_file(const std::string& path);

struct RunOptions {
  std::optional<std::string> task_filter;
  std::optional<unsigned> bound_override;
  bool parallel = false;
  // Obstructed tasks write their certificate to <dir>/<task>.cert.json.
  std::optional<std::string> cert_dir;
};

struct Report {
  std::string task;
  std::string kind;
  std::string verdict;
  bool passed = false;
  nlohmann::ordered_json data;
  double elapsed_ms = 0.0;
};

// Executes tasks in declaration order (concurrently under options.parallel,
// reports still in order). Library errors become failed reports, not
// crashes.
std::vector<Report> run_session(const SessionScript& script,
                                const RunOptions& options);

nlohmann::ordered_json report_to_json(const Report& report);
std::string report_human_line(const Report& report);
bool all_passed(const std::vector<Report>& reports);

}  // namespace chainlift
