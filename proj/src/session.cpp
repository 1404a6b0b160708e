#include "chainlift/session.hpp"

#include <chrono>
#include <fstream>
#include <future>
#include <set>
#include <sstream>

#include "chainlift/error.hpp"
#include "chainlift/parser.hpp"

namespace chainlift {

std::string SessionTask::kind_name() const {
  switch (kind) {
    case Kind::Contract: return "contract";
    case Kind::Lift: return "lift";
    case Kind::Obstruct: return "obstruct";
    case Kind::CheckContraction: return "check-contraction";
    case Kind::VerifyChain: return "verify-chain";
  }
  return "?";
}

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

std::vector<std::string> split_commas(const std::string& text,
                                      std::size_t line_no) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
      continue;
    }
    cur += c;
  }
  parts.push_back(cur);
  for (auto& p : parts) {
    while (!p.empty() && std::isspace(static_cast<unsigned char>(p.front())))
      p.erase(p.begin());
    while (!p.empty() && std::isspace(static_cast<unsigned char>(p.back())))
      p.pop_back();
    if (p.empty())
      fail(ErrorKind::SyntaxError, "empty list entry", line_no);
  }
  return parts;
}

class SessionParser {
public:
  explicit SessionParser(std::string_view text) : text_(text) {}

  SessionScript run() {
    std::istringstream in{std::string(text_)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::vector<std::string> words = split_words(line);
      if (words.empty()) continue;
      dispatch(words, line_no);
    }
    return std::move(script_);
  }

private:
  [[noreturn]] void bad(const std::string& msg, std::size_t line_no) {
    fail(ErrorKind::SyntaxError, msg + " (line " + std::to_string(line_no) + ")",
         line_no);
  }

  [[noreturn]] void unresolved(const std::string& what, const std::string& name,
                               std::size_t line_no) {
    fail(ErrorKind::ResolutionError,
         what + " " + name + " not declared (line " + std::to_string(line_no) +
             ")",
         line_no);
  }

  void declare(const std::string& name, std::size_t line_no) {
    if (!names_.insert(name).second)
      bad("duplicate name " + name, line_no);
  }

  // Splits words[from..] into keyword -> argument-text runs.
  std::map<std::string, std::string> keyword_args(
      const std::vector<std::string>& words, std::size_t from,
      const std::set<std::string>& keywords, std::size_t line_no) {
    std::map<std::string, std::string> out;
    std::string current;
    for (std::size_t i = from; i < words.size(); ++i) {
      if (keywords.count(words[i])) {
        current = words[i];
        if (out.count(current)) bad("repeated clause " + current, line_no);
        out[current] = "";
        continue;
      }
      if (current.empty()) bad("unexpected token " + words[i], line_no);
      std::string& arg = out[current];
      if (!arg.empty()) arg += ' ';
      arg += words[i];
    }
    return out;
  }

  const PresentedRing& ring_of(const std::string& name, std::size_t line_no) {
    auto it = script_.rings.find(name);
    if (it == script_.rings.end()) unresolved("ring", name, line_no);
    return it->second;
  }

  const Ideal& ideal_of(const std::string& name, std::size_t line_no) {
    auto it = script_.ideals.find(name);
    if (it == script_.ideals.end()) unresolved("ideal", name, line_no);
    return it->second;
  }

  void dispatch(const std::vector<std::string>& words, std::size_t line_no) {
    const std::string& directive = words[0];
    if (directive == "ring") return parse_ring(words, line_no);
    if (directive == "ideal") return parse_ideal(words, line_no);
    if (directive == "mset") return parse_mset(words, line_no);
    if (directive == "map") return parse_map(words, line_no);
    if (directive == "chain") return parse_chain(words, line_no);
    if (directive == "ladder") return parse_ladder(words, line_no);
    if (directive == "task") return parse_task(words, line_no);
    bad("unknown directive " + directive, line_no);
  }

  void parse_ring(const std::vector<std::string>& words, std::size_t line_no) {
    if (words.size() < 2) bad("ring needs a name", line_no);
    const std::string& name = words[1];
    auto args = keyword_args(words, 2, {"vars", "char", "grading", "relations"},
                             line_no);
    if (!args.count("vars")) bad("ring needs a vars clause", line_no);
    std::vector<std::string> vars = split_commas(args["vars"], line_no);
    std::uint32_t chr = 0;
    if (args.count("char")) chr = static_cast<std::uint32_t>(std::stoul(args["char"]));
    std::optional<Grading> grading;
    if (args.count("grading")) {
      Grading g;
      for (const auto& w : split_commas(args["grading"], line_no))
        g.push_back(std::stol(w));
      grading = std::move(g);
    }
    declare(name, line_no);
    RingPtr ring;
    try {
      ring = PolyRing::make(vars, chr, grading);
    } catch (const Error& e) {
      bad(e.what(), line_no);
    }
    Ideal relations = Ideal::zero(ring);
    if (args.count("relations")) {
      std::vector<Polynomial> rels;
      for (const auto& s : split_commas(args["relations"], line_no))
        rels.push_back(parse_line_poly(s, ring, line_no));
      relations = Ideal(ring, std::move(rels));
    }
    script_.rings.emplace(name, PresentedRing{ring, std::move(relations)});
  }

  Polynomial parse_line_poly(const std::string& text, const RingPtr& ring,
                             std::size_t line_no) {
    try {
      return parse_poly(text, ring);
    } catch (const Error& e) {
      fail(e.kind(), std::string(e.what()) + " (line " +
           std::to_string(line_no) + ")", line_no);
    }
  }

  void parse_ideal(const std::vector<std::string>& words, std::size_t line_no) {
    if (words.size() < 2) bad("ideal needs a name", line_no);
    const std::string& name = words[1];
    auto args = keyword_args(words, 2, {"in", "gens"}, line_no);
    if (!args.count("in") || !args.count("gens"))
      bad("ideal needs 'in RING gens ...'", line_no);
    const PresentedRing& ring = ring_of(args["in"], line_no);
    std::vector<Polynomial> gens;
    for (const auto& s : split_commas(args["gens"], line_no))
      gens.push_back(parse_line_poly(s, ring.ambient, line_no));
    declare(name, line_no);
    script_.ideals.emplace(name, Ideal(ring.ambient, std::move(gens)));
  }

  void parse_mset(const std::vector<std::string>& words, std::size_t line_no) {
    if (words.size() < 2) bad("mset needs a name", line_no);
    const std::string& name = words[1];
    auto args = keyword_args(words, 2, {"in", "gens"}, line_no);
    if (!args.count("in") || !args.count("gens"))
      bad("mset needs 'in RING gens ...'", line_no);
    const PresentedRing& ring = ring_of(args["in"], line_no);
    std::vector<Polynomial> gens;
    for (const auto& s : split_commas(args["gens"], line_no))
      gens.push_back(parse_line_poly(s, ring.ambient, line_no));
    declare(name, line_no);
    try {
      script_.msets.emplace(name,
                            MultiplicativeSetFG(ring.ambient, std::move(gens)));
    } catch (const Error& e) {
      bad(e.what(), line_no);
    }
  }

  void parse_map(const std::vector<std::string>& words, std::size_t line_no) {
    // map NAME SRC -> DST images p1, p2
    if (words.size() < 5 || words[3] != "->")
      bad("map needs 'map NAME SRC -> DST images ...'", line_no);
    const std::string& name = words[1];
    const PresentedRing& src = ring_of(words[2], line_no);
    const PresentedRing& dst = ring_of(words[4], line_no);
    auto args = keyword_args(words, 5, {"images"}, line_no);
    if (!args.count("images")) bad("map needs an images clause", line_no);
    std::vector<Polynomial> images;
    for (const auto& s : split_commas(args["images"], line_no))
      images.push_back(parse_line_poly(s, dst.ambient, line_no));
    declare(name, line_no);
    try {
      script_.maps.emplace(name, RingMap(src, dst, std::move(images)));
    } catch (const Error& e) {
      bad(e.what(), line_no);
    }
  }

  void parse_chain(const std::vector<std::string>& words, std::size_t line_no) {
    if (words.size() < 2) bad("chain needs a name", line_no);
    const std::string& name = words[1];
    auto args = keyword_args(words, 2, {"in", "levels"}, line_no);
    if (!args.count("in") || !args.count("levels"))
      bad("chain needs 'in RING levels ...'", line_no);
    const PresentedRing& ring = ring_of(args["in"], line_no);
    ChainDecl decl;
    decl.ring_name = args["in"];
    for (const auto& level : split_commas(args["levels"], line_no)) {
      const Ideal& ideal = ideal_of(level, line_no);
      require_same_ring(ideal.ring(), ring.ambient);
      decl.level_names.push_back(level);
    }
    declare(name, line_no);
    script_.chains.emplace(name, std::move(decl));
  }

  void parse_ladder(const std::vector<std::string>& words,
                    std::size_t line_no) {
    if (words.size() < 2) bad("ladder needs a name", line_no);
    const std::string& name = words[1];
    auto args = keyword_args(words, 2, {"in", "ideals", "msets"}, line_no);
    if (!args.count("in") || !args.count("ideals") || !args.count("msets"))
      bad("ladder needs 'in RING ideals ... msets ...'", line_no);
    const PresentedRing& ring = ring_of(args["in"], line_no);
    std::vector<Ideal> ideals;
    for (const auto& n : split_commas(args["ideals"], line_no))
      ideals.push_back(ideal_of(n, line_no));
    std::vector<MultiplicativeSetFG> msets;
    for (const auto& n : split_commas(args["msets"], line_no)) {
      auto it = script_.msets.find(n);
      if (it == script_.msets.end()) unresolved("mset", n, line_no);
      msets.push_back(it->second);
    }
    declare(name, line_no);
    try {
      script_.ladders.emplace(
          name, LadderSpec(ring.ambient, std::move(ideals), std::move(msets)));
    } catch (const Error& e) {
      bad(e.what(), line_no);
    }
  }

  void parse_task(const std::vector<std::string>& words, std::size_t line_no) {
    if (words.size() < 3) bad("task needs a name and a kind", line_no);
    SessionTask task;
    task.name = words[1];
    task.line = line_no;
    const std::string& kind = words[2];
    std::vector<std::string> rest(words.begin() + 3, words.end());
    if (rest.size() >= 2 && rest[rest.size() - 2] == "bound") {
      task.bound = static_cast<unsigned>(std::stoul(rest.back()));
      rest.pop_back();
      rest.pop_back();
    }
    auto expect_args = [&](std::size_t n) {
      if (rest.size() != n)
        bad("task " + kind + " expects " + std::to_string(n) + " arguments",
            line_no);
    };
    if (kind == "contract") {
      task.kind = SessionTask::Kind::Contract;
      expect_args(2);
      require_map(rest[0], line_no);
      ideal_of(rest[1], line_no);
    } else if (kind == "lift") {
      task.kind = SessionTask::Kind::Lift;
      expect_args(2);
      require_map(rest[0], line_no);
      require_chain(rest[1], line_no);
    } else if (kind == "obstruct") {
      task.kind = SessionTask::Kind::Obstruct;
      expect_args(1);
      if (!script_.ladders.count(rest[0]))
        unresolved("ladder", rest[0], line_no);
    } else if (kind == "check-contraction") {
      task.kind = SessionTask::Kind::CheckContraction;
      expect_args(2);
      require_map(rest[0], line_no);
      ideal_of(rest[1], line_no);
    } else if (kind == "verify-chain") {
      task.kind = SessionTask::Kind::VerifyChain;
      expect_args(3);
      require_map(rest[0], line_no);
      require_chain(rest[1], line_no);
      require_chain(rest[2], line_no);
    } else {
      bad("unknown task kind " + kind, line_no);
    }
    task.args = rest;
    declare(task.name, line_no);
    script_.tasks.push_back(std::move(task));
  }

  void require_map(const std::string& name, std::size_t line_no) {
    if (!script_.maps.count(name)) unresolved("map", name, line_no);
  }
  void require_chain(const std::string& name, std::size_t line_no) {
    if (!script_.chains.count(name)) unresolved("chain", name, line_no);
  }

  std::string_view text_;
  SessionScript script_;
  std::set<std::string> names_;
};

}  // namespace

SessionScript parse_session(std::string_view text) {
  return SessionParser(text).run();
}

SessionScript parse_session_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_session(buf.str());
}

namespace {

nlohmann::ordered_json basis_json(const Ideal& I) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& g : I.canonical_gens()) out.push_back(g.str());
  return out;
}

PrimeChain build_chain(const SessionScript& script, const std::string& name,
                       const RingMap& map, bool source_side) {
  const ChainDecl& decl = script.chains.at(name);
  std::vector<Ideal> levels;
  for (const auto& n : decl.level_names) levels.push_back(script.ideals.at(n));
  const PresentedRing& ring =
      source_side ? map.source() : map.target();
  return PrimeChain::make(ring, std::move(levels));
}

Report execute_task(const SessionScript& script, const SessionTask& task,
                    const RunOptions& options) {
  Report report;
  report.task = task.name;
  report.kind = task.kind_name();
  unsigned bound = options.bound_override.value_or(task.bound.value_or(2));
  auto t0 = std::chrono::steady_clock::now();
  try {
    switch (task.kind) {
      case SessionTask::Kind::Contract: {
        const RingMap& map = script.maps.at(task.args[0]);
        const Ideal& J = script.ideals.at(task.args[1]);
        Ideal con = contract_ideal(map, J);
        report.verdict = "ok";
        report.passed = true;
        report.data["ideal"] = J.str();
        report.data["contraction"] = basis_json(con);
        break;
      }
      case SessionTask::Kind::CheckContraction: {
        const RingMap& map = script.maps.at(task.args[0]);
        const Ideal& I = script.ideals.at(task.args[1]);
        ContractionCheck check = contraction_property_check(map, I);
        report.verdict = check.holds ? "Holds" : "Fails";
        report.passed = check.holds;
        report.data["ideal"] = I.str();
        report.data["contraction"] = basis_json(check.contraction);
        if (check.witness) report.data["witness"] = check.witness->str();
        break;
      }
      case SessionTask::Kind::Lift: {
        const RingMap& map = script.maps.at(task.args[0]);
        PrimeChain source = build_chain(script, task.args[1], map, true);
        LiftOutcome outcome = lift_chain(map, source, {}, bound);
        if (outcome.found()) {
          const LiftResult& lift = *outcome.result;
          report.verdict = "ok";
          report.passed = true;
          nlohmann::ordered_json chain = nlohmann::ordered_json::array();
          for (const auto& level : lift.target.levels()) {
            nlohmann::ordered_json entry;
            entry["ideal"] = level.ideal.str();
            entry["primality"] = level.status.kind_name();
            chain.push_back(entry);
          }
          report.data["lifted_chain"] = chain;
          nlohmann::ordered_json transcripts = nlohmann::ordered_json::array();
          for (const auto& t : lift.transcripts) {
            nlohmann::ordered_json entry;
            entry["level"] = t.level;
            entry["contraction"] = t.contracted_basis;
            entry["source"] = t.source_basis;
            transcripts.push_back(entry);
          }
          report.data["contraction_transcripts"] = transcripts;
          ChainLengthReport lengths = chain_length_report(lift);
          report.data["source_length"] = lengths.source_length;
          report.data["target_length"] = lengths.target_length;
        } else {
          report.verdict = "NotFound";
          report.passed = false;
          nlohmann::ordered_json levels = nlohmann::ordered_json::array();
          for (const auto& level : outcome.level_candidates)
            levels.push_back(level);
          report.data["surviving_candidates"] = levels;
        }
        break;
      }
      case SessionTask::Kind::Obstruct: {
        const LadderSpec& ladder = script.ladders.at(task.args[0]);
        ObstructionResult res = obstruction_search(ladder, bound);
        report.verdict = res.verdict();
        report.passed = !res.obstructed;
        report.data["bound"] = bound;
        if (res.certificate) {
          report.data["certificate"] = certificate_to_json(*res.certificate);
          if (options.cert_dir) {
            std::string path =
                *options.cert_dir + "/" + task.name + ".cert.json";
            write_certificate_file(path, *res.certificate);
            report.data["certificate_file"] = path;
          }
        }
        break;
      }
      case SessionTask::Kind::VerifyChain: {
        const RingMap& map = script.maps.at(task.args[0]);
        PrimeChain source = build_chain(script, task.args[1], map, true);
        const ChainDecl& target_decl = script.chains.at(task.args[2]);
        std::vector<Ideal> target;
        for (const auto& n : target_decl.level_names)
          target.push_back(script.ideals.at(n));
        ChainReport chain_report = verify_chain(map, source, target);
        report.verdict = chain_report.ok
                             ? "ok"
                             : chain_report.failure.value_or("failed");
        report.passed = chain_report.ok;
        nlohmann::ordered_json entries = nlohmann::ordered_json::array();
        for (const auto& e : chain_report.entries) {
          nlohmann::ordered_json entry;
          entry["level"] = e.level;
          entry["check"] = e.check;
          entry["ok"] = e.ok;
          if (!e.detail.empty()) entry["detail"] = e.detail;
          entries.push_back(entry);
        }
        report.data["checks"] = entries;
        break;
      }
    }
  } catch (const std::exception& e) {
    report.verdict = "error";
    report.passed = false;
    report.data["message"] = e.what();
  }
  auto t1 = std::chrono::steady_clock::now();
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();
  return report;
}

}  // namespace

std::vector<Report> run_session(const SessionScript& script,
                                const RunOptions& options) {
  std::vector<const SessionTask*> selected;
  for (const auto& task : script.tasks) {
    if (options.task_filter && task.name != *options.task_filter) continue;
    selected.push_back(&task);
  }
  if (options.task_filter && selected.empty())
    fail(ErrorKind::ResolutionError, "no task named " + *options.task_filter);

  std::vector<Report> reports(selected.size());
  if (options.parallel) {
    std::vector<std::future<Report>> futures;
    futures.reserve(selected.size());
    for (const SessionTask* task : selected)
      futures.push_back(std::async(std::launch::async, [&, task] {
        return execute_task(script, *task, options);
      }));
    for (std::size_t i = 0; i < futures.size(); ++i)
      reports[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < selected.size(); ++i)
      reports[i] = execute_task(script, *selected[i], options);
  }
  return reports;
}

nlohmann::ordered_json report_to_json(const Report& report) {
  nlohmann::ordered_json j;
  j["task"] = report.task;
  j["kind"] = report.kind;
  j["verdict"] = report.verdict;
  j["passed"] = report.passed;
  j["data"] = report.data;
  j["elapsed_ms"] = report.elapsed_ms;
  j["version"] = std::string(kToolName) + " " + kToolVersion;
  return j;
}

std::string report_human_line(const Report& report) {
  std::string line = report.passed ? "[ ok ] " : "[FAIL] ";
  line += report.task + " (" + report.kind + "): " + report.verdict;
  if (report.data.contains("contraction"))
    line += " contraction=" + report.data["contraction"].dump();
  if (report.data.contains("witness"))
    line += " witness=" + report.data["witness"].get<std::string>();
  if (report.data.contains("lifted_chain")) {
    line += " chain=";
    for (const auto& e : report.data["lifted_chain"])
      line += e["ideal"].get<std::string>() + " ";
  }
  if (report.data.contains("message"))
    line += " " + report.data["message"].get<std::string>();
  return line;
}

bool all_passed(const std::vector<Report>& reports) {
  for (const auto& r : reports)
    if (!r.passed) return false;
  return true;
}

}  // namespace chainlift
