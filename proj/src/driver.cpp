// Copyright 2026 The clp2chc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "clp2chc/driver.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <ostream>
#include <sstream>

extern char** environ;

namespace clp2chc {

using syntax::Diagnostic;
using Clock = std::chrono::steady_clock;

std::string_view to_string(Status s) {
  switch (s) {
    case Status::kTranslated: return "translated";
    case Status::kSat: return "sat";
    case Status::kUnsat: return "unsat";
    case Status::kUnknown: return "unknown";
    case Status::kAgree: return "agree";
    case Status::kDisagree: return "disagree";
    case Status::kError: return "error";
  }
  return "error";
}

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::kTranslate: return "translate";
    case Mode::kOracle: return "oracle";
    case Mode::kSolve: return "solve";
    case Mode::kDiff: return "diff";
  }
  return "translate";
}

std::string format_message(const std::string& file, const Message& m) {
  std::string severity = m.severity == Diagnostic::Severity::kError     ? "error"
                         : m.severity == Diagnostic::Severity::kWarning ? "warning"
                                                                        : "note";
  std::ostringstream os;
  os << file << ':';
  if (m.span) os << m.span->line << ':' << m.span->column << ':';
  os << ' ' << severity << ": " << m.text;
  return os.str();
}

std::optional<std::string> default_solver() {
  const char* env = std::getenv("CLP2CHC_SOLVER");
  if (env == nullptr || *env == '\0') return std::nullopt;
  return std::string(env);
}

// ---------------------------------------------------------------------------
// Solver bridge
// ---------------------------------------------------------------------------

namespace {

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::optional<std::string> first_answer(const std::string& output) {
  std::istringstream in(output);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t == "sat" || t == "unsat" || t == "unknown") return t;
  }
  return std::nullopt;
}

struct TempFile {
  std::string path;
  ~TempFile() {
    if (!path.empty()) ::unlink(path.c_str());
  }
};

}  // namespace

SolverResult run_solver(const std::string& solver, const std::vector<std::string>& args,
                        const std::string& script, double timeout_seconds) {
  SolverResult result;

  const char* tmpdir = std::getenv("TMPDIR");
  std::string pattern = std::string(tmpdir && *tmpdir ? tmpdir : "/tmp") + "/clp2chc-XXXXXX.smt2";
  std::vector<char> name(pattern.begin(), pattern.end());
  name.push_back('\0');
  int fd = ::mkstemps(name.data(), 5);
  if (fd < 0) {
    result.error = std::string("cannot create temporary file: ") + std::strerror(errno);
    return result;
  }
  TempFile file{name.data()};
  for (std::size_t written = 0; written < script.size();) {
    ssize_t n = ::write(fd, script.data() + written, script.size() - written);
    if (n <= 0) {
      ::close(fd);
      result.error = "cannot write temporary file";
      return result;
    }
    written += static_cast<std::size_t>(n);
  }
  ::close(fd);

  int pipefd[2];
  if (::pipe(pipefd) != 0) {
    result.error = std::string("pipe: ") + std::strerror(errno);
    return result;
  }
  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_addclose(&actions, pipefd[0]);
  posix_spawn_file_actions_adddup2(&actions, pipefd[1], STDOUT_FILENO);
  posix_spawn_file_actions_adddup2(&actions, pipefd[1], STDERR_FILENO);
  posix_spawn_file_actions_addclose(&actions, pipefd[1]);
  posix_spawn_file_actions_addopen(&actions, STDIN_FILENO, "/dev/null", O_RDONLY, 0);

  std::vector<std::string> argv_storage{solver};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  argv_storage.push_back(file.path);
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());
  argv.push_back(nullptr);

  pid_t pid = 0;
  int rc = ::posix_spawnp(&pid, solver.c_str(), &actions, nullptr, argv.data(), environ);
  posix_spawn_file_actions_destroy(&actions);
  ::close(pipefd[1]);
  if (rc != 0) {
    ::close(pipefd[0]);
    result.error = "cannot start solver '" + solver + "': " + std::strerror(rc);
    return result;
  }

  auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(timeout_seconds));
  bool timed_out = false;
  char buf[4096];
  while (true) {
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now());
    if (left.count() <= 0) {
      timed_out = true;
      break;
    }
    pollfd p{pipefd[0], POLLIN, 0};
    int ready = ::poll(&p, 1, static_cast<int>(std::min<long long>(left.count(), 1000)));
    if (ready < 0 && errno == EINTR) continue;
    if (ready == 0) continue;
    ssize_t n = ::read(pipefd[0], buf, sizeof buf);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) break;
    result.output.append(buf, static_cast<std::size_t>(n));
  }
  ::close(pipefd[0]);
  if (timed_out) ::kill(pid, SIGKILL);
  int wstatus = 0;
  while (::waitpid(pid, &wstatus, 0) < 0 && errno == EINTR) {
  }

  if (timed_out) {
    result.outcome = SolverResult::Outcome::kTimeout;
    std::ostringstream msg;
    msg << "solver timed out after " << timeout_seconds << " s";
    result.error = msg.str();
    return result;
  }
  if (auto a = first_answer(result.output)) {
    result.outcome = SolverResult::Outcome::kAnswered;
    result.answer = *a;
    return result;
  }
  if (WIFEXITED(wstatus) && WEXITSTATUS(wstatus) == 127) {
    result.outcome = SolverResult::Outcome::kLaunchFailure;
    result.error = "cannot start solver '" + solver + "'";
    return result;
  }
  result.outcome = SolverResult::Outcome::kNoAnswer;
  std::string head = trim(result.output.substr(0, 200));
  result.error = "solver gave no sat/unsat/unknown answer" + (head.empty() ? "" : ": " + head);
  return result;
}

// ---------------------------------------------------------------------------
// run
// ---------------------------------------------------------------------------

namespace {

class Timer {
 public:
  Timer(RunReport& r, std::string phase) : report_(r), phase_(std::move(phase)), start_(Clock::now()) {}
  ~Timer() {
    report_.timings.push_back(
        {phase_, std::chrono::duration<double>(Clock::now() - start_).count()});
  }

 private:
  RunReport& report_;
  std::string phase_;
  Clock::time_point start_;
};

RunReport& fail(RunReport& r, int code, std::string text, std::optional<Span> span = std::nullopt) {
  r.diagnostics.push_back({Diagnostic::Severity::kError, std::move(text), span});
  r.status = Status::kError;
  r.exit_code = code;
  return r;
}

Status oracle_status(const oracle::QueryAnswer& a) {
  if (a.derivable) return Status::kUnsat;
  if (a.exhaustive) return Status::kSat;
  return Status::kUnknown;
}

void print_oracle(const oracle::QueryAnswer& a, std::ostream& out) {
  out << (a.derivable ? "derivable" : "not derivable") << '\n';
  for (const auto& [name, value] : a.witness) {
    out << "  " << name << " = " << syntax::print_term(value) << '\n';
  }
  out << "saturated: " << (a.saturated ? "yes" : "no") << '\n';
  out << "exhaustive: " << (a.exhaustive ? "yes" : "no") << '\n';
}

}  // namespace

RunReport run(const RunConfig& cfg, std::ostream& out) {
  RunReport r;

  std::string text;
  {
    Timer t(r, "read");
    std::ifstream in(cfg.input, std::ios::binary);
    if (!in) return fail(r, 1, "cannot read input file");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }

  syntax::Database db;
  {
    Timer t(r, "parse");
    try {
      db = syntax::parse_program(text);
    } catch (const Error& e) {
      return fail(r, 1, e.what(), e.span());
    }
  }
  for (const auto& d : db.diagnostics) r.diagnostics.push_back({d.severity, d.message, d.span});

  if (cfg.dump_ast) {
    std::istringstream lines(syntax::print_program(db));
    std::string line;
    while (std::getline(lines, line)) out << "; " << line << '\n';
  }

  std::string script;
  {
    Timer t(r, "translate");
    try {
      Translation tr = translate(db, cfg.translate);
      for (const auto& n : tr.notes) r.diagnostics.push_back({n.severity, n.message, n.span});
      script = smt::emit(tr.script, cfg.style);
    } catch (const Error& e) {
      return fail(r, 1, e.what(), e.span());
    }
  }

  if (cfg.output) {
    Timer t(r, "write");
    std::ofstream f(*cfg.output, std::ios::binary);
    if (!(f << script)) return fail(r, 1, "cannot write " + *cfg.output);
  } else if (cfg.mode == Mode::kTranslate) {
    out << script;
  }
  if (cfg.mode == Mode::kTranslate) {
    r.status = Status::kTranslated;
    r.exit_code = 0;
    return r;
  }

  if (cfg.mode == Mode::kOracle || cfg.mode == Mode::kDiff) {
    Timer t(r, "oracle");
    try {
      oracle::Bounds bounds = cfg.bounds;
      bounds.force_features = bounds.force_features || cfg.translate.force_features;
      r.oracle = oracle::program_query_holds(db, bounds);
    } catch (const Error& e) {
      return fail(r, 1, std::string("oracle: ") + e.what(), e.span());
    }
  }
  if (cfg.mode == Mode::kOracle) {
    print_oracle(*r.oracle, out);
    r.status = oracle_status(*r.oracle);
    r.exit_code = 0;
    out << "status: " << to_string(r.status) << '\n';
    return r;
  }

  std::optional<std::string> solver = cfg.solver ? cfg.solver : default_solver();
  if (!solver) return fail(r, 2, "no solver configured; use --solver or CLP2CHC_SOLVER");
  SolverResult sr;
  {
    Timer t(r, "solve");
    sr = run_solver(*solver, cfg.solver_args, script, cfg.timeout_seconds);
  }
  const oracle::QueryAnswer* a = r.oracle ? &*r.oracle : nullptr;
  if (a) {
    out << "oracle: " << (a->derivable ? "derivable" : "not derivable")
        << (a->saturated ? ", saturated" : ", not saturated") << (a->exhaustive ? ", exhaustive" : "")
        << '\n';
  }
  if (sr.outcome == SolverResult::Outcome::kTimeout) {
    r.diagnostics.push_back({Diagnostic::Severity::kError, sr.error, std::nullopt});
    r.status = Status::kUnknown;
    r.exit_code = 2;
    if (a) out << "solver: timeout\n";
    out << (a ? "unknown" : "timeout") << '\n';
    return r;
  }
  if (sr.outcome != SolverResult::Outcome::kAnswered) return fail(r, 2, sr.error);
  r.solver_answer = sr.answer;

  if (cfg.mode == Mode::kSolve) {
    r.status = sr.answer == "sat" ? Status::kSat : sr.answer == "unsat" ? Status::kUnsat : Status::kUnknown;
    r.exit_code = 0;
    out << sr.answer << '\n';
    return r;
  }

  // Derived facts are sound whatever the bounds, so a derivable query must
  // be unsat. A negative oracle answer only counts when the run saturated;
  // it contradicts unsat only when no instance was cut off by the bounds.
  if (sr.answer == "unknown") {
    r.status = Status::kUnknown;
  } else if (a->derivable) {
    r.status = sr.answer == "unsat" ? Status::kAgree : Status::kDisagree;
  } else if (!a->saturated) {
    r.status = Status::kUnknown;
  } else if (sr.answer == "sat") {
    r.status = Status::kAgree;
  } else {
    r.status = a->exhaustive ? Status::kDisagree : Status::kUnknown;
  }
  r.exit_code = r.status == Status::kDisagree ? 3 : 0;
  out << "solver: " << sr.answer << '\n';
  out << to_string(r.status) << '\n';
  return r;
}

}  // namespace clp2chc
