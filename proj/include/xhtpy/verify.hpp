#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xhtpy/io.hpp"
#include "xhtpy/json_io.hpp"

namespace xhtpy {

struct Figure1 {
  Graph a, b, c;
  GraphMap f, g;  // f: A -> B inclusion, g: B -> C collapse
};

struct Figure2 {
  Graph a, b;
  GraphMap f;  // 1 -> a, {2,4} -> b, {3,5} -> c
  GraphMap h;  // the retraction along the folds 5->1, 4->2
};

struct Figure3 {
  Graph a, b, c, d;
  GraphMap f, g, h;  // induced inclusions A -> B -> C -> D
};

struct TwoColouring {
  Graph c6, k2;
  GraphMap h;  // i -> i mod 2
};

// Text of the shipped data files, compiled in.
std::string_view builtin_data(std::string_view name);
std::vector<std::string> builtin_data_names();
Document builtin_document(std::string_view name);

Figure1 build_figure1();
Figure2 build_figure2();
Figure3 build_figure3();
TwoColouring build_two_colouring();
// The maps fed to the pushout counterexample builder, in file order.
std::vector<NamedMap> build_pushout_inputs();

enum class ClaimKind { Asserted, Informational };
enum class ClaimVerdict { Pass, Fail, Unknown };
std::string_view to_string(ClaimKind k);
std::string_view to_string(ClaimVerdict v);

struct ClaimRecord {
  std::string id;
  std::string location;
  ClaimKind kind = ClaimKind::Asserted;
  ClaimVerdict verdict = ClaimVerdict::Unknown;
  Json evidence;
};

struct VerifyOptions {
  Budget budget{};
  std::uint64_t seed = 0;
};

struct VerificationReport {
  std::string suite;
  VerifyOptions options;
  std::vector<ClaimRecord> claims;  // sorted by id
  bool budget_exceeded = false;

  bool asserted_failure() const;
  // 0 all asserted claims pass, 1 some asserted claim failed, 3 a budget ran out.
  int exit_code() const;
  Json to_json() const;
};

inline constexpr std::string_view kVersion = "0.1.0";

VerificationReport verify_figure1(const VerifyOptions& options = {});
VerificationReport verify_figure2(const VerifyOptions& options = {});
VerificationReport verify_figure3(const VerifyOptions& options = {});
VerificationReport verify_pushout_counterexample(const VerifyOptions& options = {});
VerificationReport verify_cylinder_factorization(const VerifyOptions& options = {});
VerificationReport verify_all(const VerifyOptions& options = {});

// Suite names accepted by run_suite: figure1 figure2 figure3 pushout cylinder all.
std::vector<std::string> suite_names();
// Throws BadParameter for an unknown suite.
VerificationReport run_suite(std::string_view name, const VerifyOptions& options = {});

}  // namespace xhtpy
