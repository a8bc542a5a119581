#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "gre/grammar.hpp"

namespace gre {

// Exit codes shared by all commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;      // validation failure
inline constexpr int kExitUnresolved = 2;   // missing files / names / indices
inline constexpr int kExitInadmissible = 3; // match rejected (POC / condition)

struct CliOptions {
  RewriteType type = RewriteType::Dpo;
  std::optional<int> bound;  // model-check size (vertices and edges)
  std::optional<int> nmax;
  std::string format = "json";  // json | dot
  unsigned long long seed = 0;  // consumed by the randomized test corpora only
};

int cmd_check(const std::string& grammar_path, std::ostream& out, std::ostream& err);
int cmd_apply(const std::string& grammar_path, const std::string& rule_name,
              const std::string& graph_name, int match_index, const CliOptions& opts,
              std::ostream& out, std::ostream& err);
int cmd_compose(const std::string& grammar_path, const std::string& rule2_name,
                const std::string& rule1_name, const CliOptions& opts, std::ostream& out,
                std::ostream& err);
int cmd_feta(const std::string& grammar_path, const std::string& query_name,
             const CliOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace gre
